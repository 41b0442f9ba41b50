// icm: command-line front end for the integrally closed monomial ideal
// library. Every invocation prints one JSON object on stdout.
//
// Exit codes: 0 success, 1 parse error, 2 precondition violation,
// 3 search budget exceeded.

#include "icm/enumerate.hpp"
#include "icm/ideal_class.hpp"
#include "icm/io.hpp"
#include "icm/monoid.hpp"
#include "icm/newton.hpp"
#include "icm/polytope.hpp"
#include "icm/properties.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using nlohmann::json;
using namespace icm;

struct Invocation {
  std::string command;
  std::vector<std::string> args;
  std::vector<std::string> json_files;
  std::optional<std::size_t> dim;
  std::optional<std::size_t> budget;
  std::string neg;
  std::uint64_t seed = 20240601;
  std::size_t cases = 200;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::size_t default_budget() {
  if (const char* env = std::getenv("ICM_BUDGET")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw UsageError("ICM_BUDGET is not a number");
    }
  }
  return SearchOptions{}.max_candidates;
}

std::vector<MonomialIdeal> ideal_args(const Invocation& inv, std::size_t needed) {
  std::vector<MonomialIdeal> out;
  for (const auto& path : inv.json_files) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw ParseError(std::string("invalid JSON in ") + path + ": " + e.what(), e.byte);
    }
    out.push_back(ideal_from_document(doc));
  }
  for (const auto& text : inv.args) out.push_back(parse_ideal(text, inv.dim));
  if (out.size() != needed)
    throw UsageError(inv.command + " expects " + std::to_string(needed) + " ideal(s), got " +
                     std::to_string(out.size()));
  // Without an explicit dimension, pad all ideals to the largest one seen.
  if (!inv.dim && needed > 1) {
    std::size_t d = 0;
    for (const auto& I : out) d = std::max(d, I.dim());
    for (auto& I : out) {
      if (I.dim() == d) continue;
      std::vector<ExponentVector> padded;
      for (const auto& g : I.gens()) {
        ExponentVector p(d);
        for (std::size_t i = 0; i < g.dim(); ++i) p[i] = g[i];
        padded.push_back(std::move(p));
      }
      I = MonomialIdeal::minimalize(padded, d);
    }
  }
  return out;
}

json input_of(const std::vector<MonomialIdeal>& ideals) {
  json in = json::array();
  for (const auto& I : ideals) in.push_back(render(I));
  return in;
}

json verify_lipman(FactorSearch& search) {
  const auto m = MonomialIdeal::maximal(3);
  const auto J = parse_ideal("x^3,y^3,z^3,x*y,x*z,y*z");
  const auto J1 = parse_ideal("x^2,y,z");
  const auto J2 = parse_ideal("x,y^2,z");
  const auto J3 = parse_ideal("x,y,z^2");
  const auto lhs = search.star(m, J);
  const auto rhs = search.star(search.star(J1, J2), J3);
  const auto all = search.all_factorizations(lhs);
  json ords = json::array();
  for (const auto* I : {&J, &J1, &J2, &J3}) ords.push_back(ord(*I).str());
  return {{"equal", lhs == rhs},
          {"product", to_json(lhs)},
          {"ord_m", ord(m).str()},
          {"ords", ords},
          {"distinct_factorizations", std::to_string(all.size())},
          {"factorizations", to_json(all)}};
}

json run(const Invocation& inv, json& input) {
  SearchOptions options;
  options.max_candidates = inv.budget.value_or(default_budget());
  FactorSearch search(options);
  const std::string& cmd = inv.command;

  auto one = [&] {
    auto v = ideal_args(inv, 1);
    input = input_of(v);
    return v.front();
  };
  auto two = [&] {
    auto v = ideal_args(inv, 2);
    input = input_of(v);
    return std::pair{v[0], v[1]};
  };
  auto polytope_element = [&] {
    if (inv.args.size() != 1) throw UsageError(cmd + " expects one polytope argument");
    const auto pos = parse_polytope(inv.args.front());
    const auto neg = inv.neg.empty() ? IntegralPolytope::point(LatticePoint(pos.dim()))
                                     : parse_polytope(inv.neg);
    input = {{"pos", to_json(pos)}, {"neg", to_json(neg)}};
    return PolytopeGroupElement(pos, neg);
  };

  if (cmd == "closure") return to_json(integral_closure(one()));
  if (cmd == "closed?") return is_integrally_closed(one());
  if (cmd == "ord") return ord(one()).str();
  if (cmd == "star") {
    auto [I, J] = two();
    return to_json(star(I, J));
  }
  if (cmd == "colon") {
    auto [I, J] = two();
    return to_json(colon(I, J));
  }
  if (cmd == "factor") {
    const auto f = search.factor_atoms(one());
    json atoms = json::array();
    for (const auto& a : f.atoms) atoms.push_back(to_json(a));
    return {{"atoms", atoms}, {"length", std::to_string(f.atoms.size())}};
  }
  if (cmd == "factorizations") return to_json(search.all_factorizations(one()));
  if (cmd == "irreducible?") return search.is_star_irreducible(one());
  if (cmd == "divides") {
    auto [I, J] = two();
    const auto K = search.divides(I, J);
    return K ? json{{"divides", true}, {"quotient", to_json(*K)}} : json{{"divides", false}};
  }
  if (cmd == "decompose2d") return to_json(decompose_2d(polytope_element()));
  if (cmd == "phi") return to_json(phi_group(polytope_element()));
  if (cmd == "colon-factor") {
    const auto I = one();
    const auto f = colon_factorization_2d(I);
    json out = to_json(f);
    out["evaluates_to"] = to_json(evaluate(f));
    return out;
  }
  if (cmd == "verify") {
    if (inv.args.size() != 1 || inv.args.front() != "lipman")
      throw UsageError("verify expects the example name 'lipman'");
    input = "lipman";
    return verify_lipman(search);
  }
  if (cmd == "props") {
    input = {{"seed", std::to_string(inv.seed)}, {"cases", std::to_string(inv.cases)}};
    json suites = json::array();
    bool all = true;
    for (const auto& r : run_property_suites(inv.seed, inv.cases)) {
      all = all && r.passed();
      suites.push_back({{"name", r.name},
                        {"cases", std::to_string(r.cases)},
                        {"failures", std::to_string(r.failures)},
                        {"first_failure", r.first_failure}});
    }
    return {{"passed", all}, {"suites", suites}};
  }
  throw UsageError("unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrally closed monomial ideals: closure, *-product, factorization, polytope group"};
  Invocation inv;
  app.add_option("command", inv.command,
                 "closure | closed? | star | ord | colon | factor | factorizations | irreducible? | "
                 "divides | decompose2d | phi | colon-factor | verify | props")
      ->required();
  app.add_option("args", inv.args, "ideals such as \"x^2, x*y\", or a polytope \"(0,0) (1,2)\"");
  app.add_option("--json", inv.json_files, "ideal document {\"vars\": d, \"gens\": [[...]]}")
      ->check(CLI::ExistingFile);
  app.add_option("--dim", inv.dim, "ambient number of variables");
  app.add_option("--budget", inv.budget, "max candidate ideals per factor search (default ICM_BUDGET)");
  app.add_option("--neg", inv.neg, "negative part of a polytope group element");
  app.add_option("--seed", inv.seed, "seed for props");
  app.add_option("--cases", inv.cases, "cases per property suite");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  json input = json::array();
  json out{{"command", inv.command}};
  int code = 0;
  try {
    json result = run(inv, input);
    out["input"] = input;
    out["result"] = std::move(result);
  } catch (const BudgetExceeded& e) {
    out["input"] = input;
    out["error"] = {{"kind", "budget"}, {"message", e.what()}, {"examined", std::to_string(e.examined())}};
    code = 3;
  } catch (const ParseError& e) {
    out["input"] = input;
    out["error"] = {{"kind", "parse"}, {"message", e.what()}, {"position", std::to_string(e.position())}};
    code = 1;
  } catch (const UsageError& e) {
    out["input"] = input;
    out["error"] = {{"kind", "usage"}, {"message", e.what()}};
    code = 1;
  } catch (const std::invalid_argument& e) {  // preconditions and dimension mismatches
    out["input"] = input;
    out["error"] = {{"kind", "precondition"}, {"message", e.what()}};
    code = 2;
  }
  std::cout << out.dump() << '\n';
  return code;
}
