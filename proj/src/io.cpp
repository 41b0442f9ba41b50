#include "icm/io.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace icm {

namespace {

constexpr std::size_t kMaxVariables = 1u << 16;

class IdealParser {
 public:
  explicit IdealParser(std::string_view text) : text_(text) {}

  std::vector<std::map<std::size_t, Integer>> parse() {
    std::vector<std::map<std::size_t, Integer>> gens;
    skip_space();
    if (at_end()) fail("empty ideal");
    gens.push_back(generator());
    while (true) {
      skip_space();
      if (at_end()) break;
      expect(',');
      gens.push_back(generator());
    }
    return gens;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  std::map<std::size_t, Integer> generator() {
    std::map<std::size_t, Integer> exps;
    factor(exps);
    while (true) {
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      factor(exps);
    }
    return exps;
  }

  void factor(std::map<std::size_t, Integer>& exps) {
    skip_space();
    if (at_end()) fail("expected a monomial");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      const Integer n = number();
      if (n == 0) fail("zero monomial", start);
      if (n != 1) fail("coefficients other than 1 are not allowed", start);
      return;
    }
    std::size_t index = 0;
    const std::size_t start = pos_;
    switch (c) {
      case 'x':
        ++pos_;
        if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
          const Integer n = number();
          if (n == 0) fail("variable indices start at 1", start);
          if (n > kMaxVariables) fail("variable index overflow", start);
          index = n.convert_to<std::size_t>();
        } else {
          index = 1;
        }
        break;
      case 'y': ++pos_; index = 2; break;
      case 'z': ++pos_; index = 3; break;
      case 'w': ++pos_; index = 4; break;
      default: fail(std::string("unexpected character '") + c + "'");
    }
    Integer e = 1;
    skip_space();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
      e = number();
    }
    exps[index] += e;
    max_index_ = std::max(max_index_, index);
  }

  Integer number() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  void expect(char c) {
    skip_space();
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

std::string variable_name(std::size_t i, std::size_t dim) {
  static const char* aliases[] = {"x", "y", "z", "w"};
  if (dim <= 4) return aliases[i];
  return "x" + std::to_string(i + 1);
}

Integer integer_from_json(const nlohmann::json& v) {
  if (v.is_string()) {
    const auto& s = v.get_ref<const std::string&>();
    if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos)
      throw ParseError("invalid integer string '" + s + "'", 0);
    return Integer(s);
  }
  if (v.is_number_integer()) return Integer(v.get<long long>());
  throw ParseError("expected an integer", 0);
}

}  // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<std::size_t> dim) {
  IdealParser parser(text);
  const auto gens = parser.parse();
  const std::size_t d = dim.value_or(std::max<std::size_t>(parser.max_index(), 1));
  if (d == 0) throw ParseError("dimension must be at least 1", 0);
  if (parser.max_index() > d)
    throw ParseError("variable x" + std::to_string(parser.max_index()) + " exceeds dimension " +
                         std::to_string(d),
                     0);
  std::vector<ExponentVector> points;
  for (const auto& exps : gens) {
    ExponentVector p(d);
    for (const auto& [index, e] : exps) p[index - 1] = e;
    points.push_back(std::move(p));
  }
  return MonomialIdeal::minimalize(points, d);
}

std::string render(const MonomialIdeal& I) {
  std::ostringstream os;
  // Descending lexicographic order reads naturally: x^2, x*y, y^2.
  const auto& gens = I.gens();
  for (std::size_t g = 0; g < gens.size(); ++g) {
    if (g) os << ", ";
    const auto& e = gens[gens.size() - 1 - g];
    bool first = true;
    for (std::size_t i = 0; i < e.dim(); ++i) {
      if (e[i] == 0) continue;
      if (!first) os << '*';
      first = false;
      os << variable_name(i, I.dim());
      if (e[i] != 1) os << '^' << e[i];
    }
    if (first) os << '1';
  }
  return os.str();
}

IntegralPolytope parse_polytope(std::string_view text) {
  std::vector<LatticePoint> pts;
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (std::isspace(static_cast<unsigned char>(text[pos])) ||
                                 text[pos] == ',' || text[pos] == ';'))
      ++pos;
  };
  skip();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '('", pos);
    ++pos;
    std::vector<Integer> coords;
    while (true) {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      const std::size_t start = pos;
      if (pos < text.size() && text[pos] == '-') ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || (pos == start + 1 && text[start] == '-'))
        throw ParseError("expected an integer", start);
      coords.emplace_back(std::string(text.substr(start, pos - start)));
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("expected ',' or ')'", pos);
    }
    if (!pts.empty() && coords.size() != pts.front().dim())
      throw ParseError("points of different dimensions", pos);
    pts.emplace_back(std::move(coords));
    skip();
  }
  if (pts.empty()) throw ParseError("empty point list", 0);
  return IntegralPolytope::hull(pts, pts.front().dim());
}

MonomialIdeal ideal_from_document(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("vars") || !doc.contains("gens"))
    throw ParseError("ideal document needs \"vars\" and \"gens\"", 0);
  const Integer vars = integer_from_json(doc.at("vars"));
  if (vars < 1 || vars > kMaxVariables) throw ParseError("\"vars\" out of range", 0);
  const std::size_t d = vars.convert_to<std::size_t>();
  std::vector<ExponentVector> points;
  for (const auto& g : doc.at("gens")) {
    if (!g.is_array() || g.size() != d)
      throw ParseError("every generator needs exactly " + std::to_string(d) + " exponents", 0);
    ExponentVector p(d);
    for (std::size_t i = 0; i < d; ++i) {
      p[i] = integer_from_json(g[i]);
      if (p[i] < 0) throw ParseError("negative exponent", 0);
    }
    points.push_back(std::move(p));
  }
  if (points.empty()) throw ParseError("zero monomial ideal (no generators)", 0);
  return MonomialIdeal::minimalize(points, d);
}

nlohmann::json to_json(const Integer& n) { return n.str(); }

nlohmann::json to_json(const LatticePoint& p) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& c : p) out.push_back(c.str());
  return out;
}

nlohmann::json to_json(const MonomialIdeal& I) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : I.gens()) gens.push_back(to_json(g));
  return {{"vars", std::to_string(I.dim())}, {"gens", gens}, {"text", render(I)}};
}

nlohmann::json to_json(const IntegralPolytope& P) {
  nlohmann::json verts = nlohmann::json::array();
  for (const auto& v : P.vertices()) verts.push_back(to_json(v));
  return {{"dim", std::to_string(P.dim())}, {"vertices", verts}};
}

nlohmann::json to_json(const IdealClassElement& c) {
  return {{"num", to_json(c.num())}, {"den", to_json(c.den())}};
}

nlohmann::json to_json(const BasisDecomposition& d) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& [b, c] : d) {
    out.push_back({{"kind", b.kind == BasisElement::Kind::Segment ? "segment" : "triangle"},
                   {"v", {b.v1.str(), b.v2.str()}},
                   {"coefficient", c.str()}});
  }
  return out;
}

nlohmann::json to_json(const ColonFactorization& f) {
  auto pairs = [](const std::vector<std::pair<Integer, Integer>>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& [a, b] : v) out.push_back({a.str(), b.str()});
    return out;
  };
  return {{"num_monomial", to_json(f.num_monomial)},
          {"num_factors", pairs(f.num_factors)},
          {"den_monomial", to_json(f.den_monomial)},
          {"den_factors", pairs(f.den_factors)}};
}

nlohmann::json to_json(const std::vector<AtomMultiset>& factorizations) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : factorizations) {
    nlohmann::json atoms = nlohmann::json::array();
    for (const auto& a : m) atoms.push_back(to_json(a));
    out.push_back(atoms);
  }
  return out;
}

}  // namespace icm
