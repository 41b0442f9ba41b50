#pragma once

// Brute-force reference computations used only by the tests. They work on
// plain int64 vectors and share no code with the library.

#include "icm/monomial_ideal.hpp"
#include "icm/polytope.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using Vec = std::vector<long long>;
using VecSet = std::vector<Vec>;

inline Vec to_vec(const icm::LatticePoint& p) {
  Vec v;
  for (const auto& c : p) v.push_back(c.convert_to<long long>());
  return v;
}

inline VecSet gens_of(const icm::MonomialIdeal& I) {
  VecSet out;
  for (const auto& g : I.gens()) out.push_back(to_vec(g));
  return out;
}

inline icm::MonomialIdeal ideal(const VecSet& gens) {
  std::vector<icm::ExponentVector> pts;
  for (const auto& g : gens) pts.emplace_back(std::vector<icm::Integer>(g.begin(), g.end()));
  return icm::MonomialIdeal::minimalize(pts, gens.front().size());
}

inline bool dominates(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] < b[i]) return false;
  return true;
}

/// Minimal elements, sorted.
inline VecSet minimal(VecSet pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  VecSet out;
  for (const auto& p : pts) {
    bool redundant = false;
    for (const auto& q : pts)
      if (q != p && dominates(p, q)) redundant = true;
    if (!redundant) out.push_back(p);
  }
  return out;
}

inline bool in_ideal(const VecSet& gens, const Vec& a) {
  return std::any_of(gens.begin(), gens.end(), [&](const Vec& g) { return dominates(a, g); });
}

inline Vec box_of(const VecSet& gens) {
  Vec box(gens.front().size(), 0);
  for (const auto& g : gens)
    for (std::size_t i = 0; i < g.size(); ++i) box[i] = std::max(box[i], g[i]);
  return box;
}

inline void for_each_in_box(const Vec& box, const std::function<void(const Vec&)>& f) {
  Vec p(box.size(), 0);
  while (true) {
    f(p);
    std::size_t i = 0;
    while (i < p.size() && p[i] == box[i]) p[i++] = 0;
    if (i == p.size()) return;
    ++p[i];
  }
}

/// I : J by testing every point of the generator box of I.
inline VecSet colon(const VecSet& I, const VecSet& J) {
  VecSet hits;
  for_each_in_box(box_of(I), [&](const Vec& a) {
    for (const auto& g : J) {
      Vec s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + g[i];
      if (!in_ideal(I, s)) return;
    }
    hits.push_back(a);
  });
  return minimal(hits);
}

/// conv(points) + R^d_+ for d = 2 or 3 as an explicit list of inequalities
/// w.q >= c. Candidate normals come from every pair of edge directions
/// (point differences and unit rays); only normals with w >= 0 are valid for
/// a set receding along the orthant, and the facet normals are among them.
class Halfspaces {
 public:
  explicit Halfspaces(const VecSet& points) {
    const std::size_t d = points.front().size();
    VecSet dirs;
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = i + 1; j < points.size(); ++j) {
        Vec v(d);
        for (std::size_t k = 0; k < d; ++k) v[k] = points[i][k] - points[j][k];
        dirs.push_back(v);
      }
    for (std::size_t k = 0; k < d; ++k) {
      Vec e(d, 0);
      e[k] = 1;
      dirs.push_back(e);
    }
    std::set<Vec> normals;
    auto offer = [&](Vec w) {
      if (std::all_of(w.begin(), w.end(), [](long long c) { return c <= 0; }))
        for (auto& c : w) c = -c;
      if (std::any_of(w.begin(), w.end(), [](long long c) { return c < 0; })) return;
      if (std::all_of(w.begin(), w.end(), [](long long c) { return c == 0; })) return;
      long long g = 0;
      for (auto c : w) g = std::gcd(g, c);
      for (auto& c : w) c /= g;
      normals.insert(w);
    };
    if (d == 2) {
      for (const auto& v : dirs) offer({v[1], -v[0]});
    } else {
      for (std::size_t i = 0; i < dirs.size(); ++i)
        for (std::size_t j = i + 1; j < dirs.size(); ++j) {
          const auto& a = dirs[i];
          const auto& b = dirs[j];
          offer({a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]});
        }
    }
    for (const auto& w : normals) {
      long long lo = dot(w, points.front());
      for (const auto& p : points) lo = std::min(lo, dot(w, p));
      rows_.push_back({w, lo});
    }
  }

  bool contains(const Vec& q) const {
    return std::all_of(rows_.begin(), rows_.end(),
                       [&](const auto& r) { return dot(r.first, q) >= r.second; });
  }

 private:
  static long long dot(const Vec& a, const Vec& b) {
    long long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  std::vector<std::pair<Vec, long long>> rows_;
};

/// Minimal lattice points of the Newton polyhedron (d = 2 or 3).
inline VecSet closure(const VecSet& gens) {
  const Halfspaces H(gens);
  VecSet hits;
  for_each_in_box(box_of(gens), [&](const Vec& a) {
    if (H.contains(a)) hits.push_back(a);
  });
  return minimal(hits);
}

/// Every antichain of at most `max_size` points in [0, box], each visited
/// once, as a sorted list.
inline void for_each_antichain(const Vec& box, std::size_t max_size,
                               const std::function<void(const VecSet&)>& f) {
  VecSet pts;
  for_each_in_box(box, [&](const Vec& p) { pts.push_back(p); });
  std::sort(pts.begin(), pts.end());
  VecSet chosen;
  std::function<void(std::size_t)> grow = [&](std::size_t from) {
    if (!chosen.empty()) f(chosen);
    if (chosen.size() == max_size) return;
    for (std::size_t i = from; i < pts.size(); ++i) {
      const bool comparable = std::any_of(chosen.begin(), chosen.end(), [&](const Vec& c) {
        return dominates(pts[i], c) || dominates(c, pts[i]);
      });
      if (comparable) continue;
      chosen.push_back(pts[i]);
      grow(i + 1);
      chosen.pop_back();
    }
  };
  grow(0);
}

/// Vertices of the planar convex hull (monotone chain), sorted.
inline VecSet hull_2d(VecSet pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  auto cross = [](const Vec& o, const Vec& a, const Vec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  VecSet h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  std::sort(h.begin(), h.end());
  return h;
}

inline VecSet vertices_of(const icm::IntegralPolytope& P) {
  VecSet out;
  for (const auto& v : P.vertices()) out.push_back(to_vec(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
