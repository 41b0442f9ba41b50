#include "icm/polytope.hpp"

#include "exact_lp.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>
#include <set>

namespace icm {

namespace {

Integer cross(const LatticePoint& o, const LatticePoint& a, const LatticePoint& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain on sorted, distinct points; collinear points are dropped.
std::vector<LatticePoint> planar_hull(const std::vector<LatticePoint>& pts) {
  std::vector<LatticePoint> h(2 * pts.size());
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

}  // namespace

IntegralPolytope IntegralPolytope::hull(std::span<const LatticePoint> points, std::size_t dim) {
  if (points.empty()) throw PreconditionError("hull: empty point set");
  std::vector<LatticePoint> pts(points.begin(), points.end());
  for (const auto& p : pts) require_same_dim(p.dim(), dim, "hull");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  if (dim == 1 || pts.size() <= 2) {
    if (pts.size() > 2) pts = {pts.front(), pts.back()};
    return IntegralPolytope(dim, std::move(pts));
  }
  if (dim == 2) return IntegralPolytope(dim, planar_hull(pts));

  std::vector<LatticePoint> verts;
  std::vector<LatticePoint> others;
  std::vector<Rational> target(dim);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    others.clear();
    for (std::size_t k = 0; k < pts.size(); ++k)
      if (k != i) others.push_back(pts[k]);
    for (std::size_t j = 0; j < dim; ++j) target[j] = pts[i][j];
    if (!detail::convex_combination_feasible(others, target, detail::Fit::Exact))
      verts.push_back(pts[i]);
  }
  return IntegralPolytope(dim, std::move(verts));
}

IntegralPolytope IntegralPolytope::hull(std::initializer_list<LatticePoint> points) {
  if (points.size() == 0) throw PreconditionError("hull: empty point set");
  return hull(std::span<const LatticePoint>(points.begin(), points.size()), points.begin()->dim());
}

IntegralPolytope IntegralPolytope::point(LatticePoint p) {
  const std::size_t d = p.dim();
  return IntegralPolytope(d, {std::move(p)});
}

IntegralPolytope p_mink_sum(const IntegralPolytope& P, const IntegralPolytope& Q) {
  require_same_dim(P.dim(), Q.dim(), "p_mink_sum");
  std::vector<LatticePoint> sums;
  sums.reserve(P.vertices().size() * Q.vertices().size());
  for (const auto& a : P.vertices())
    for (const auto& b : Q.vertices()) sums.push_back(a + b);
  return IntegralPolytope::hull(sums, P.dim());
}

IntegralPolytope p_mink_multiple(const IntegralPolytope& P, unsigned long n) {
  IntegralPolytope acc = IntegralPolytope::point(LatticePoint(P.dim()));
  for (unsigned long i = 0; i < n; ++i) acc = p_mink_sum(acc, P);
  return acc;
}

IntegralPolytope translate(const IntegralPolytope& P, const LatticePoint& shift) {
  require_same_dim(P.dim(), shift.dim(), "translate");
  std::vector<LatticePoint> moved;
  moved.reserve(P.vertices().size());
  for (const auto& v : P.vertices()) moved.push_back(v + shift);
  // Translation preserves extremality and lexicographic order.
  return IntegralPolytope(P.dim(), std::move(moved));
}

std::pair<IntegralPolytope, LatticePoint> normalize_translation(const IntegralPolytope& P) {
  LatticePoint m = componentwise_min(P.vertices());
  LatticePoint neg(P.dim());
  neg -= m;
  return {translate(P, neg), std::move(m)};
}

Integer height(const IntegralPolytope& P) {
  const std::size_t last = P.dim() - 1;
  Integer h = P.vertices().front()[last];
  for (const auto& v : P.vertices()) h = std::min(h, v[last]);
  return h;
}

IntegralPolytope shadow(const IntegralPolytope& P) {
  const Integer h = height(P);
  std::vector<LatticePoint> pts = P.vertices();
  for (const auto& v : P.vertices()) {
    LatticePoint dropped = v;
    dropped[P.dim() - 1] = h;
    pts.push_back(std::move(dropped));
  }
  return IntegralPolytope::hull(pts, P.dim());
}

// ---------------------------------------------------------------------------

PolytopeGroupElement::PolytopeGroupElement(const IntegralPolytope& pos, const IntegralPolytope& neg)
    : pos_(normalize_translation(pos).first), neg_(normalize_translation(neg).first) {
  require_same_dim(pos.dim(), neg.dim(), "PolytopeGroupElement");
}

PolytopeGroupElement::PolytopeGroupElement(const IntegralPolytope& pos)
    : PolytopeGroupElement(pos, IntegralPolytope::point(LatticePoint(pos.dim()))) {}

PolytopeGroupElement PolytopeGroupElement::identity(std::size_t dim) {
  return PolytopeGroupElement(IntegralPolytope::point(LatticePoint(dim)));
}

PolytopeGroupElement operator+(const PolytopeGroupElement& a, const PolytopeGroupElement& b) {
  return PolytopeGroupElement(p_mink_sum(a.pos_, b.pos_), p_mink_sum(a.neg_, b.neg_));
}

PolytopeGroupElement operator-(const PolytopeGroupElement& a) {
  return PolytopeGroupElement(a.neg_, a.pos_);
}

PolytopeGroupElement operator-(const PolytopeGroupElement& a, const PolytopeGroupElement& b) {
  return a + (-b);
}

bool class_equal(const PolytopeGroupElement& a, const PolytopeGroupElement& b) {
  require_same_dim(a.dim(), b.dim(), "class_equal");
  return normalize_translation(p_mink_sum(a.pos(), b.neg())).first ==
         normalize_translation(p_mink_sum(b.pos(), a.neg())).first;
}

// ---------------------------------------------------------------------------

namespace {

std::pair<Integer, Integer> upper_primitive(Integer a, Integer b) {
  if (a == 0 && b == 0) throw PreconditionError("basis element: zero direction");
  const Integer g = boost::multiprecision::gcd(abs(a), abs(b));
  if (g != 1) throw PreconditionError("basis element: direction is not primitive");
  if (b < 0 || (b == 0 && a < 0)) {
    a = -a;
    b = -b;
  }
  return {a, b};
}

}  // namespace

BasisElement BasisElement::segment(Integer a, Integer b) {
  auto [x, y] = upper_primitive(std::move(a), std::move(b));
  return BasisElement{Kind::Segment, std::move(x), std::move(y)};
}

BasisElement BasisElement::triangle(Integer a, Integer b) {
  auto [x, y] = upper_primitive(std::move(a), std::move(b));
  if (x == 0 || y == 0)
    throw PreconditionError("basis triangle: axis direction has a one-dimensional shadow");
  return BasisElement{Kind::Triangle, std::move(x), std::move(y)};
}

IntegralPolytope BasisElement::polytope() const {
  const LatticePoint v(std::vector<Integer>{v1, v2});
  IntegralPolytope seg = IntegralPolytope::hull({LatticePoint(2), v});
  if (kind == Kind::Segment) return seg;
  return normalize_translation(shadow(seg)).first;
}

bool operator<(const BasisElement& a, const BasisElement& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.v1 != b.v1) return a.v1 < b.v1;
  return a.v2 < b.v2;
}

IntegralPolytope basis_segment(const LatticePoint& v) {
  require_same_dim(v.dim(), 2, "basis_segment");
  BasisElement::segment(v[0], v[1]);  // validates
  return IntegralPolytope::hull({LatticePoint(2), v});
}

IntegralPolytope basis_triangle(const LatticePoint& v) {
  require_same_dim(v.dim(), 2, "basis_triangle");
  BasisElement::triangle(v[0], v[1]);
  return normalize_translation(shadow(IntegralPolytope::hull({LatticePoint(2), v}))).first;
}

std::ostream& operator<<(std::ostream& os, const BasisElement& b) {
  return os << (b.kind == BasisElement::Kind::Segment ? "S" : "T") << '(' << b.v1 << ','
            << b.v2 << ')';
}

std::ostream& operator<<(std::ostream& os, const IntegralPolytope& P) {
  os << "conv{";
  for (std::size_t i = 0; i < P.vertices().size(); ++i) os << (i ? "," : "") << P.vertices()[i];
  return os << '}';
}

// ---------------------------------------------------------------------------

namespace {

using Direction = std::pair<Integer, Integer>;

void add_edge(std::map<Direction, Integer>& counts, const Integer& dx, const Integer& dy) {
  const Integer g = boost::multiprecision::gcd(abs(dx), abs(dy));
  counts[{dx / g, dy / g}] += g;
}

}  // namespace

std::map<Direction, Integer> edge_counts_2d(const IntegralPolytope& P) {
  require_same_dim(P.dim(), 2, "edge_counts_2d");
  std::map<Direction, Integer> counts;
  const auto& vs = P.vertices();
  if (vs.size() == 1) return counts;
  if (vs.size() == 2) {
    add_edge(counts, vs[1][0] - vs[0][0], vs[1][1] - vs[0][1]);
    add_edge(counts, vs[0][0] - vs[1][0], vs[0][1] - vs[1][1]);
    return counts;
  }
  // vs[0] is the lexicographic minimum, hence a vertex; the others sit in a
  // half-plane around it and sort by orientation.
  std::vector<LatticePoint> ring(vs.begin(), vs.end());
  const LatticePoint pivot = ring.front();
  std::sort(ring.begin() + 1, ring.end(), [&](const LatticePoint& a, const LatticePoint& b) {
    return cross(pivot, a, b) > 0;
  });
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const auto& a = ring[i];
    const auto& b = ring[(i + 1) % ring.size()];
    add_edge(counts, b[0] - a[0], b[1] - a[1]);
  }
  return counts;
}

BasisDecomposition decompose_2d(const PolytopeGroupElement& e) {
  require_same_dim(e.dim(), 2, "decompose_2d");

  // The class of a polygon modulo translation is its edge multiset, and the
  // map is additive, so work with pos minus neg.
  std::map<Direction, Integer> f = edge_counts_2d(e.pos());
  for (const auto& [u, n] : edge_counts_2d(e.neg())) f[u] -= n;
  auto count = [&](const Integer& a, const Integer& b) {
    auto it = f.find({a, b});
    return it == f.end() ? Integer(0) : it->second;
  };

  std::set<Direction> slanted;
  for (const auto& [u, n] : f) {
    if (u.first == 0 || u.second == 0) continue;
    slanted.insert(u.second > 0 ? u : Direction{-u.first, -u.second});
  }

  BasisDecomposition out;
  auto put = [&](BasisElement b, const Integer& c) {
    if (c != 0) out[std::move(b)] += c;
  };

  // Triangle(v) for v = (a, b) with a > 0 has edges (1,0)*a, (0,1)*b, -v;
  // with a < 0 its edges are v, (0,-1)*b, (1,0)*|a|. Segments give v and -v.
  Integer horizontal_from_triangles = 0;  // contributions to (1,0)
  Integer up_from_triangles = 0;          // to (0,1)
  Integer down_from_triangles = 0;        // to (0,-1)
  for (const auto& [a, b] : slanted) {
    const Integer fwd = count(a, b);
    const Integer back = count(-a, -b);
    Integer seg, tri;
    if (a > 0) {
      seg = fwd;
      tri = back - fwd;
      up_from_triangles += b * tri;
    } else {
      seg = back;
      tri = fwd - back;
      down_from_triangles += b * tri;
    }
    horizontal_from_triangles += abs(a) * tri;
    put(BasisElement::segment(a, b), seg);
    put(BasisElement::triangle(a, b), tri);
  }
  const Integer seg_x = count(-1, 0);
  const Integer seg_y = count(0, -1) - down_from_triangles;
  if (count(1, 0) != seg_x + horizontal_from_triangles || count(0, 1) != seg_y + up_from_triangles)
    throw std::logic_error("decompose_2d: edge counts do not close up");
  put(BasisElement::segment(1, 0), seg_x);
  put(BasisElement::segment(0, 1), seg_y);

  if (!class_equal(recompose_2d(out), e))
    throw std::logic_error("decompose_2d: reconstruction identity failed");
  return out;
}

PolytopeGroupElement recompose_2d(const BasisDecomposition& coefficients) {
  IntegralPolytope pos = IntegralPolytope::point(LatticePoint(2));
  IntegralPolytope neg = pos;
  for (const auto& [b, c] : coefficients) {
    const IntegralPolytope piece = b.polytope();
    const unsigned long n = abs(c).convert_to<unsigned long>();
    if (c > 0)
      pos = p_mink_sum(pos, p_mink_multiple(piece, n));
    else
      neg = p_mink_sum(neg, p_mink_multiple(piece, n));
  }
  return PolytopeGroupElement(pos, neg);
}

}  // namespace icm
