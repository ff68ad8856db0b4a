#include "ideals/newton_polyhedron.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "ideals/errors.hpp"
#include "linalg.hpp"

namespace ideals {

namespace {

using linalg::Mat;
using linalg::Vec;

Vec to_vec(const Exponent& e) {
  Vec v;
  v.reserve(static_cast<std::size_t>(e.dim()));
  for (int i = 0; i < e.dim(); ++i) v.emplace_back(e[i]);
  return v;
}

Rational dot(const std::vector<Int>& w, const Vec& p) {
  Rational s(0);
  for (std::size_t i = 0; i < w.size(); ++i) s += Rational(w[i]) * p[i];
  return s;
}

Rational dot_exp(const std::vector<Int>& w, const Exponent& g) {
  Rational s(0);
  for (std::size_t i = 0; i < w.size(); ++i) s += Rational(w[i] * g[static_cast<int>(i)]);
  return s;
}

// Scales (normal, offset) to the unique primitive integer representative.
std::pair<std::vector<Int>, Int> canonicalize(const Vec& normal, const Rational& offset) {
  Int l(1);
  for (const Rational& x : normal) l = boost::multiprecision::lcm(l, denominator(x));
  l = boost::multiprecision::lcm(l, denominator(offset));
  std::vector<Int> w;
  w.reserve(normal.size());
  Int g(0);
  for (const Rational& x : normal) {
    Int e = numerator(x * l);
    w.push_back(e);
    g = boost::multiprecision::gcd(g, e);
  }
  Int c = numerator(offset * l);
  g = boost::multiprecision::gcd(g, c);
  if (g > 1) {
    for (Int& e : w) e /= g;
    c /= g;
  }
  return {std::move(w), std::move(c)};
}

int affine_rank(const std::vector<Vec>& pts) {
  if (pts.empty()) return -1;
  Mat rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    Vec r(pts[i]);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= pts[0][j];
    rows.push_back(std::move(r));
  }
  if (rows.empty()) return 0;
  return linalg::rank(rows);
}

// Enumerates all k-subsets of {0..m-1}, invoking fn on each.
template <typename Fn>
void for_each_subset(int m, int k, Fn&& fn) {
  if (k > m || k <= 0) return;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == m - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

struct Constraint {
  Vec coeffs;    // <coeffs, u> >= rhs
  Rational rhs;
};

// Recursive fan triangulation of a d-dimensional face given by its vertex
// index set. Each returned simplex is a list of d+1 vertex indices.
void triangulate_face(const std::vector<Vec>& verts,
                      const std::vector<Constraint>& constraints,
                      const std::vector<int>& face, int d,
                      std::vector<std::vector<int>>& out) {
  if (d == 0) {
    out.push_back(face);
    return;
  }
  int apex = *std::min_element(face.begin(), face.end(), [&](int a, int b) {
    return verts[static_cast<std::size_t>(a)] < verts[static_cast<std::size_t>(b)];
  });
  std::set<std::vector<int>> seen;
  for (const Constraint& c : constraints) {
    std::vector<int> sub;
    bool apex_tight = false;
    for (int vi : face) {
      Rational slack = c.rhs;
      const Vec& v = verts[static_cast<std::size_t>(vi)];
      for (std::size_t j = 0; j < v.size(); ++j) slack -= c.coeffs[j] * v[j];
      if (slack == 0) {
        sub.push_back(vi);
        if (vi == apex) apex_tight = true;
      }
    }
    if (apex_tight || static_cast<int>(sub.size()) < d) continue;
    std::sort(sub.begin(), sub.end());
    if (!seen.insert(sub).second) continue;
    std::vector<Vec> pts;
    pts.reserve(sub.size());
    for (int vi : sub) pts.push_back(verts[static_cast<std::size_t>(vi)]);
    if (affine_rank(pts) != d - 1) continue;
    std::vector<std::vector<int>> sub_simplices;
    triangulate_face(verts, constraints, sub, d - 1, sub_simplices);
    for (std::vector<int>& s : sub_simplices) {
      s.push_back(apex);
      out.push_back(std::move(s));
    }
  }
}

Rational polytope_volume(const std::vector<Vec>& verts,
                         const std::vector<Constraint>& constraints, int n) {
  if (static_cast<int>(verts.size()) < n + 1) return Rational(0);
  if (affine_rank(verts) < n) return Rational(0);
  std::vector<int> all(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) all[i] = static_cast<int>(i);
  std::vector<std::vector<int>> simplices;
  triangulate_face(verts, constraints, all, n, simplices);
  Rational vol(0);
  Int factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= i;
  for (const std::vector<int>& s : simplices) {
    Mat edges;
    const Vec& base = verts[static_cast<std::size_t>(s.back())];
    for (int i = 0; i + 1 < static_cast<int>(s.size()); ++i) {
      Vec r = verts[static_cast<std::size_t>(s[static_cast<std::size_t>(i)])];
      for (std::size_t j = 0; j < r.size(); ++j) r[j] -= base[j];
      edges.push_back(std::move(r));
    }
    Rational d = linalg::det(edges);
    if (d < 0) d = -d;
    vol += d / Rational(factorial);
  }
  return vol;
}

}  // namespace

WeightVector::WeightVector(std::vector<Rational> weights)
    : weights_(std::move(weights)) {
  if (weights_.empty()) throw DomainError("WeightVector: dimension must be >= 1");
  bool positive = false;
  for (const Rational& w : weights_) {
    if (w < 0) throw DomainError("WeightVector: weights must be nonnegative");
    if (w > 0) positive = true;
  }
  if (!positive) throw DomainError("WeightVector: at least one weight must be positive");
}

WeightVector WeightVector::ones(int dim) {
  return WeightVector(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(1)));
}

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& a)
    : dim_(a.dim()),
      zero_dimensional_(is_zero_dimensional(a)),
      is_unit_(a.is_unit()),
      generators_(a.generators()),
      boxed_volume_(0) {
  if (a.is_zero()) throw DomainError("NewtonPolyhedron: zero ideal has no Newton polyhedron");
  int n = dim_;

  // Coordinate facets u_i >= 0 are always part of the H-representation.
  for (int i = 0; i < n; ++i) {
    std::vector<Int> e(static_cast<std::size_t>(n), Int(0));
    e[static_cast<std::size_t>(i)] = 1;
    facets_.push_back(Facet{std::move(e), Int(0), true});
  }

  // Non-coordinate facets. A facet normal w >= 0 vanishing exactly on the
  // coordinate set Z is determined by |C| affinely independent generator
  // projections to C = complement(Z), so it suffices to scan every coordinate
  // subset C and every |C|-subset of the projected generators.
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for (int mask = 1; mask < (1 << n); ++mask) {
    std::vector<int> C;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) C.push_back(i);
    int c = static_cast<int>(C.size());

    std::vector<Vec> proj;
    for (const Exponent& g : generators_) {
      Vec p;
      p.reserve(static_cast<std::size_t>(c));
      for (int i : C) p.emplace_back(g[i]);
      proj.push_back(std::move(p));
    }
    std::sort(proj.begin(), proj.end());
    proj.erase(std::unique(proj.begin(), proj.end()), proj.end());
    if (static_cast<int>(proj.size()) < c) continue;

    for_each_subset(static_cast<int>(proj.size()), c, [&](const std::vector<int>& idx) {
      Mat rows;
      for (int i = 1; i < c; ++i) {
        Vec r = proj[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
        const Vec& p0 = proj[static_cast<std::size_t>(idx[0])];
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= p0[j];
        rows.push_back(std::move(r));
      }
      std::optional<Vec> wc = linalg::hyperplane_normal(rows, c);
      if (!wc) return;
      // Normals with a zero entry on C arise from a smaller subset.
      bool has_zero = false, has_pos = false, has_neg = false;
      for (const Rational& x : *wc) {
        if (x == 0) has_zero = true;
        else if (x > 0) has_pos = true;
        else has_neg = true;
      }
      if (has_zero || (has_pos && has_neg)) return;
      if (has_neg)
        for (Rational& x : *wc) x = -x;

      Rational offset(0);
      {
        const Vec& p0 = proj[static_cast<std::size_t>(idx[0])];
        for (int i = 0; i < c; ++i) offset += (*wc)[static_cast<std::size_t>(i)] * p0[static_cast<std::size_t>(i)];
      }
      for (const Vec& p : proj) {
        Rational s(0);
        for (int i = 0; i < c; ++i) s += (*wc)[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
        if (s < offset) return;  // does not bound the polyhedron
      }

      // Lift to full dimension.
      Vec full(static_cast<std::size_t>(n), Rational(0));
      for (int i = 0; i < c; ++i) full[static_cast<std::size_t>(C[static_cast<std::size_t>(i)])] = (*wc)[static_cast<std::size_t>(i)];

      // Facet test: generators on the hyperplane together with the zero-weight
      // axis directions must span dimension n-1.
      auto [w_int, off_int] = canonicalize(full, offset);
      Mat span;
      const Exponent* first_tight = nullptr;
      for (const Exponent& g : generators_) {
        if (dot_exp(w_int, g) != Rational(off_int)) continue;
        if (!first_tight) {
          first_tight = &g;
          continue;
        }
        Vec r = to_vec(g);
        Vec b = to_vec(*first_tight);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
        span.push_back(std::move(r));
      }
      for (int i = 0; i < n; ++i) {
        if (w_int[static_cast<std::size_t>(i)] != 0) continue;
        Vec r(static_cast<std::size_t>(n), Rational(0));
        r[static_cast<std::size_t>(i)] = 1;
        span.push_back(std::move(r));
      }
      if (linalg::rank(span) != n - 1) return;

      // u_i >= 0 duplicates are handled by the coordinate facet list.
      if (c == 1 && off_int == 0) return;
      if (off_int <= 0 && !is_unit_)
        throw std::logic_error("NewtonPolyhedron: non-coordinate facet with nonpositive offset");
      if (seen.insert({w_int, off_int}).second)
        facets_.push_back(Facet{w_int, off_int, false});
    });
  }

  // Every generator satisfies every facet by construction; verify.
  for (const Facet& f : facets_)
    for (const Exponent& g : generators_)
      if (dot_exp(f.normal, g) < Rational(f.offset))
        throw std::logic_error("NewtonPolyhedron: generator violates facet");

  std::sort(facets_.begin(), facets_.end(), [](const Facet& x, const Facet& y) {
    if (x.coordinate != y.coordinate) return x.coordinate && !y.coordinate;
    if (x.normal != y.normal) return x.normal < y.normal;
    return x.offset < y.offset;
  });

  if (!zero_dimensional_) return;

  // Box bound and truncated-polytope vertex set.
  if (is_unit_) {
    box_bound_ = 0;
    vertices_.push_back(Vec(static_cast<std::size_t>(n), Rational(0)));
    boxed_volume_ = 0;
    return;
  }
  std::vector<std::int64_t> pp = pure_power_exponents(a);
  box_bound_ = *std::max_element(pp.begin(), pp.end());

  std::vector<Constraint> constraints;
  for (const Facet& f : facets_) {
    Vec coeffs;
    coeffs.reserve(static_cast<std::size_t>(n));
    for (const Int& w : f.normal) coeffs.emplace_back(w);
    constraints.push_back(Constraint{std::move(coeffs), Rational(f.offset)});
  }
  for (int i = 0; i < n; ++i) {  // u_i <= M as -u_i >= -M
    Vec coeffs(static_cast<std::size_t>(n), Rational(0));
    coeffs[static_cast<std::size_t>(i)] = -1;
    constraints.push_back(Constraint{std::move(coeffs), Rational(-box_bound_)});
  }

  std::set<Vec> verts;
  for_each_subset(static_cast<int>(constraints.size()), n, [&](const std::vector<int>& idx) {
    Mat m;
    Vec b;
    for (int i : idx) {
      m.push_back(constraints[static_cast<std::size_t>(i)].coeffs);
      b.push_back(constraints[static_cast<std::size_t>(i)].rhs);
    }
    std::optional<Vec> x = linalg::solve_square(std::move(m), std::move(b));
    if (!x) return;
    for (const Constraint& cst : constraints) {
      Rational s(0);
      for (std::size_t j = 0; j < x->size(); ++j) s += cst.coeffs[j] * (*x)[j];
      if (s < cst.rhs) return;
    }
    verts.insert(*x);
  });
  vertices_.assign(verts.begin(), verts.end());

  boxed_volume_ = polytope_volume(vertices_, constraints, n);
}

const std::vector<std::vector<Rational>>& NewtonPolyhedron::vertices() const {
  if (!zero_dimensional_)
    throw DomainError("NewtonPolyhedron: vertices available only for zero-dimensional ideals");
  return vertices_;
}

Location NewtonPolyhedron::locate(const std::vector<Rational>& point,
                                  const Rational& lambda) const {
  if (lambda <= 0) throw DomainError("locate: scale must be positive");
  if (static_cast<int>(point.size()) != dim_)
    throw DimensionMismatch(dim_, static_cast<int>(point.size()));
  bool boundary = false;
  for (const Facet& f : facets_) {
    Rational s = dot(f.normal, point) - lambda * Rational(f.offset);
    if (s < 0) return Location::Outside;
    if (s == 0) boundary = true;
  }
  return boundary ? Location::Boundary : Location::Interior;
}

Rational NewtonPolyhedron::complement_volume() const {
  if (!zero_dimensional_)
    throw DomainError("complement_volume: ideal is not zero-dimensional");
  if (is_unit_) return Rational(0);
  return rational_pow(Rational(box_bound_), dim_) - boxed_volume_;
}

NewtonPolyhedron build_polyhedron(const MonomialIdeal& a) {
  if (a.is_zero()) throw DomainError("build_polyhedron: zero ideal");
  if (!is_zero_dimensional(a))
    throw DomainError("build_polyhedron: ideal is not zero-dimensional");
  return NewtonPolyhedron(a);
}

Int multiplicity(const MonomialIdeal& a) {
  if (a.is_zero()) throw DomainError("multiplicity: zero ideal");
  if (!is_zero_dimensional(a))
    throw DomainError("multiplicity: ideal is not zero-dimensional");
  if (a.is_unit()) return 0;
  NewtonPolyhedron p(a);
  Rational vol = p.complement_volume();
  Int factorial(1);
  for (int i = 2; i <= a.dim(); ++i) factorial *= i;
  Rational e = Rational(factorial) * vol;
  if (denominator(e) != 1)
    throw std::logic_error("multiplicity: n! vol(Q) is not an integer");
  Int result = numerator(e);
  if (result <= 0)
    throw std::logic_error("multiplicity: expected a positive value for a proper ideal");
  return result;
}

Rational lct(const MonomialIdeal& a) {
  if (a.is_zero()) throw DomainError("lct: zero ideal");
  if (a.is_unit()) throw DomainError("lct: unit ideal (threshold is infinite)");
  NewtonPolyhedron p(a);
  Rational mu_star(0);
  for (const Facet& f : p.facets()) {
    if (f.coordinate) continue;
    Int wsum(0);
    for (const Int& w : f.normal) wsum += w;
    Rational ratio = Rational(f.offset) / Rational(wsum);
    if (ratio > mu_star) mu_star = ratio;
  }
  if (mu_star <= 0) throw std::logic_error("lct: no non-coordinate facet found");
  return Rational(1) / mu_star;
}

Rational ord_weight(const MonomialIdeal& a, const WeightVector& w) {
  if (a.is_zero()) throw DomainError("ord_weight: zero ideal");
  if (w.dim() != a.dim()) throw DimensionMismatch(a.dim(), w.dim());
  bool first = true;
  Rational best(0);
  for (const Exponent& g : a.generators()) {
    Rational s(0);
    for (int i = 0; i < a.dim(); ++i)
      s += w.weights()[static_cast<std::size_t>(i)] * Rational(g[i]);
    if (first || s < best) best = s;
    first = false;
  }
  return best;
}

}  // namespace ideals
