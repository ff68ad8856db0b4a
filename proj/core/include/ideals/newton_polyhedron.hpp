#ifndef IDEALS_NEWTON_POLYHEDRON_HPP
#define IDEALS_NEWTON_POLYHEDRON_HPP

#include <cstdint>
#include <vector>

#include "ideals/monomial_ideal.hpp"
#include "ideals/rational.hpp"

namespace ideals {

/// One half-space <normal, u> >= offset of the H-representation. Normals are
/// primitive integer vectors with nonnegative entries; coordinate facets are
/// the half-spaces u_i >= 0.
struct Facet {
  std::vector<Int> normal;
  Int offset;
  bool coordinate;

  bool operator==(const Facet& other) const = default;
};

enum class Location { Interior, Boundary, Outside };

/// Nonnegative weight vector defining a monomial valuation; at least one
/// entry must be positive.
class WeightVector {
 public:
  explicit WeightVector(std::vector<Rational> weights);
  static WeightVector ones(int dim);
  int dim() const { return static_cast<int>(weights_.size()); }
  const std::vector<Rational>& weights() const { return weights_; }

 private:
  std::vector<Rational> weights_;
};

/// Newton polyhedron of a nonzero monomial ideal: the convex hull of the
/// generator exponents plus the positive orthant, held as an exact
/// H-representation. For zero-dimensional ideals the truncation by the cube
/// [0, M]^n (M = largest minimal pure-power exponent) is carried along as a
/// vertex list, which supports exact volume computations.
class NewtonPolyhedron {
 public:
  /// Requires a nonzero. Vertex/volume data is populated only when a is
  /// zero-dimensional.
  explicit NewtonPolyhedron(const MonomialIdeal& a);

  int dim() const { return dim_; }
  const std::vector<Exponent>& generators() const { return generators_; }
  const std::vector<Facet>& facets() const { return facets_; }
  std::int64_t box_bound() const { return box_bound_; }
  const std::vector<std::vector<Rational>>& vertices() const;

  /// Classifies `point` against lambda * P. Interior requires strict
  /// inequality on every facet, coordinate facets included.
  Location locate(const std::vector<Rational>& point, const Rational& lambda) const;

  /// Exact volume of Q = closure(R+^n \ P), i.e. M^n minus the volume of the
  /// boxed polytope. Requires the underlying ideal zero-dimensional.
  Rational complement_volume() const;

  bool zero_dimensional() const { return zero_dimensional_; }

 private:
  int dim_;
  bool zero_dimensional_;
  bool is_unit_;
  std::vector<Exponent> generators_;
  std::vector<Facet> facets_;
  std::int64_t box_bound_ = 0;
  std::vector<std::vector<Rational>> vertices_;
  Rational boxed_volume_;
};

/// Spec-facing constructor: requires a nonzero and zero-dimensional.
NewtonPolyhedron build_polyhedron(const MonomialIdeal& a);

/// Hilbert-Samuel multiplicity e(a) = n! vol(Q) for a zero-dimensional
/// monomial ideal; 0 for the unit ideal, a positive integer otherwise.
Int multiplicity(const MonomialIdeal& a);

/// Log canonical threshold of a nonzero proper monomial ideal, from the exit
/// parameter of the diagonal ray: 1/lct = max over non-coordinate facets of
/// offset / <normal, (1,...,1)>.
Rational lct(const MonomialIdeal& a);

/// min over generators g of <w, g>; equals order_at_max_ideal when w = e.
/// Requires a nonzero.
Rational ord_weight(const MonomialIdeal& a, const WeightVector& w);

}  // namespace ideals

#endif
