#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "singulact/monomial_ideal.hpp"
#include "singulact/rational.hpp"

namespace singulact::newton {

using Point = std::vector<Rat>;

/// Limits for the exhaustive facet / vertex enumeration.
struct Caps {
  std::size_t max_dim = 4;
  std::size_t max_points = 24;

  /// Defaults, with max_dim overridden by SINGULACT_CAPS_N when set.
  static Caps from_env();
};

/// Supporting half-space <normal, x> >= offset. The normal is nonnegative,
/// scaled to coprime integers, and offset = min over generators of <normal, v>.
struct Facet {
  std::vector<Rat> normal;
  Rat offset;

  friend bool operator==(const Facet&, const Facet&) = default;
  friend auto operator<=>(const Facet&, const Facet&) = default;
};

/// P(a) = conv(gens of a) + R_{>=0}^n. Facets and vertices are computed on first
/// request and cached; copies share the cache.
class NewtonPolyhedron {
 public:
  explicit NewtonPolyhedron(const MonomialIdeal& a);

  std::size_t dim() const noexcept { return n_; }
  const std::vector<ExpVec>& points() const noexcept { return points_; }

  /// Sorted by normal. Throws CapsExceeded beyond `caps`.
  const std::vector<Facet>& facets(const Caps& caps = Caps{}) const;
  /// Lexicographically sorted.
  const std::vector<Point>& vertices(const Caps& caps = Caps{}) const;

 private:
  struct Cache;
  void check_caps(const Caps& caps) const;

  std::size_t n_;
  std::vector<ExpVec> points_;
  std::shared_ptr<Cache> cache_;
};

/// Throws InputError for the zero ideal.
NewtonPolyhedron build(const MonomialIdeal& a);

/// LP feasibility of q = sum l_j v_j + s with l >= 0, sum l_j = 1, s >= 0.
bool contains(const NewtonPolyhedron& P, const Point& q);

/// min { t >= 0 : (t, ..., t) in P }.
Rat diagonal_threshold(const NewtonPolyhedron& P);

/// x^v lies in the integral closure of a.
bool integral_closure_member(const MonomialIdeal& a, const ExpVec& v);

/// Facet-based membership: <u, q> >= c for every facet.
bool contains_by_facets(const NewtonPolyhedron& P, const Point& q, const Caps& caps = Caps{});

/// Volume of R_{>=0}^n minus P, for zero-dimensional ideals.
Rat covolume(const NewtonPolyhedron& P, const Caps& caps = Caps{});

/// Hilbert-Samuel multiplicity e(a) = n! * covolume(P(a)) of a zero-dimensional
/// monomial ideal.
std::uint64_t multiplicity(const MonomialIdeal& a, const Caps& caps = Caps{});

/// Exact volume of the bounded, full-dimensional polytope { x : <a_i, x> >= b_i },
/// by vertex enumeration and a pulling triangulation from the lexicographically
/// smallest vertex of every face.
Rat polytope_volume(const std::vector<Facet>& halfspaces, std::size_t n);

}  // namespace singulact::newton
