#pragma once

#include <optional>
#include <vector>

#include "singulact/polynomial.hpp"

namespace singulact {

/// Positive variable weights normalized so that the certified polynomial has
/// weighted degree 1: <w, v> = 1 on its support.
struct Weights {
  std::vector<Rat> w;

  std::size_t size() const noexcept { return w.size(); }
  Rat sum() const;
  Rat degree(const ExpVec& v) const;
};

/// Solves <w, v> = 1 over the support of f with every w_i > 0. When the system
/// is underdetermined, returns the LP vertex maximizing min_i w_i (with the
/// normalization w_i <= 1, which only binds for variables absent from f).
/// nullopt when no positive solution exists. Throws InputError unless f(0) = 0, f != 0.
std::optional<Weights> quasi_homogeneous_weights(const Poly& f);

/// Euler identity: sum_i w_i x_i df/dx_i == f.
bool euler_check(const Poly& f, const Weights& w);

/// For f weighted homogeneous of degree 1 w.r.t. w, decides whether J'_f is
/// primary to the maximal ideal, i.e. f has an isolated singularity at 0.
///
/// Passing means: every monomial whose weighted degree lies in (s, s + max w]
/// with s = sum (1 - 2 w_i) is a Q-linear combination of products x^m df/dx_i.
/// That forces every monomial of weighted degree > s into J'_f. Conversely, for
/// an isolated singularity the Milnor algebra vanishes above degree s, so the
/// test is exact.
bool jacobian_is_m_primary(const Poly& f, const Weights& w);

}  // namespace singulact
