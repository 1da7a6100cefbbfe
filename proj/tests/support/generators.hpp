#pragma once

#include <random>
#include <vector>

#include "singulact/monomial_ideal.hpp"
#include "singulact/polynomial.hpp"
#include "singulact/simplex.hpp"

namespace gen {

using singulact::ExpVec;
using singulact::MonomialIdeal;
using singulact::Poly;
using singulact::Rat;
using Rng = std::mt19937_64;

inline unsigned uniform(Rng& rng, unsigned lo, unsigned hi) {
  return std::uniform_int_distribution<unsigned>(lo, hi)(rng);
}

inline ExpVec exponent(Rng& rng, std::size_t n, unsigned max_exp) {
  std::vector<ExpVec::value_type> e(n);
  for (auto& x : e) x = uniform(rng, 0, max_exp);
  return ExpVec(e);
}

inline ExpVec pure_power(std::size_t n, std::size_t i, unsigned k) {
  std::vector<ExpVec::value_type> e(n, 0);
  e[i] = k;
  return ExpVec(e);
}

/// Nonzero ideal contained in m.
inline MonomialIdeal ideal(Rng& rng, std::size_t n, std::size_t max_gens, unsigned max_exp) {
  std::vector<ExpVec> gens;
  const std::size_t k = uniform(rng, 1, static_cast<unsigned>(max_gens));
  while (gens.size() < k) {
    auto v = exponent(rng, n, max_exp);
    if (!v.is_zero()) gens.push_back(v);
  }
  return MonomialIdeal(n, gens);
}

/// Zero-dimensional ideal contained in m: a pure power on every axis plus random extras.
inline MonomialIdeal zero_dim_ideal(Rng& rng, std::size_t n, std::size_t max_gens, unsigned max_exp) {
  std::vector<ExpVec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(pure_power(n, i, uniform(rng, 1, max_exp)));
  const std::size_t extra = max_gens > n ? uniform(rng, 0, static_cast<unsigned>(max_gens - n)) : 0;
  for (std::size_t j = 0; j < extra; ++j) {
    auto v = exponent(rng, n, max_exp);
    if (!v.is_zero()) gens.push_back(v);
  }
  return MonomialIdeal(n, gens);
}

inline Rat coefficient(Rng& rng) {
  long p = static_cast<long>(uniform(rng, 1, 9));
  if (uniform(rng, 0, 1)) p = -p;
  return Rat(p, static_cast<long>(uniform(rng, 1, 4)));
}

inline Poly poly(Rng& rng, std::size_t n, std::size_t max_terms, unsigned max_exp) {
  Poly f(n);
  const std::size_t k = uniform(rng, 1, static_cast<unsigned>(max_terms));
  for (std::size_t j = 0; j < k; ++j) f = f + Poly::monomial(exponent(rng, n, max_exp), coefficient(rng));
  return f;
}

/// sum c_i x_i^{a_i}, a_i in [2, max_exp].
inline Poly diagonal(Rng& rng, std::size_t n, unsigned max_exp, std::vector<unsigned>* exps = nullptr) {
  Poly f(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned a = uniform(rng, 2, max_exp);
    if (exps) exps->push_back(a);
    f = f + Poly::monomial(pure_power(n, i, a), coefficient(rng));
  }
  return f;
}

/// Random equality-form program with a bounding row sum(z) + slack = cap.
inline singulact::lp::LinearProgram bounded_lp(Rng& rng, std::size_t vars, std::size_t rows) {
  singulact::lp::LinearProgram lp;
  const std::size_t cols = vars + 1;
  for (std::size_t j = 0; j < vars; ++j) lp.objective.push_back(Rat(static_cast<long>(uniform(rng, 0, 8)) - 4));
  lp.objective.push_back(Rat(0));
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<Rat> row;
    for (std::size_t j = 0; j < vars; ++j) row.push_back(Rat(static_cast<long>(uniform(rng, 0, 6)) - 2));
    row.push_back(Rat(0));
    lp.A.push_back(row);
    lp.b.push_back(Rat(static_cast<long>(uniform(rng, 0, 8)) - 2));
  }
  lp.A.push_back(std::vector<Rat>(cols, Rat(1)));
  lp.b.push_back(Rat(static_cast<long>(uniform(rng, 1, 10))));
  return lp;
}

}  // namespace gen
