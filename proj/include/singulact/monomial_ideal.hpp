#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singulact/polynomial.hpp"

namespace singulact {

/// Monomial ideal in Q[x_1..x_n], stored as its minimal generators: a
/// lexicographically sorted antichain under componentwise <=.
/// No generators means the zero ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n);
  /// Reduces `gens` to the antichain of minimal elements.
  MonomialIdeal(std::size_t n, std::vector<ExpVec> gens);

  std::size_t dim() const noexcept { return n_; }
  const std::vector<ExpVec>& gens() const noexcept { return gens_; }
  bool is_zero() const noexcept { return gens_.empty(); }
  /// The unit ideal (1), i.e. the generator set is {0}.
  bool is_unit() const noexcept;
  std::string str() const;  // "{(2,0),(1,1)}"

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::size_t n_;
  std::vector<ExpVec> gens_;
};

/// Throws InputError for the zero ideal.
void require_nonzero(const MonomialIdeal& a);

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
/// a^k, k >= 1.
MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned k);
/// (x_1, ..., x_n).
MonomialIdeal maximal_ideal(std::size_t n);
/// (x_1, ..., x_n)^d, d >= 1: all monomials of degree d.
MonomialIdeal maximal_ideal_power(std::size_t n, unsigned d);

/// b is contained in a.
bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b);
bool contains_monomial(const MonomialIdeal& a, const ExpVec& v);
/// Every support monomial of f lies in a.
bool poly_in_ideal(const MonomialIdeal& a, const Poly& f);

/// Every axis carries a pure power among the generators (the unit ideal counts).
bool is_zero_dimensional(const MonomialIdeal& a);

struct MonomializeResult {
  std::optional<MonomialIdeal> ideal;
  /// Index of the first generator whose cofactor vanishes at the origin.
  std::optional<std::size_t> offending;
  bool ok() const noexcept { return ideal.has_value(); }
};

/// Writes each g as x^v * h with x^v the gcd monomial of its support and
/// succeeds iff every h(0) != 0, in which case the local ideal (gens) equals
/// the monomial ideal (x^v). Zero generators contribute nothing and are skipped.
MonomializeResult monomialize(const std::vector<Poly>& gens);

/// The monomial ideal generated by the support of f.
MonomialIdeal support_ideal(const Poly& f);

}  // namespace singulact
