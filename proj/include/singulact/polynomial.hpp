#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "singulact/rational.hpp"

namespace singulact {

/// Exponent vector in N^n, i.e. the monomial x^v.
class ExpVec {
 public:
  using value_type = std::uint32_t;

  ExpVec() = default;
  explicit ExpVec(std::size_t n) : e_(n, 0) {}
  ExpVec(std::initializer_list<value_type> e) : e_(e) {}
  explicit ExpVec(std::vector<value_type> e) : e_(std::move(e)) {}

  static ExpVec unit(std::size_t n, std::size_t i);

  std::size_t size() const noexcept { return e_.size(); }
  value_type operator[](std::size_t i) const { return e_[i]; }
  value_type& operator[](std::size_t i) { return e_[i]; }
  auto begin() const noexcept { return e_.begin(); }
  auto end() const noexcept { return e_.end(); }
  const std::vector<value_type>& entries() const noexcept { return e_; }

  /// Total degree |v|.
  std::uint64_t degree() const noexcept;
  bool is_zero() const noexcept;
  /// Componentwise <=, i.e. x^this divides x^other.
  bool divides(const ExpVec& other) const;
  /// Index of the only nonzero entry, when this is a pure power x_i^k (k >= 1).
  std::optional<std::size_t> pure_power_axis() const;
  std::vector<Rat> to_rational() const;
  std::string str() const;  // "(2,0,1)"

  friend ExpVec operator+(const ExpVec& a, const ExpVec& b);
  friend bool operator==(const ExpVec&, const ExpVec&) = default;
  friend auto operator<=>(const ExpVec&, const ExpVec&) = default;

 private:
  std::vector<value_type> e_;
};

/// Componentwise minimum; the exponent of the gcd monomial.
ExpVec componentwise_min(const ExpVec& a, const ExpVec& b);

/// Sparse polynomial over Q in n variables. Zero coefficients are never stored.
class Poly {
 public:
  using TermMap = std::map<ExpVec, Rat>;

  explicit Poly(std::size_t n);
  Poly(std::size_t n, TermMap terms);

  static Poly constant(std::size_t n, const Rat& c);
  static Poly monomial(const ExpVec& v, const Rat& c = Rat(1));
  static Poly variable(std::size_t n, std::size_t i);

  std::size_t dim() const noexcept { return n_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Rat coefficient(const ExpVec& v) const;
  Rat constant_term() const;
  std::vector<ExpVec> support() const;

  Poly pow(unsigned k) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rat& c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add_term(const ExpVec& v, const Rat& c);
  void check_dim(const Poly& o) const;

  std::size_t n_;
  TermMap terms_;
};

/// d f / d x_i (0-based index). Throws InputError when i >= n.
Poly partial_derivative(const Poly& f, std::size_t i);

/// The generators of J'_f = (df/dx_1, ..., df/dx_n), with f prepended when
/// `include_f` is set (then J_f). Throws InputError on f = 0.
std::vector<Poly> jacobian_generators(const Poly& f, bool include_f = false);

/// Multiplicity at the origin: min |v| over the support; nullopt (infinity) for f = 0.
std::optional<std::uint64_t> order_at_origin(const Poly& f);

/// f restricted to {x_i = 0}, as a polynomial in the remaining n-1 variables.
/// Throws InputError when the restriction vanishes identically or n = 1.
Poly restrict_to_coordinate_hyperplane(const Poly& f, std::size_t i);

/// Requires f(0) = 0 and f != 0; throws InputError otherwise.
void require_vanishing_at_origin(const Poly& f);

}  // namespace singulact
