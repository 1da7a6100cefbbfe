#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace singulact {

/// Arbitrary-precision rational, always in lowest terms with a positive denominator.
class Rat {
 public:
  Rat() = default;
  template <std::signed_integral I>
  Rat(I v) : v_(static_cast<long>(v)) {}
  template <std::unsigned_integral I>
  Rat(I v) : v_(static_cast<unsigned long>(v)) {}
  Rat(long num, long den);
  explicit Rat(mpz_class num);
  Rat(mpz_class num, mpz_class den);
  explicit Rat(mpq_class v);

  /// Parses "p", "-p" or "p/q" (q > 0).
  static Rat parse(std::string_view text);

  const mpq_class& mpq() const noexcept { return v_; }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }

  int sign() const noexcept { return sgn(v_); }
  bool is_zero() const noexcept { return sign() == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  Rat abs() const;
  Rat inverse() const;  // throws InputError on zero
  Rat pow(unsigned k) const;
  std::string str() const;

  Rat& operator+=(const Rat& o);
  Rat& operator-=(const Rat& o);
  Rat& operator*=(const Rat& o);
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
  friend Rat operator-(const Rat& a);

  friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.v_, b.v_) == 0; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);

/// A Rat or +Infinity. Infinity compares greater than every Rat.
class ExtRat {
 public:
  ExtRat() = default;  // zero
  ExtRat(Rat v) : v_(std::move(v)) {}
  template <std::integral I>
  ExtRat(I v) : v_(Rat(v)) {}

  static ExtRat infinity() {
    ExtRat r;
    r.v_.reset();
    return r;
  }
  /// Parses a rational literal or "inf".
  static ExtRat parse(std::string_view text);

  bool is_infinite() const noexcept { return !v_.has_value(); }
  bool is_finite() const noexcept { return v_.has_value(); }
  /// Throws InputError when infinite.
  const Rat& value() const;
  std::string str() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) = default;
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

 private:
  std::optional<Rat> v_ = Rat(0);
};

std::ostream& operator<<(std::ostream& os, const ExtRat& r);

}  // namespace singulact
