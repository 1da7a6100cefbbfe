#include "singulact/rational.hpp"

#include <ostream>

#include "singulact/errors.hpp"

namespace singulact {

Rat::Rat(long num, long den) : v_(num, den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_.canonicalize();
}

Rat::Rat(mpz_class num) : v_(num) {}

Rat::Rat(mpz_class num, mpz_class den) {
  if (den == 0) throw InputError("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat::Rat(mpq_class v) : v_(std::move(v)) {
  if (v_.get_den() == 0) throw InputError("rational with zero denominator");
  v_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
  auto is_digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool neg = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    neg = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num) || !is_digits(den))
    throw ParseError("malformed rational literal '" + std::string(text) + "'", 0);
  mpz_class n(std::string(num), 10), d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'", slash + (neg ? 2 : 1));
  if (neg) n = -n;
  return Rat(n, d);
}

Rat Rat::abs() const { return sign() < 0 ? -*this : *this; }

Rat Rat::inverse() const {
  if (is_zero()) throw InputError("inverse of zero");
  return Rat(mpq_class(v_.get_den(), v_.get_num()));
}

Rat Rat::pow(unsigned k) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), k);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), k);
  return Rat(n, d);
}

std::string Rat::str() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat& Rat::operator+=(const Rat& o) {
  v_ += o.v_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  v_ -= o.v_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  v_ *= o.v_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw InputError("division by zero");
  v_ /= o.v_;
  return *this;
}

Rat operator-(const Rat& a) {
  Rat r;
  r.v_ = -a.v_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

Rat min(const Rat& a, const Rat& b) { return b < a ? b : a; }
Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }

ExtRat ExtRat::parse(std::string_view text) {
  if (text == "inf") return infinity();
  return ExtRat(Rat::parse(text));
}

const Rat& ExtRat::value() const {
  if (!v_) throw InputError("value is infinite");
  return *v_;
}

std::string ExtRat::str() const { return v_ ? v_->str() : "inf"; }

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  if (a.is_infinite() || b.is_infinite()) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    return a.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return *a.v_ <=> *b.v_;
}

std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

}  // namespace singulact
