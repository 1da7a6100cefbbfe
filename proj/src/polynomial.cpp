#include "singulact/polynomial.hpp"

#include <algorithm>

#include "singulact/errors.hpp"

namespace singulact {

ExpVec ExpVec::unit(std::size_t n, std::size_t i) {
  ExpVec v(n);
  v.e_.at(i) = 1;
  return v;
}

std::uint64_t ExpVec::degree() const noexcept {
  std::uint64_t d = 0;
  for (auto x : e_) d += x;
  return d;
}

bool ExpVec::is_zero() const noexcept {
  return std::all_of(e_.begin(), e_.end(), [](auto x) { return x == 0; });
}

bool ExpVec::divides(const ExpVec& other) const {
  if (size() != other.size()) throw DimensionMismatch(size(), other.size());
  for (std::size_t i = 0; i < size(); ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

std::optional<std::size_t> ExpVec::pure_power_axis() const {
  std::optional<std::size_t> axis;
  for (std::size_t i = 0; i < size(); ++i) {
    if (e_[i] == 0) continue;
    if (axis) return std::nullopt;
    axis = i;
  }
  return axis;
}

std::vector<Rat> ExpVec::to_rational() const {
  std::vector<Rat> r;
  r.reserve(size());
  for (auto x : e_) r.emplace_back(x);
  return r;
}

std::string ExpVec::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e_[i]);
  }
  return s + ")";
}

ExpVec operator+(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.e_[i] = a.e_[i] + b.e_[i];
  return r;
}

ExpVec componentwise_min(const ExpVec& a, const ExpVec& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  ExpVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
  return r;
}

Poly::Poly(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("ambient dimension must be at least 1");
}

Poly::Poly(std::size_t n, TermMap terms) : Poly(n) {
  for (auto& [v, c] : terms) add_term(v, c);
}

Poly Poly::constant(std::size_t n, const Rat& c) {
  Poly p(n);
  p.add_term(ExpVec(n), c);
  return p;
}

Poly Poly::monomial(const ExpVec& v, const Rat& c) {
  Poly p(v.size());
  p.add_term(v, c);
  return p;
}

Poly Poly::variable(std::size_t n, std::size_t i) { return monomial(ExpVec::unit(n, i)); }

Rat Poly::coefficient(const ExpVec& v) const {
  auto it = terms_.find(v);
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly::constant_term() const { return coefficient(ExpVec(n_)); }

std::vector<ExpVec> Poly::support() const {
  std::vector<ExpVec> s;
  s.reserve(terms_.size());
  for (const auto& [v, c] : terms_) s.push_back(v);
  return s;
}

void Poly::add_term(const ExpVec& v, const Rat& c) {
  if (v.size() != n_) throw DimensionMismatch(n_, v.size());
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(v, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_dim(const Poly& o) const {
  if (o.n_ != n_) throw DimensionMismatch(n_, o.n_);
}

Poly& Poly::operator+=(const Poly& o) {
  check_dim(o);
  for (const auto& [v, c] : o.terms_) add_term(v, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_dim(o);
  for (const auto& [v, c] : o.terms_) add_term(v, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  check_dim(o);
  Poly r(n_);
  for (const auto& [u, a] : terms_)
    for (const auto& [v, b] : o.terms_) r.add_term(u + v, a * b);
  terms_ = std::move(r.terms_);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [v, a] : terms_) a *= c;
  return *this;
}

Poly Poly::pow(unsigned k) const {
  Poly result = constant(n_, Rat(1));
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Poly partial_derivative(const Poly& f, std::size_t i) {
  if (i >= f.dim())
    throw InputError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(f.dim()));
  Poly::TermMap out;
  for (const auto& [v, c] : f.terms()) {
    if (v[i] == 0) continue;
    ExpVec w = v;
    w[i] -= 1;
    out.emplace(std::move(w), c * Rat(v[i]));
  }
  return Poly(f.dim(), std::move(out));
}

std::vector<Poly> jacobian_generators(const Poly& f, bool include_f) {
  if (f.is_zero()) throw InputError("Jacobian ideal of the zero polynomial");
  std::vector<Poly> gens;
  if (include_f) gens.push_back(f);
  for (std::size_t i = 0; i < f.dim(); ++i) gens.push_back(partial_derivative(f, i));
  return gens;
}

std::optional<std::uint64_t> order_at_origin(const Poly& f) {
  std::optional<std::uint64_t> best;
  for (const auto& [v, c] : f.terms()) {
    auto d = v.degree();
    if (!best || d < *best) best = d;
  }
  return best;
}

Poly restrict_to_coordinate_hyperplane(const Poly& f, std::size_t i) {
  if (i >= f.dim())
    throw InputError("variable index " + std::to_string(i + 1) + " out of range 1.." +
                     std::to_string(f.dim()));
  if (f.dim() == 1) throw InputError("cannot restrict a polynomial in one variable");
  Poly::TermMap out;
  for (const auto& [v, c] : f.terms()) {
    if (v[i] != 0) continue;
    std::vector<ExpVec::value_type> e;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (j != i) e.push_back(v[j]);
    out.emplace(ExpVec(std::move(e)), c);
  }
  Poly g(f.dim() - 1, std::move(out));
  if (g.is_zero())
    throw InputError("restriction to x" + std::to_string(i + 1) +
                     " = 0 is identically zero (hyperplane contained in the hypersurface)");
  return g;
}

void require_vanishing_at_origin(const Poly& f) {
  if (f.is_zero()) throw InputError("polynomial is zero");
  if (!f.constant_term().is_zero())
    throw InputError("f(0) = " + f.constant_term().str() + " != 0: origin is not on the hypersurface");
}

}  // namespace singulact
