#include "singulact/monomial_ideal.hpp"

#include <algorithm>

#include "singulact/errors.hpp"

namespace singulact {

namespace {

std::vector<ExpVec> minimalize(std::vector<ExpVec> gens) {
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // A divisor of v is lexicographically <= v, so it is already kept when v is reached.
  std::vector<ExpVec> kept;
  for (auto& v : gens) {
    bool dominated = std::any_of(kept.begin(), kept.end(), [&](const ExpVec& u) { return u.divides(v); });
    if (!dominated) kept.push_back(std::move(v));
  }
  return kept;
}

void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n) : n_(n) {
  if (n == 0) throw InputError("ambient dimension must be at least 1");
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExpVec> gens) : MonomialIdeal(n) {
  for (const auto& v : gens)
    if (v.size() != n) throw DimensionMismatch(n, v.size());
  gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

std::string MonomialIdeal::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ",";
    s += gens_[i].str();
  }
  return s + "}";
}

void require_nonzero(const MonomialIdeal& a) {
  if (a.is_zero()) throw InputError("zero ideal");
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  require_nonzero(a);
  require_nonzero(b);
  std::vector<ExpVec> sums;
  sums.reserve(a.gens().size() * b.gens().size());
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) sums.push_back(u + v);
  return MonomialIdeal(a.dim(), std::move(sums));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, unsigned k) {
  if (k == 0) throw InputError("ideal power exponent must be at least 1");
  require_nonzero(a);
  MonomialIdeal r = a;
  for (unsigned i = 1; i < k; ++i) r = ideal_product(r, a);
  return r;
}

MonomialIdeal maximal_ideal(std::size_t n) {
  std::vector<ExpVec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(ExpVec::unit(n, i));
  return MonomialIdeal(n, std::move(gens));
}

MonomialIdeal maximal_ideal_power(std::size_t n, unsigned d) {
  if (d == 0) throw InputError("power of the maximal ideal must be at least 1");
  if (n == 0) throw InputError("ambient dimension must be at least 1");
  std::vector<ExpVec> gens;
  ExpVec cur(n);
  // Compositions of d into n parts.
  auto rec = [&](auto& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      cur[i] = left;
      gens.push_back(cur);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      cur[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return MonomialIdeal(n, std::move(gens));
}

bool contains_monomial(const MonomialIdeal& a, const ExpVec& v) {
  if (v.size() != a.dim()) throw DimensionMismatch(a.dim(), v.size());
  return std::any_of(a.gens().begin(), a.gens().end(), [&](const ExpVec& u) { return u.divides(v); });
}

bool ideal_contains(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  return std::all_of(b.gens().begin(), b.gens().end(), [&](const ExpVec& v) { return contains_monomial(a, v); });
}

bool poly_in_ideal(const MonomialIdeal& a, const Poly& f) {
  if (f.dim() != a.dim()) throw DimensionMismatch(a.dim(), f.dim());
  for (const auto& [v, c] : f.terms())
    if (!contains_monomial(a, v)) return false;
  return true;
}

bool is_zero_dimensional(const MonomialIdeal& a) {
  require_nonzero(a);
  if (a.is_unit()) return true;
  std::vector<bool> seen(a.dim(), false);
  for (const auto& v : a.gens())
    if (auto axis = v.pure_power_axis()) seen[*axis] = true;
  return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
}

MonomializeResult monomialize(const std::vector<Poly>& gens) {
  if (gens.empty()) throw InputError("empty generator list");
  const std::size_t n = gens.front().dim();
  std::vector<ExpVec> mons;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Poly& g = gens[k];
    if (g.dim() != n) throw DimensionMismatch(n, g.dim());
    if (g.is_zero()) continue;
    auto it = g.terms().begin();
    ExpVec gcd = it->first;
    for (++it; it != g.terms().end(); ++it) gcd = componentwise_min(gcd, it->first);
    // The cofactor g / x^gcd has nonzero constant term iff x^gcd itself is a term of g.
    if (g.terms().count(gcd) == 0) return MonomializeResult{std::nullopt, k};
    mons.push_back(std::move(gcd));
  }
  if (mons.empty()) throw InputError("all generators are zero");
  return MonomializeResult{MonomialIdeal(n, std::move(mons)), std::nullopt};
}

MonomialIdeal support_ideal(const Poly& f) { return MonomialIdeal(f.dim(), f.support()); }

}  // namespace singulact
