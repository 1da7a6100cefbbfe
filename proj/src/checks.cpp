#include <algorithm>

#include "singulact/errors.hpp"
#include "singulact/invariants.hpp"
#include "singulact/parse.hpp"

namespace singulact {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::indeterminate: return "indeterminate";
  }
  return "?";
}

namespace {

std::string echo(const Poly& f) { return parse::format_polynomial(f, parse::VarTable::generic(f.dim())); }
std::string echo(const MonomialIdeal& a) { return parse::format_ideal(a, parse::VarTable::generic(a.dim())); }

CheckOutcome compare(std::string name, const ExtRat& lhs, const std::string& rel, const ExtRat& rhs,
                     std::string witness) {
  CheckOutcome c;
  c.name = std::move(name);
  c.relation = rel;
  c.lhs = Bound::point(lhs);
  c.rhs = Bound::point(rhs);
  bool ok = rel == "<=" ? lhs <= rhs : lhs >= rhs;
  c.verdict = ok ? Verdict::holds : Verdict::fails;
  c.equality = lhs == rhs;
  c.witness = std::move(witness);
  return c;
}

// v = k * c^n with k n-th-power free.
std::pair<mpz_class, mpz_class> power_free_split(std::uint64_t v, unsigned n) {
  mpz_class k = 1, c = 1;
  std::uint64_t rest = v;
  for (std::uint64_t p = 2; p * p <= rest; ++p) {
    unsigned e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    for (unsigned i = 0; i < e / n; ++i) c *= static_cast<unsigned long>(p);
    for (unsigned i = 0; i < e % n; ++i) k *= static_cast<unsigned long>(p);
  }
  if (rest > 1) {
    if (n == 1)
      c *= static_cast<unsigned long>(rest);
    else
      k *= static_cast<unsigned long>(rest);
  }
  return {k, c};
}

// [lo, hi] with lo = floor(v^{1/n} 2^bits) / 2^bits; hi == lo when the root is exact.
Bound root_bracket(std::uint64_t v, unsigned n, unsigned bits) {
  mpz_class scaled = static_cast<unsigned long>(v);
  scaled <<= static_cast<mp_bitcnt_t>(bits) * n;
  mpz_class r;
  int exact = mpz_root(r.get_mpz_t(), scaled.get_mpz_t(), n);
  mpz_class den = 1;
  den <<= bits;
  Rat lo(r, den);
  Rat hi = exact ? lo : Rat(mpz_class(r + 1), den);
  return Bound{lo, hi};
}

Bound add(const Bound& a, const Bound& b) { return Bound{a.lo.value() + b.lo.value(), a.hi.value() + b.hi.value()}; }

}  // namespace

CheckOutcome compare_root_sum(std::uint64_t X, std::uint64_t Y, std::uint64_t Z, unsigned n, unsigned precision_bits) {
  if (n == 0) throw InputError("root index must be positive");
  CheckOutcome c;
  c.name = "minkowski";
  c.relation = "<=";
  auto radical = [n](std::uint64_t v) { return std::to_string(v) + "^(1/" + std::to_string(n) + ")"; };
  c.note = radical(X) + " <= " + radical(Y) + " + " + radical(Z);

  bool equal;
  if (Y == 0 || Z == 0) {
    equal = X == Y + Z;
  } else if (X == 0) {
    equal = false;
  } else {
    auto [kx, cx] = power_free_split(X, n);
    auto [ky, cy] = power_free_split(Y, n);
    auto [kz, cz] = power_free_split(Z, n);
    // n-th roots of distinct n-th-power-free integers are linearly independent over Q.
    equal = kx == ky && ky == kz && cx == cy + cz;
  }

  for (unsigned bits = 8;; bits = std::min(bits * 2, precision_bits)) {
    c.lhs = root_bracket(X, n, bits);
    c.rhs = add(root_bracket(Y, n, bits), root_bracket(Z, n, bits));
    if (equal) {
      if (bits >= precision_bits) break;
      continue;
    }
    if (c.lhs.hi <= c.rhs.lo) {
      c.verdict = Verdict::holds;
      return c;
    }
    if (c.lhs.lo >= c.rhs.hi) {
      c.verdict = Verdict::fails;
      return c;
    }
    if (bits >= precision_bits) {
      c.verdict = Verdict::indeterminate;
      return c;
    }
  }
  c.verdict = Verdict::holds;
  c.equality = true;
  return c;
}

CheckOutcome check_question1(const Poly& f) {
  require_vanishing_at_origin(f);
  if (*order_at_origin(f) < 2) throw InputError("the origin is a smooth point of " + echo(f) + "; the comparison concerns singular points");
  auto a = alpha(f);
  auto b = beta(f);
  return compare("question1", a.value, "<=", b.value, echo(f));
}

CheckOutcome check_thm_alpha_le_lct(const Poly& f, const MonomialIdeal& a) {
  require_vanishing_at_origin(f);
  require_nonzero(a);
  if (a.dim() != f.dim()) throw DimensionMismatch(f.dim(), a.dim());
  if (!ideal_contains(maximal_ideal(a.dim()), a)) throw InputError("hypothesis fails: ideal is not contained in m");
  if (!poly_in_ideal(ideal_product(maximal_ideal(a.dim()), a), f))
    throw InputError("hypothesis fails: " + echo(f) + " is not in m * " + echo(a));
  auto al = alpha(f);
  auto l = lct_monomial(a);
  return compare("thm-alpha-lct", al.value, "<=", l.value, echo(f) + " ; " + echo(a));
}

CheckOutcome check_restriction(const Poly& f, std::size_t i) {
  Poly g = restrict_to_coordinate_hyperplane(f, i);
  auto bf = beta(f);
  auto bg = beta(g);
  return compare("restriction", bf.value, ">=", bg.value, echo(f) + " ; x" + std::to_string(i + 1) + " = 0");
}

CheckOutcome check_madic(const Poly& f, const Poly& g) {
  if (f.dim() != g.dim()) throw DimensionMismatch(f.dim(), g.dim());
  if (f == g) throw InputError("m-adic comparison needs f != g");
  const auto d = *order_at_origin(f - g);
  Rat bf = beta(f).value.value();
  Rat bg = beta(g).value.value();
  Rat bound(static_cast<long>(f.dim()), static_cast<long>(d));
  auto c = compare("madic", (bf - bg).abs(), "<=", bound, echo(f) + " ; " + echo(g));
  c.note = "d = " + std::to_string(d);
  return c;
}

CheckOutcome check_milnor_bound(const Poly& f) {
  const std::size_t n = f.dim();
  Rat b = beta(f).value.value();
  Rat mu = milnor(f).value.value();
  Rat q = Rat(static_cast<long>(n)) / b - Rat(1);
  Rat lhs = q.sign() > 0 ? q.pow(static_cast<unsigned>(n)) : q;
  auto c = compare("milnor-bound", lhs, "<=", mu, echo(f));
  c.note = "beta = " + b.str() + ", mu = " + mu.str();
  return c;
}

CheckOutcome check_dfem(const MonomialIdeal& a, const newton::Caps& caps) {
  require_nonzero(a);
  if (!is_zero_dimensional(a)) throw InputError("ideal " + echo(a) + " is not zero-dimensional");
  const std::size_t n = a.dim();
  Rat e(newton::multiplicity(a, caps));
  Rat l = lct_monomial(a).value.value();
  Rat rhs = (Rat(static_cast<long>(n)) / l).pow(static_cast<unsigned>(n));
  return compare("dfem", e, ">=", rhs, echo(a));
}

CheckOutcome check_minkowski(const MonomialIdeal& a, const MonomialIdeal& b, const newton::Caps& caps) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
  require_nonzero(a);
  require_nonzero(b);
  if (!is_zero_dimensional(a)) throw InputError("ideal " + echo(a) + " is not zero-dimensional");
  if (!is_zero_dimensional(b)) throw InputError("ideal " + echo(b) + " is not zero-dimensional");
  auto X = newton::multiplicity(ideal_product(a, b), caps);
  auto Y = newton::multiplicity(a, caps);
  auto Z = newton::multiplicity(b, caps);
  auto c = compare_root_sum(X, Y, Z, static_cast<unsigned>(a.dim()));
  c.witness = echo(a) + " ; " + echo(b);
  return c;
}

}  // namespace singulact
