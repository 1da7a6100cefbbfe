#include "singulact/invariants.hpp"

#include <algorithm>

#include "singulact/errors.hpp"
#include "singulact/parse.hpp"
#include "singulact/weights.hpp"

namespace singulact {

std::string to_string(InvariantKind k) {
  switch (k) {
    case InvariantKind::lct: return "lct";
    case InvariantKind::beta: return "beta";
    case InvariantKind::alpha: return "alpha";
    case InvariantKind::milnor: return "milnor";
    case InvariantKind::multiplicity: return "multiplicity";
  }
  return "?";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::monomial_lp: return "monomial-lp";
    case Method::facet_dual: return "facet-dual";
    case Method::closed_form_ordinary: return "closed-form-ordinary";
    case Method::weighted_homogeneous: return "weighted-homogeneous";
    case Method::nondegenerate_newton: return "nondegenerate-newton";
    case Method::registry: return "registry";
    case Method::smooth_point: return "smooth-point";
    case Method::staircase: return "staircase";
    case Method::newton_covolume: return "newton-covolume";
  }
  return "?";
}

namespace {

std::string echo(const Poly& f) { return parse::format_polynomial(f, parse::VarTable::generic(f.dim())); }
std::string echo(const MonomialIdeal& a) { return parse::format_ideal(a, parse::VarTable::generic(a.dim())); }

void require_proper(const MonomialIdeal& a) {
  require_nonzero(a);
  for (const auto& v : a.gens())
    if (v.is_zero()) throw InputError("unit ideal: the origin is not in its zero locus");
}

MonomialIdeal monomial_jacobian(const Poly& f, bool include_f) {
  if (include_f) {
    // (f, J'_f) = J'_f whenever every monomial of f already lies in J'_f.
    auto partials = monomialize(jacobian_generators(f));
    if (partials.ok() && poly_in_ideal(*partials.ideal, f)) return *partials.ideal;
  }
  auto gens = jacobian_generators(f, include_f);
  auto mono = monomialize(gens);
  if (!mono.ok()) {
    const std::size_t k = *mono.offending;
    std::string which = include_f ? (k == 0 ? "f" : "df/dx" + std::to_string(k)) : "df/dx" + std::to_string(k + 1);
    throw UnsupportedClass("unsupported input class: Jacobian generator " + which + " = " + echo(gens[k]) +
                           " is not a monomial times a unit at the origin");
  }
  return *mono.ideal;
}

}  // namespace

Rat ord_u(const MonomialIdeal& a, const std::vector<Rat>& u) {
  require_nonzero(a);
  if (u.size() != a.dim()) throw DimensionMismatch(a.dim(), u.size());
  bool nonzero = false;
  for (const auto& x : u) {
    if (x.sign() < 0) throw InputError("weight vector must be nonnegative");
    nonzero |= !x.is_zero();
  }
  if (!nonzero) throw InputError("weight vector must be nonzero");
  std::optional<Rat> best;
  for (const auto& v : a.gens()) {
    Rat s(0);
    for (std::size_t i = 0; i < v.size(); ++i) s += u[i] * Rat(v[i]);
    if (!best || s < *best) best = s;
  }
  return *best;
}

InvariantReport lct_monomial(const MonomialIdeal& a) {
  require_proper(a);
  Rat t = newton::diagonal_threshold(newton::build(a));
  Rat value = t.inverse();
  if (value > Rat(a.dim())) throw InvariantViolation("lct " + value.str() + " exceeds the dimension");
  return InvariantReport{InvariantKind::lct, value, Method::monomial_lp, a.dim(), echo(a), std::nullopt, {}};
}

InvariantReport lct_monomial_dual(const MonomialIdeal& a, const newton::Caps& caps) {
  require_proper(a);
  auto P = newton::build(a);
  std::optional<Rat> best;
  std::optional<Certificate> cert;
  for (const auto& f : P.facets(caps)) {
    if (f.offset.is_zero()) continue;
    Rat sum(0);
    for (const auto& x : f.normal) sum += x;
    Rat ratio = sum / f.offset;
    if (!best || ratio < *best) {
      best = ratio;
      cert = Certificate{f.normal, f.offset};
    }
  }
  if (!best) throw InvariantViolation("no facet with positive offset");
  Rat primal = lct_monomial(a).value.value();
  if (primal != *best)
    throw InvariantViolation("facet-dual lct " + best->str() + " != LP lct " + primal.str() + " for " + echo(a));
  return InvariantReport{InvariantKind::lct, *best, Method::facet_dual, a.dim(), echo(a), cert, {}};
}

InvariantReport beta(const Poly& f, bool include_f) {
  require_vanishing_at_origin(f);
  MonomialIdeal J = monomial_jacobian(f, include_f);
  const std::size_t n = f.dim();
  InvariantReport r{InvariantKind::beta, Rat(static_cast<long>(n)), Method::monomial_lp, n, echo(f), std::nullopt, {}};
  if (J.is_unit()) return r;  // smooth point: m * J = m
  r.value = lct_monomial(ideal_product(maximal_ideal(n), J)).value;
  if (include_f) r.assumes.push_back("jacobian includes f");
  return r;
}

InvariantReport beta_ordinary(std::size_t n, unsigned d) {
  if (n < 1) throw InputError("dimension must be at least 1");
  if (d < 2) throw InputError("multiplicity of a singular point must be at least 2");
  InvariantReport r{InvariantKind::beta, Rat(static_cast<long>(n), static_cast<long>(d)), Method::closed_form_ordinary,
                    n, "ordinary singularity of multiplicity " + std::to_string(d), std::nullopt, {}};
  r.assumes.push_back("ordinary singular point");
  return r;
}

InvariantReport alpha(const Poly& f) {
  require_vanishing_at_origin(f);
  const std::size_t n = f.dim();
  InvariantReport r{InvariantKind::alpha, ExtRat::infinity(), Method::smooth_point, n, echo(f), std::nullopt, {}};
  if (*order_at_origin(f) <= 1) return r;

  std::optional<Rat> weighted;
  if (auto w = quasi_homogeneous_weights(f)) {
    auto mono = monomialize(jacobian_generators(f));
    bool isolated = (mono.ok() && is_zero_dimensional(*mono.ideal)) || jacobian_is_m_primary(f, *w);
    if (isolated) weighted = w->sum();
  }
  std::optional<Rat> newton_value;
  MonomialIdeal support = support_ideal(f);
  if (is_zero_dimensional(support)) newton_value = newton::diagonal_threshold(newton::build(support)).inverse();

  if (weighted && newton_value && *weighted != *newton_value)
    throw InvariantViolation("weighted-homogeneous value " + weighted->str() + " != Newton value " +
                             newton_value->str() + " for " + echo(f));
  if (weighted) {
    r.value = *weighted;
    r.method = Method::weighted_homogeneous;
    return r;
  }
  if (newton_value) {
    r.value = *newton_value;
    r.method = Method::nondegenerate_newton;
    r.assumes = {"newton-nondegenerate", "isolated singularity"};
    return r;
  }
  throw UnsupportedClass("unsupported input class: " + echo(f) +
                         " is neither a weighted homogeneous isolated singularity nor has a zero-dimensional "
                         "support ideal");
}

InvariantReport milnor(const Poly& f) {
  require_vanishing_at_origin(f);
  const std::size_t n = f.dim();
  MonomialIdeal J = monomial_jacobian(f, false);
  InvariantReport r{InvariantKind::milnor, Rat(0), Method::smooth_point, n, echo(f), std::nullopt, {}};
  if (J.is_unit()) return r;
  if (!is_zero_dimensional(J))
    throw UnsupportedClass("unsupported input class: J'_f = " + echo(J) + " is not zero-dimensional (non-isolated singularity)");
  if (J.gens().size() != n) {
    r.value = Rat(newton::multiplicity(J));
    r.method = Method::newton_covolume;
    r.assumes.push_back("J'_f generated by a regular sequence (mu = e(J'_f))");
    return r;
  }
  mpz_class mu = 1;
  for (const auto& v : J.gens()) mu *= static_cast<unsigned long>(v.degree());
  r.value = Rat(mu);
  r.method = Method::staircase;
  return r;
}

InvariantReport multiplicity_report(const MonomialIdeal& a, const newton::Caps& caps) {
  auto e = newton::multiplicity(a, caps);
  return InvariantReport{InvariantKind::multiplicity, Rat(e), Method::newton_covolume, a.dim(), echo(a), std::nullopt, {}};
}

}  // namespace singulact
