#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "singulact/monomial_ideal.hpp"
#include "singulact/newton.hpp"
#include "singulact/polynomial.hpp"
#include "singulact/rational.hpp"

namespace singulact {

enum class InvariantKind { lct, beta, alpha, milnor, multiplicity };

enum class Method {
  monomial_lp,           // 1 / diagonal threshold, by LP
  facet_dual,            // min over facet normals of sum(u) / ord_u
  closed_form_ordinary,  // n / d at an ordinary singular point
  weighted_homogeneous,  // sum of weights
  nondegenerate_newton,  // 1 / diagonal threshold of the support polyhedron
  registry,              // stated value, never computed
  smooth_point,          // alpha = inf, or mu = 0 at a smooth point
  staircase,             // mu = prod b_i for J' = (x_i^{b_i})
  newton_covolume,       // e = n! * covolume
};

std::string to_string(InvariantKind k);
std::string to_string(Method m);

/// The facet normal u attaining lct = sum(u) / ord_u(a).
struct Certificate {
  std::vector<Rat> u;
  Rat ord;
};

struct InvariantReport {
  InvariantKind kind;
  ExtRat value;
  Method method;
  std::size_t n = 0;
  std::string input;
  std::optional<Certificate> certificate;
  std::vector<std::string> assumes;
};

/// min over generators of <u, v>; u must be nonnegative and nonzero.
Rat ord_u(const MonomialIdeal& a, const std::vector<Rat>& u);

/// lct_0(a) = 1 / min{t : (t..t) in P(a)}. Rejects the zero and unit ideals.
InvariantReport lct_monomial(const MonomialIdeal& a);

/// Facet form of the same number: min over facet normals u with ord_u(a) > 0 of
/// sum(u) / ord_u(a). Throws InvariantViolation if it disagrees with lct_monomial.
InvariantReport lct_monomial_dual(const MonomialIdeal& a, const newton::Caps& caps = newton::Caps{});

/// beta_0(f) = lct_0(m * J'_f) (or m * J_f with include_f) when the Jacobian
/// generators monomialize. Throws UnsupportedClass otherwise.
InvariantReport beta(const Poly& f, bool include_f = false);

/// n / d at an ordinary singular point of multiplicity d.
InvariantReport beta_ordinary(std::size_t n, unsigned d);

/// Minimal exponent at 0: inf at smooth points, sum of weights for weighted
/// homogeneous isolated singularities, 1 / diagonal threshold of the support
/// (assuming Newton nondegeneracy) for f in m^2 with zero-dimensional support ideal.
InvariantReport alpha(const Poly& f);

/// Milnor number when J'_f monomializes to a zero-dimensional ideal: prod b_i
/// for J'_f = (x_i^{b_i}), otherwise e(J'_f) under a regular-sequence assumption.
InvariantReport milnor(const Poly& f);

InvariantReport multiplicity_report(const MonomialIdeal& a, const newton::Caps& caps = newton::Caps{});

// ---- checks ---------------------------------------------------------------

enum class Verdict { holds, fails, indeterminate };
std::string to_string(Verdict v);

/// Closed interval [lo, hi]; a point when lo == hi.
struct Bound {
  ExtRat lo, hi;
  static Bound point(ExtRat v) { return Bound{v, v}; }
  bool exact() const { return lo == hi; }
};

struct CheckOutcome {
  std::string name;
  Verdict verdict = Verdict::indeterminate;
  std::string relation;  // "<=" or ">="; lhs relation rhs is the claim
  Bound lhs, rhs;
  bool equality = false;
  std::string witness;
  std::string note;  // human-readable radical form, when lhs/rhs are brackets
};

/// alpha(f) <= beta(f) at a singular point.
CheckOutcome check_question1(const Poly& f);
/// alpha(f) <= lct(a) given f in m * a and a in m. Hypothesis failures throw InputError.
CheckOutcome check_thm_alpha_le_lct(const Poly& f, const MonomialIdeal& a);
/// beta(f) >= beta(f restricted to {x_i = 0}).
CheckOutcome check_restriction(const Poly& f, std::size_t i);
/// |beta(f) - beta(g)| <= n / d with d = ord(f - g).
CheckOutcome check_madic(const Poly& f, const Poly& g);
/// (n / beta - 1)^n <= mu, the rational form of beta >= n / (1 + mu^{1/n}).
CheckOutcome check_milnor_bound(const Poly& f);
/// e(a) >= (n / lct(a))^n.
CheckOutcome check_dfem(const MonomialIdeal& a, const newton::Caps& caps = newton::Caps{});
/// e(ab)^{1/n} <= e(a)^{1/n} + e(b)^{1/n}.
CheckOutcome check_minkowski(const MonomialIdeal& a, const MonomialIdeal& b, const newton::Caps& caps = newton::Caps{});

/// Decides X^{1/n} <= Y^{1/n} + Z^{1/n} for nonnegative integers. Equality is
/// decided exactly from n-th-power-free parts; strict comparisons by dyadic
/// brackets refined until the width drops below 2^-precision_bits.
CheckOutcome compare_root_sum(std::uint64_t X, std::uint64_t Y, std::uint64_t Z, unsigned n,
                              unsigned precision_bits = 80);

// ---- registry -------------------------------------------------------------

struct KnownValue {
  std::string description;
  InvariantKind kind;
  Rat value;
  std::string source;
};

/// Values stated for inputs outside the computable classes; never computed.
const std::vector<KnownValue>& known_values();
InvariantReport registry_report(const KnownValue& kv);
/// Question 1 cross-check (alpha <= beta) among registry entries sharing a description.
std::vector<CheckOutcome> registry_question1();

}  // namespace singulact
