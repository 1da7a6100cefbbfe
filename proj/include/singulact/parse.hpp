#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "singulact/monomial_ideal.hpp"
#include "singulact/polynomial.hpp"
#include "singulact/rational.hpp"

namespace singulact::parse {

/// Declared variable names. Their order fixes the coordinate order of every ExpVec.
class VarTable {
 public:
  explicit VarTable(std::vector<std::string> names);
  /// "x,y,z" (whitespace around names ignored).
  static VarTable from_list(std::string_view text);
  /// x1, ..., xn.
  static VarTable generic(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// A copy without variable i (for restriction to {x_i = 0}).
  VarTable without(std::size_t i) const;

 private:
  std::vector<std::string> names_;
};

/// Grammar (whitespace-insensitive, juxtaposition multiplies):
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := [coef ['*']] factor*
///   factor := (var | '(' poly ')') ['^' nat] ['*']
///   coef   := int | int '/' posint
///   var    := letter (letter|digit)*
/// Throws ParseError carrying a byte offset.
Poly parse_polynomial(std::string_view text, const VarTable& vars);

/// Comma-separated monomials; coefficients other than 1 are dropped and noted
/// in `warnings` when provided.
MonomialIdeal parse_monomial_ideal(std::string_view text, const VarTable& vars,
                                   std::vector<std::string>* warnings = nullptr);

/// "p/q", "p" or "inf".
std::string format_rat(const ExtRat& v);

/// Canonical printer: terms by descending total degree, then descending lex.
std::string format_polynomial(const Poly& f, const VarTable& vars);
std::string format_monomial(const ExpVec& v, const VarTable& vars);
std::string format_ideal(const MonomialIdeal& a, const VarTable& vars);

}  // namespace singulact::parse
