#include "singulact/parse.hpp"

#include <algorithm>
#include <set>

#include "singulact/errors.hpp"

namespace singulact::parse {

namespace {

bool is_letter(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

bool is_identifier(std::string_view s) {
  if (s.empty() || !is_letter(s.front())) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return is_letter(c) || is_digit(c); });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

constexpr unsigned long kMaxVarExponent = 1'000'000;
constexpr unsigned long kMaxGroupExponent = 256;

class Parser {
 public:
  Parser(std::string_view text, const VarTable& vars) : text_(text), vars_(vars) {}

  Poly parse_all() {
    skip_ws();
    if (at_end()) throw ParseError("empty input", pos_);
    Poly p = parse_poly();
    skip_ws();
    if (!at_end()) {
      if (peek() == ')') throw ParseError("unbalanced ')'", pos_);
      throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
    }
    return p;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }
  Poly zero() const { return Poly(vars_.size()); }
  Poly one() const { return Poly::constant(vars_.size(), Rat(1)); }

  Poly parse_poly() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    Poly acc = parse_term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      if (peek() != '+' && peek() != '-') break;
      bool minus = peek() == '-';
      ++pos_;
      Poly t = parse_term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  mpz_class parse_digits() {
    std::size_t start = pos_;
    while (!at_end() && is_digit(text_[pos_])) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)), 10);
  }

  Poly parse_term() {
    skip_ws();
    const std::size_t start = pos_;
    Poly acc = one();
    bool have_coef = false, need_factor = false;
    if (is_digit(peek())) {
      mpz_class num = parse_digits();
      mpz_class den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        if (!is_digit(peek())) throw ParseError("expected denominator", pos_);
        std::size_t dpos = pos_;
        den = parse_digits();
        if (den == 0) throw ParseError("zero denominator", dpos);
      }
      acc *= Rat(num, den);
      have_coef = true;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        need_factor = true;
      }
    }
    std::size_t factors = 0;
    for (;;) {
      skip_ws();
      char c = peek();
      if (!is_letter(c) && c != '(') break;
      acc *= parse_factor(need_factor);
      ++factors;
    }
    if (need_factor) throw ParseError("expected a factor after '*'", pos_);
    if (!have_coef && factors == 0) {
      if (at_end()) throw ParseError("expected a term", pos_);
      if (peek() == '^') throw ParseError("'^' without a base", pos_);
      throw ParseError(std::string("expected a term, found '") + peek() + "'", pos_ == start ? pos_ : start);
    }
    return acc;
  }

  // Parses one factor with its optional power and trailing '*'.
  Poly parse_factor(bool& need_factor) {
    need_factor = false;
    Poly base = zero();
    bool group = false;
    if (peek() == '(') {
      const std::size_t open = pos_;
      ++pos_;
      base = parse_poly();
      skip_ws();
      if (peek() != ')') throw ParseError("expected ')' to close '(' opened at offset " + std::to_string(open), pos_);
      ++pos_;
      group = true;
    } else {
      const std::size_t start = pos_;
      while (!at_end() && (is_letter(text_[pos_]) || is_digit(text_[pos_]))) ++pos_;
      std::string_view name = text_.substr(start, pos_ - start);
      auto idx = vars_.index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", start);
      base = Poly::variable(vars_.size(), *idx);
    }
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      const std::size_t epos = pos_;
      if (!is_digit(peek())) throw ParseError("exponent is not a natural number", epos);
      mpz_class e = parse_digits();
      const unsigned long limit = group ? kMaxGroupExponent : kMaxVarExponent;
      if (e > limit) throw ParseError("exponent exceeds " + std::to_string(limit), epos);
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    skip_ws();
    if (peek() == '*') {
      ++pos_;
      need_factor = true;
    }
    return base;
  }

  std::string_view text_;
  const VarTable& vars_;
  std::size_t pos_ = 0;
};

std::string format_term(const ExpVec& v, const Rat& c, const VarTable& vars) {
  std::string mon = format_monomial(v, vars);
  if (v.is_zero()) return c.str();
  if (c == Rat(1)) return mon;
  if (c == Rat(-1)) return "-" + mon;
  return c.str() + "*" + mon;
}

}  // namespace

VarTable::VarTable(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw InputError("variable list is empty");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
}

VarTable VarTable::from_list(std::string_view text) {
  std::vector<std::string> names;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    names.emplace_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (names.size() == 1 && names.front().empty()) names.clear();
  return VarTable(std::move(names));
}

VarTable VarTable::generic(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return VarTable(std::move(names));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

VarTable VarTable::without(std::size_t i) const {
  std::vector<std::string> rest;
  for (std::size_t j = 0; j < names_.size(); ++j)
    if (j != i) rest.push_back(names_[j]);
  return VarTable(std::move(rest));
}

Poly parse_polynomial(std::string_view text, const VarTable& vars) { return Parser(text, vars).parse_all(); }

MonomialIdeal parse_monomial_ideal(std::string_view text, const VarTable& vars, std::vector<std::string>* warnings) {
  if (trim(text).empty()) throw ParseError("empty generator list", 0);
  std::vector<ExpVec> gens;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view item = text.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < item.size() && is_space(item[lead])) ++lead;
    if (trim(item).empty()) throw ParseError("empty generator", start + lead);
    Poly p(vars.size());
    try {
      p = parse_polynomial(item, vars);
    } catch (const ParseError& e) {
      std::string msg = e.what();
      msg = msg.substr(0, msg.rfind(" at offset "));
      throw ParseError(msg, start + e.offset());
    }
    if (p.term_count() != 1)
      throw ParseError("generator '" + std::string(trim(item)) + "' is not a monomial", start + lead);
    const auto& [v, c] = *p.terms().begin();
    if (c != Rat(1) && warnings)
      warnings->push_back("coefficient " + c.str() + " of generator '" + std::string(trim(item)) + "' ignored");
    gens.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return MonomialIdeal(vars.size(), std::move(gens));
}

std::string format_rat(const ExtRat& v) { return v.str(); }

std::string format_monomial(const ExpVec& v, const VarTable& vars) {
  if (v.size() != vars.size()) throw DimensionMismatch(vars.size(), v.size());
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars.name(i);
    if (v[i] > 1) s += "^" + std::to_string(v[i]);
  }
  return s.empty() ? "1" : s;
}

std::string format_polynomial(const Poly& f, const VarTable& vars) {
  if (f.dim() != vars.size()) throw DimensionMismatch(vars.size(), f.dim());
  if (f.is_zero()) return "0";
  std::vector<std::pair<ExpVec, Rat>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first > b.first;
  });
  std::string s;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto& [v, c] = terms[k];
    if (k == 0) {
      s = format_term(v, c, vars);
    } else if (c.sign() < 0) {
      s += " - " + format_term(v, -c, vars);
    } else {
      s += " + " + format_term(v, c, vars);
    }
  }
  return s;
}

std::string format_ideal(const MonomialIdeal& a, const VarTable& vars) {
  std::string s;
  for (auto it = a.gens().rbegin(); it != a.gens().rend(); ++it) {
    const auto& v = *it;
    if (!s.empty()) s += ", ";
    s += format_monomial(v, vars);
  }
  return "(" + s + ")";
}

}  // namespace singulact::parse
