#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "singulact/invariants.hpp"

namespace singulact::scan {

/// Grid limits. Without an explicit max_cells the grid must satisfy n <= 4,
/// max_exp <= 9 and at most 10^4 cells; an explicit max_cells replaces those
/// limits by cells <= max_cells, itself capped at 10^5.
struct Limits {
  std::optional<std::size_t> max_cells;
  unsigned threads = 1;
};

inline constexpr std::size_t kDefaultMaxDim = 4;
inline constexpr unsigned kDefaultMaxExp = 9;
inline constexpr std::size_t kDefaultMaxCells = 10'000;
inline constexpr std::size_t kHardMaxCells = 100'000;

struct Cell {
  std::vector<unsigned> a;
  std::vector<unsigned> b;  // second exponent vector for pair scans
  std::optional<ExtRat> alpha;
  std::optional<ExtRat> beta;
  std::vector<CheckOutcome> outcomes;

  Verdict verdict() const;
  bool equality() const;
};

struct Report {
  std::string family;
  std::string check;
  std::size_t n = 0;
  unsigned max_exp = 0;
  std::vector<Cell> cells;
  std::vector<std::string> warnings;

  std::size_t count(Verdict v) const;
  std::size_t equalities() const;
  /// Smallest beta - alpha over cells that carry both, with the first cell attaining it.
  std::optional<std::pair<Rat, std::size_t>> min_gap() const;
};

/// f = x1^a1 + ... + xn^an for a in {2..max_exp}^n, lexicographic in a.
/// Checks: question1, milnor-bound, restriction (every axis).
Report scan_diagonal(std::size_t n, unsigned max_exp, const std::string& check, const Limits& limits = {});

/// Pairs of diagonal ideals (x_i^{a_i}), (x_i^{b_i}) with a <= b lexicographically,
/// exponents in {1..max_exp}. Checks: minkowski, dfem (applied to the product).
Report scan_monomial_pairs(std::size_t n, unsigned max_exp, const std::string& check, const Limits& limits = {});

}  // namespace singulact::scan
