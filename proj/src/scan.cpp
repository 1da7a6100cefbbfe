#include "singulact/scan.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "singulact/errors.hpp"

namespace singulact::scan {

Verdict Cell::verdict() const {
  Verdict v = Verdict::holds;
  for (const auto& c : outcomes) {
    if (c.verdict == Verdict::fails) return Verdict::fails;
    if (c.verdict == Verdict::indeterminate) v = Verdict::indeterminate;
  }
  return v;
}

bool Cell::equality() const {
  for (const auto& c : outcomes)
    if (c.equality) return true;
  return false;
}

std::size_t Report::count(Verdict v) const {
  std::size_t k = 0;
  for (const auto& c : cells) k += c.verdict() == v;
  return k;
}

std::size_t Report::equalities() const {
  std::size_t k = 0;
  for (const auto& c : cells) k += c.equality();
  return k;
}

std::optional<std::pair<Rat, std::size_t>> Report::min_gap() const {
  std::optional<std::pair<Rat, std::size_t>> best;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const auto& c = cells[i];
    if (!c.alpha || !c.beta || !c.alpha->is_finite() || !c.beta->is_finite()) continue;
    Rat gap = c.beta->value() - c.alpha->value();
    if (!best || gap < best->first) best = std::make_pair(gap, i);
  }
  return best;
}

namespace {

std::size_t checked_pow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (r > kHardMaxCells * 1000 / std::max<std::size_t>(base, 1)) return kHardMaxCells * 1000;
    r *= base;
  }
  return r;
}

void enforce_limits(Report& rep, std::size_t cells, const Limits& limits) {
  if (rep.n == 0) throw InputError("scan dimension must be positive");
  if (limits.max_cells) {
    if (*limits.max_cells > kHardMaxCells)
      throw CapsExceeded("--max-cells " + std::to_string(*limits.max_cells) + " exceeds the hard limit " +
                         std::to_string(kHardMaxCells));
    if (cells > *limits.max_cells)
      throw CapsExceeded("scan has " + std::to_string(cells) + " cells, above --max-cells " +
                         std::to_string(*limits.max_cells));
    if (rep.n > kDefaultMaxDim || rep.max_exp > kDefaultMaxExp || cells > kDefaultMaxCells)
      rep.warnings.push_back("scan caps overridden by --max-cells: " + std::to_string(cells) + " cells");
    return;
  }
  if (rep.n > kDefaultMaxDim)
    throw CapsExceeded("scan dimension " + std::to_string(rep.n) + " exceeds " + std::to_string(kDefaultMaxDim));
  if (rep.max_exp > kDefaultMaxExp)
    throw CapsExceeded("max exponent " + std::to_string(rep.max_exp) + " exceeds " + std::to_string(kDefaultMaxExp));
  if (cells > kDefaultMaxCells)
    throw CapsExceeded("scan has " + std::to_string(cells) + " cells, above " + std::to_string(kDefaultMaxCells));
}

// Odometer over {lo..hi}^n in lexicographic order.
std::vector<std::vector<unsigned>> grid(std::size_t n, unsigned lo, unsigned hi) {
  std::vector<std::vector<unsigned>> out;
  if (lo > hi) return out;
  std::vector<unsigned> a(n, lo);
  while (true) {
    out.push_back(a);
    std::size_t i = n;
    while (i > 0 && a[i - 1] == hi) a[--i] = lo;
    if (i == 0) break;
    ++a[i - 1];
  }
  return out;
}

template <class F>
void run_cells(std::vector<Cell>& cells, unsigned threads, F&& eval) {
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < cells.size();) {
      try {
        eval(cells[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned k = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (k == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < k; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

Poly diagonal(const std::vector<unsigned>& a) {
  Poly f(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<ExpVec::value_type> e(a.size(), 0);
    e[i] = a[i];
    f = f + Poly::monomial(ExpVec(e));
  }
  return f;
}

MonomialIdeal diagonal_ideal(const std::vector<unsigned>& a) {
  std::vector<ExpVec> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<ExpVec::value_type> e(a.size(), 0);
    e[i] = a[i];
    gens.emplace_back(e);
  }
  return MonomialIdeal(a.size(), gens);
}

}  // namespace

Report scan_diagonal(std::size_t n, unsigned max_exp, const std::string& check, const Limits& limits) {
  if (check != "question1" && check != "milnor-bound" && check != "restriction")
    throw InputError("scan diagonal supports question1, milnor-bound, restriction; got '" + check + "'");
  if (check == "restriction" && n < 2) throw InputError("restriction needs at least 2 variables");
  Report rep{"diagonal", check, n, max_exp, {}, {}};
  const std::size_t cells = max_exp < 2 ? 0 : checked_pow(max_exp - 1, n);
  enforce_limits(rep, cells, limits);
  for (auto& a : grid(n, 2, max_exp)) rep.cells.push_back(Cell{a, {}, {}, {}, {}});

  run_cells(rep.cells, limits.threads, [&](Cell& c) {
    Poly f = diagonal(c.a);
    c.alpha = alpha(f).value;
    c.beta = beta(f).value;
    if (check == "question1") {
      c.outcomes.push_back(check_question1(f));
    } else if (check == "milnor-bound") {
      c.outcomes.push_back(check_milnor_bound(f));
    } else {
      for (std::size_t i = 0; i < n; ++i) c.outcomes.push_back(check_restriction(f, i));
    }
  });
  return rep;
}

Report scan_monomial_pairs(std::size_t n, unsigned max_exp, const std::string& check, const Limits& limits) {
  if (check != "minkowski" && check != "dfem")
    throw InputError("scan monomial-pairs supports minkowski, dfem; got '" + check + "'");
  Report rep{"monomial-pairs", check, n, max_exp, {}, {}};
  const std::size_t side = max_exp < 1 ? 0 : checked_pow(max_exp, n);
  const std::size_t cells = side >= kHardMaxCells * 1000 ? side : side * (side + 1) / 2;
  enforce_limits(rep, cells, limits);
  const auto g = grid(n, 1, max_exp);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i; j < g.size(); ++j) rep.cells.push_back(Cell{g[i], g[j], {}, {}, {}});

  const auto caps = newton::Caps::from_env();
  run_cells(rep.cells, limits.threads, [&](Cell& c) {
    MonomialIdeal a = diagonal_ideal(c.a), b = diagonal_ideal(c.b);
    if (check == "minkowski")
      c.outcomes.push_back(check_minkowski(a, b, caps));
    else
      c.outcomes.push_back(check_dfem(ideal_product(a, b), caps));
  });
  return rep;
}

}  // namespace singulact::scan
