#include "singulact/simplex.hpp"

#include <optional>

#include "singulact/errors.hpp"

namespace singulact::lp {

std::string to_string(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "?";
}

namespace {

// Dense tableau: `rows` hold [structural | artificial | rhs]; `cost` holds the
// reduced costs of the current phase over the same columns.
class Tableau {
 public:
  Tableau(const LinearProgram& lp) : n_(lp.num_vars()), m_(lp.num_rows()), sign_(m_, 1) {
    rows_.assign(m_, std::vector<Rat>(n_ + m_ + 1, Rat(0)));
    basis_.resize(m_);
    for (std::size_t r = 0; r < m_; ++r) {
      sign_[r] = lp.b[r].sign() < 0 ? -1 : 1;
      Rat s(sign_[r]);
      for (std::size_t j = 0; j < n_; ++j) rows_[r][j] = s * lp.A[r][j];
      rows_[r][n_ + r] = Rat(1);
      rows_[r][rhs()] = s * lp.b[r];
      basis_[r] = n_ + r;
    }
  }

  std::size_t rhs() const { return n_ + m_; }
  bool is_artificial(std::size_t j) const { return j >= n_; }

  void set_costs(const std::vector<Rat>& c) {
    costs_ = c;
    reduced_.assign(n_ + m_, Rat(0));
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      Rat d = c[j];
      for (std::size_t r = 0; r < m_; ++r)
        if (!rows_[r][j].is_zero() && !c[basis_[r]].is_zero()) d -= c[basis_[r]] * rows_[r][j];
      reduced_[j] = d;
    }
  }

  // Runs Bland pivots until optimal (true) or unbounded (false).
  bool optimize(bool structural_only) {
    for (;;) {
      std::optional<std::size_t> enter;
      const std::size_t limit = structural_only ? n_ : n_ + m_;
      for (std::size_t j = 0; j < limit; ++j)
        if (reduced_[j].sign() < 0) {
          enter = j;
          break;
        }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rat best;
      for (std::size_t r = 0; r < m_; ++r) {
        const Rat& a = rows_[r][*enter];
        if (a.sign() <= 0) continue;
        Rat ratio = rows_[r][rhs()] / a;
        if (!leave || ratio < best || (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      if (!leave) return false;
      pivot(*leave, *enter);
    }
  }

  void pivot(std::size_t r, std::size_t j) {
    ++pivots_;
    Rat inv = rows_[r][j].inverse();
    for (auto& x : rows_[r])
      if (!x.is_zero()) x *= inv;
    for (std::size_t k = 0; k < m_; ++k) {
      if (k == r || rows_[k][j].is_zero()) continue;
      Rat f = rows_[k][j];
      for (std::size_t c = 0; c <= rhs(); ++c)
        if (!rows_[r][c].is_zero()) rows_[k][c] -= f * rows_[r][c];
    }
    if (!reduced_[j].is_zero()) {
      Rat f = reduced_[j];
      for (std::size_t c = 0; c < n_ + m_; ++c)
        if (!rows_[r][c].is_zero()) reduced_[c] -= f * rows_[r][c];
    }
    basis_[r] = j;
  }

  // After phase 1: replace zero-level artificials by structural columns where
  // possible. Rows where that fails have no structural entries (redundant rows).
  void drive_out_artificials() {
    for (std::size_t r = 0; r < m_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) {
          pivot(r, j);
          break;
        }
    }
  }

  Rat phase1_value() const {
    Rat v(0);
    for (std::size_t r = 0; r < m_; ++r)
      if (is_artificial(basis_[r])) v += rows_[r][rhs()];
    return v;
  }

  std::vector<Rat> primal() const {
    std::vector<Rat> z(n_, Rat(0));
    for (std::size_t r = 0; r < m_; ++r)
      if (!is_artificial(basis_[r])) z[basis_[r]] = rows_[r][rhs()];
    return z;
  }

  // y_k = sign_k * sum_r c_B(r) * B^{-1}[r][k]; the artificial columns hold B^{-1}.
  std::vector<Rat> dual() const {
    std::vector<Rat> y(m_, Rat(0));
    for (std::size_t k = 0; k < m_; ++k) {
      Rat s(0);
      for (std::size_t r = 0; r < m_; ++r) {
        const Rat& cb = costs_[basis_[r]];
        if (!cb.is_zero()) s += cb * rows_[r][n_ + k];
      }
      y[k] = sign_[k] < 0 ? -s : s;
    }
    return y;
  }

  std::size_t pivots() const { return pivots_; }

 private:
  std::size_t n_, m_;
  std::vector<int> sign_;
  std::vector<std::vector<Rat>> rows_;
  std::vector<std::size_t> basis_;
  std::vector<Rat> costs_;
  std::vector<Rat> reduced_;
  std::size_t pivots_ = 0;
};

void validate(const LinearProgram& lp) {
  if (lp.b.size() != lp.A.size()) throw DimensionMismatch(lp.A.size(), lp.b.size());
  for (const auto& row : lp.A)
    if (row.size() != lp.num_vars()) throw DimensionMismatch(lp.num_vars(), row.size());
}

}  // namespace

LpResult solve(const LinearProgram& lp) {
  validate(lp);
  const std::size_t n = lp.num_vars(), m = lp.num_rows();
  LpResult res;
  Tableau t(lp);

  std::vector<Rat> phase1(n + m, Rat(0));
  for (std::size_t k = 0; k < m; ++k) phase1[n + k] = Rat(1);
  t.set_costs(phase1);
  t.optimize(false);  // bounded below by 0
  if (!t.phase1_value().is_zero()) {
    res.status = Status::infeasible;
    res.pivots = t.pivots();
    return res;
  }
  t.drive_out_artificials();

  std::vector<Rat> phase2(n + m, Rat(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = lp.objective[j];
  t.set_costs(phase2);
  if (!t.optimize(true)) {
    res.status = Status::unbounded;
    res.pivots = t.pivots();
    return res;
  }
  res.status = Status::optimal;
  res.primal = t.primal();
  res.value = Rat(0);
  for (std::size_t j = 0; j < n; ++j) res.value += lp.objective[j] * res.primal[j];
  res.dual = t.dual();
  res.pivots = t.pivots();
  return res;
}

}  // namespace singulact::lp
