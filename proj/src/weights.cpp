#include "singulact/weights.hpp"

#include <algorithm>
#include <map>

#include "singulact/errors.hpp"
#include "singulact/linalg.hpp"
#include "singulact/simplex.hpp"

namespace singulact {

Rat Weights::sum() const {
  Rat s(0);
  for (const auto& x : w) s += x;
  return s;
}

Rat Weights::degree(const ExpVec& v) const {
  if (v.size() != w.size()) throw DimensionMismatch(w.size(), v.size());
  Rat d(0);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (v[i]) d += w[i] * Rat(v[i]);
  return d;
}

std::optional<Weights> quasi_homogeneous_weights(const Poly& f) {
  require_vanishing_at_origin(f);
  const std::size_t n = f.dim();
  // Columns: w (n) | s | p (n, w_i - s - p_i = 0) | q (n, w_i + q_i = 1).
  const std::size_t cols = 3 * n + 1;
  const std::size_t s_col = n;
  lp::LinearProgram prog;
  prog.objective.assign(cols, Rat(0));
  prog.objective[s_col] = Rat(-1);
  for (const auto& v : f.support()) {
    std::vector<Rat> row(cols, Rat(0));
    for (std::size_t i = 0; i < n; ++i) row[i] = Rat(v[i]);
    prog.A.push_back(std::move(row));
    prog.b.push_back(Rat(1));
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> row(cols, Rat(0));
    row[i] = Rat(1);
    row[s_col] = Rat(-1);
    row[n + 1 + i] = Rat(-1);
    prog.A.push_back(std::move(row));
    prog.b.push_back(Rat(0));

    std::vector<Rat> cap(cols, Rat(0));
    cap[i] = Rat(1);
    cap[2 * n + 1 + i] = Rat(1);
    prog.A.push_back(std::move(cap));
    prog.b.push_back(Rat(1));
  }
  auto res = lp::solve(prog);
  if (res.status != lp::Status::optimal || res.primal[s_col].sign() <= 0) return std::nullopt;
  Weights w{std::vector<Rat>(res.primal.begin(), res.primal.begin() + static_cast<std::ptrdiff_t>(n))};
  for (const auto& v : f.support())
    if (w.degree(v) != Rat(1)) throw InvariantViolation("weight LP returned a non-solution");
  return w;
}

bool euler_check(const Poly& f, const Weights& w) {
  if (w.size() != f.dim()) throw DimensionMismatch(f.dim(), w.size());
  for (const auto& x : w.w)
    if (x.sign() <= 0) throw InputError("weights must be positive");
  Poly acc(f.dim());
  for (std::size_t i = 0; i < f.dim(); ++i)
    acc += Poly::variable(f.dim(), i) * partial_derivative(f, i) * w.w[i];
  return acc == f;
}

namespace {

// All monomials of weighted degree <= bound.
std::vector<ExpVec> monomials_up_to(const Weights& w, const Rat& bound) {
  const std::size_t n = w.size();
  std::vector<ExpVec> out;
  if (bound.sign() < 0) return out;
  ExpVec cur(n);
  auto rec = [&](auto& self, std::size_t i, const Rat& left) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    Rat rem = left;
    for (ExpVec::value_type k = 0; rem.sign() >= 0; ++k, rem -= w.w[i]) {
      cur[i] = k;
      self(self, i + 1, rem);
    }
    cur[i] = 0;
  };
  rec(rec, 0, bound);
  return out;
}

}  // namespace

bool jacobian_is_m_primary(const Poly& f, const Weights& w) {
  const std::size_t n = f.dim();
  if (w.size() != n) throw DimensionMismatch(n, w.size());
  for (const auto& x : w.w)
    if (x.sign() <= 0) throw InputError("weights must be positive");
  for (const auto& v : f.support())
    if (w.degree(v) != Rat(1)) throw InputError("polynomial is not weighted homogeneous for these weights");

  Rat socle(0), wmax(0);
  for (const auto& x : w.w) {
    socle += Rat(1) - Rat(2) * x;
    wmax = max(wmax, x);
  }
  const Rat hi = socle + wmax;

  std::map<Rat, std::vector<ExpVec>> window;
  for (auto& m : monomials_up_to(w, hi)) {
    Rat d = w.degree(m);
    if (d > socle) window[d].push_back(std::move(m));
  }
  std::vector<Poly> partials;
  std::vector<Rat> partial_degree;
  for (std::size_t i = 0; i < n; ++i) {
    Poly p = partial_derivative(f, i);
    if (p.is_zero()) continue;
    partials.push_back(std::move(p));
    partial_degree.push_back(Rat(1) - w.w[i]);
  }
  const auto all_low = monomials_up_to(w, hi);

  for (const auto& [deg, mons] : window) {
    std::map<ExpVec, std::size_t> column;
    for (std::size_t c = 0; c < mons.size(); ++c) column.emplace(mons[c], c);
    linalg::Matrix rows;
    for (std::size_t k = 0; k < partials.size(); ++k) {
      Rat need = deg - partial_degree[k];
      if (need.sign() < 0) continue;
      for (const auto& m : all_low) {
        if (w.degree(m) != need) continue;
        Poly prod = Poly::monomial(m) * partials[k];
        linalg::Vector row(mons.size(), Rat(0));
        for (const auto& [v, c] : prod.terms()) {
          auto it = column.find(v);
          if (it == column.end()) throw InvariantViolation("product left its weighted degree");
          row[it->second] = c;
        }
        rows.push_back(std::move(row));
      }
    }
    if (linalg::rank(std::move(rows), mons.size()) != mons.size()) return false;
  }
  return true;
}

}  // namespace singulact
