#include "singulact/newton.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <string>

#include "singulact/errors.hpp"
#include "singulact/linalg.hpp"
#include "singulact/simplex.hpp"

namespace singulact::newton {

namespace {

// Calls fn(indices) for every size-k subset of {0..n-1}, in lexicographic order.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Scales a nonnegative nonzero vector to coprime integers.
std::vector<Rat> primitive(const std::vector<Rat>& u) {
  mpz_class l = 1, g = 0;
  for (const auto& x : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& x : u) {
    mpz_class v = x.num() * (l / x.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(v);
  }
  std::vector<Rat> out;
  for (auto& v : ints) out.emplace_back(mpz_class(v / g));
  return out;
}

Rat dot(const std::vector<Rat>& u, const ExpVec& v) {
  Rat s(0);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] && !u[i].is_zero()) s += u[i] * Rat(v[i]);
  return s;
}

std::vector<Facet> enumerate_facets(std::size_t n, const std::vector<ExpVec>& pts) {
  std::set<Facet> found;
  for (std::size_t s = 1; s <= std::min(n, pts.size()); ++s) {
    for_each_subset(pts.size(), s, [&](const std::vector<std::size_t>& S) {
      for_each_subset(n, n - s, [&](const std::vector<std::size_t>& R) {
        linalg::Matrix rows;
        const ExpVec& base = pts[S[0]];
        for (std::size_t j = 1; j < S.size(); ++j) {
          linalg::Vector row(n);
          for (std::size_t i = 0; i < n; ++i) row[i] = Rat(pts[S[j]][i]) - Rat(base[i]);
          rows.push_back(std::move(row));
        }
        for (auto i : R) {
          linalg::Vector row(n, Rat(0));
          row[i] = Rat(1);
          rows.push_back(std::move(row));
        }
        auto ns = linalg::nullspace(std::move(rows), n);
        if (ns.size() != 1) return;
        auto u = ns.front();
        bool pos = false, neg = false;
        for (const auto& x : u) {
          pos |= x.sign() > 0;
          neg |= x.sign() < 0;
        }
        if (pos && neg) return;
        if (neg)
          for (auto& x : u) x = -x;
        u = primitive(u);
        Rat c = dot(u, pts.front());
        for (const auto& v : pts) c = min(c, dot(u, v));
        for (auto j : S)
          if (dot(u, pts[j]) != c) return;
        found.insert(Facet{std::move(u), std::move(c)});
      });
    });
  }
  return {found.begin(), found.end()};
}

std::size_t affine_dim(const std::vector<Point>& verts, const std::vector<std::size_t>& ids) {
  if (ids.size() <= 1) return 0;
  const std::size_t n = verts[ids[0]].size();
  linalg::Matrix rows;
  for (std::size_t j = 1; j < ids.size(); ++j) {
    linalg::Vector row(n);
    for (std::size_t i = 0; i < n; ++i) row[i] = verts[ids[j]][i] - verts[ids[0]][i];
    rows.push_back(std::move(row));
  }
  return linalg::rank(std::move(rows), n);
}

bool satisfies(const std::vector<Facet>& hs, const Point& x) {
  for (const auto& h : hs)
    if (linalg::dot(h.normal, x) < h.offset) return false;
  return true;
}

}  // namespace

Caps Caps::from_env() {
  Caps caps;
  if (const char* env = std::getenv("SINGULACT_CAPS_N")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
      throw InputError(std::string("SINGULACT_CAPS_N must be a positive integer, got '") + env + "'");
    caps.max_dim = static_cast<std::size_t>(v);
  }
  return caps;
}

struct NewtonPolyhedron::Cache {
  std::once_flag facets_once;
  std::once_flag vertices_once;
  std::vector<Facet> facets;
  std::vector<Point> vertices;
};

NewtonPolyhedron::NewtonPolyhedron(const MonomialIdeal& a)
    : n_(a.dim()), points_(a.gens()), cache_(std::make_shared<Cache>()) {
  require_nonzero(a);
}

void NewtonPolyhedron::check_caps(const Caps& caps) const {
  if (n_ > caps.max_dim)
    throw CapsExceeded("facet enumeration limited to dimension " + std::to_string(caps.max_dim) + ", got " +
                       std::to_string(n_));
  if (points_.size() > caps.max_points)
    throw CapsExceeded("facet enumeration limited to " + std::to_string(caps.max_points) + " generators, got " +
                       std::to_string(points_.size()));
}

const std::vector<Facet>& NewtonPolyhedron::facets(const Caps& caps) const {
  check_caps(caps);
  std::call_once(cache_->facets_once, [&] { cache_->facets = enumerate_facets(n_, points_); });
  return cache_->facets;
}

const std::vector<Point>& NewtonPolyhedron::vertices(const Caps& caps) const {
  const auto& fs = facets(caps);
  std::call_once(cache_->vertices_once, [&] {
    // Vertices of P are generators; a generator is one iff its tight facet
    // normals have full rank.
    std::vector<Point> out;
    for (const auto& v : points_) {
      linalg::Matrix tight;
      for (const auto& f : fs)
        if (dot(f.normal, v) == f.offset) tight.push_back(f.normal);
      if (linalg::rank(std::move(tight), n_) == n_) out.push_back(v.to_rational());
    }
    std::sort(out.begin(), out.end());
    cache_->vertices = std::move(out);
  });
  return cache_->vertices;
}

NewtonPolyhedron build(const MonomialIdeal& a) { return NewtonPolyhedron(a); }

bool contains(const NewtonPolyhedron& P, const Point& q) {
  const std::size_t n = P.dim(), k = P.points().size();
  if (q.size() != n) throw DimensionMismatch(n, q.size());
  if (std::any_of(q.begin(), q.end(), [](const Rat& x) { return x.sign() < 0; })) return false;
  lp::LinearProgram prog;
  prog.objective.assign(k + n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> row(k + n, Rat(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = Rat(P.points()[j][i]);
    row[k + i] = Rat(1);
    prog.A.push_back(std::move(row));
    prog.b.push_back(q[i]);
  }
  std::vector<Rat> convex(k + n, Rat(0));
  for (std::size_t j = 0; j < k; ++j) convex[j] = Rat(1);
  prog.A.push_back(std::move(convex));
  prog.b.push_back(Rat(1));
  return lp::solve(prog).status == lp::Status::optimal;
}

Rat diagonal_threshold(const NewtonPolyhedron& P) {
  const std::size_t n = P.dim(), k = P.points().size();
  const std::size_t t_col = k + n;
  lp::LinearProgram prog;
  prog.objective.assign(k + n + 1, Rat(0));
  prog.objective[t_col] = Rat(1);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> row(k + n + 1, Rat(0));
    for (std::size_t j = 0; j < k; ++j) row[j] = Rat(P.points()[j][i]);
    row[k + i] = Rat(1);
    row[t_col] = Rat(-1);
    prog.A.push_back(std::move(row));
    prog.b.push_back(Rat(0));
  }
  std::vector<Rat> convex(k + n + 1, Rat(0));
  for (std::size_t j = 0; j < k; ++j) convex[j] = Rat(1);
  prog.A.push_back(std::move(convex));
  prog.b.push_back(Rat(1));
  auto res = lp::solve(prog);
  if (res.status != lp::Status::optimal) throw InvariantViolation("diagonal threshold LP is " + lp::to_string(res.status));
  return res.value;
}

bool integral_closure_member(const MonomialIdeal& a, const ExpVec& v) {
  if (v.size() != a.dim()) throw DimensionMismatch(a.dim(), v.size());
  return contains(build(a), v.to_rational());
}

bool contains_by_facets(const NewtonPolyhedron& P, const Point& q, const Caps& caps) {
  if (q.size() != P.dim()) throw DimensionMismatch(P.dim(), q.size());
  return satisfies(P.facets(caps), q);
}

Rat polytope_volume(const std::vector<Facet>& hs, std::size_t n) {
  std::set<Point> found;
  for_each_subset(hs.size(), n, [&](const std::vector<std::size_t>& idx) {
    linalg::Matrix m;
    linalg::Vector b;
    for (auto i : idx) {
      m.push_back(hs[i].normal);
      b.push_back(hs[i].offset);
    }
    auto x = linalg::solve_unique(m, b);
    if (x && satisfies(hs, *x)) found.insert(std::move(*x));
  });
  const std::vector<Point> verts(found.begin(), found.end());
  if (verts.size() <= n) return Rat(0);

  std::vector<std::vector<bool>> tight(verts.size(), std::vector<bool>(hs.size()));
  for (std::size_t v = 0; v < verts.size(); ++v)
    for (std::size_t h = 0; h < hs.size(); ++h) tight[v][h] = linalg::dot(hs[h].normal, verts[v]) == hs[h].offset;

  std::vector<std::size_t> all(verts.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (affine_dim(verts, all) != n) return Rat(0);

  Rat total(0);
  std::vector<std::size_t> apexes;
  auto fan = [&](auto& self, const std::vector<std::size_t>& face, std::size_t k) -> void {
    if (k == 0) {
      linalg::Matrix m;
      const Point& o = verts[face[0]];
      for (auto a : apexes) {
        linalg::Vector row(n);
        for (std::size_t i = 0; i < n; ++i) row[i] = verts[a][i] - o[i];
        m.push_back(std::move(row));
      }
      total += linalg::determinant(std::move(m)).abs();
      return;
    }
    const std::size_t apex = face[0];  // ids ascend with lexicographic order
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t h = 0; h < hs.size(); ++h) {
      if (tight[apex][h]) continue;
      std::vector<std::size_t> sub;
      for (auto v : face)
        if (tight[v][h]) sub.push_back(v);
      if (sub.empty() || !seen.insert(sub).second) continue;
      if (affine_dim(verts, sub) + 1 != k) continue;
      apexes.push_back(apex);
      self(self, sub, k - 1);
      apexes.pop_back();
    }
  };
  fan(fan, all, n);

  Rat fact(1);
  for (std::size_t i = 2; i <= n; ++i) fact *= Rat(i);
  return total / fact;
}

Rat covolume(const NewtonPolyhedron& P, const Caps& caps) {
  const std::size_t n = P.dim();
  if (!is_zero_dimensional(MonomialIdeal(n, P.points())))
    throw InputError("covolume needs a zero-dimensional ideal");
  ExpVec::value_type M = 0;
  for (const auto& v : P.points())
    for (auto x : v) M = std::max(M, x);
  if (M == 0) return Rat(0);  // unit ideal
  std::vector<Facet> hs = P.facets(caps);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> normal(n, Rat(0));
    normal[i] = Rat(-1);
    hs.push_back(Facet{std::move(normal), Rat(-static_cast<long>(M))});
  }
  Rat box = Rat(M).pow(static_cast<unsigned>(n));
  Rat cov = box - polytope_volume(hs, n);
  if (cov.sign() < 0) throw InvariantViolation("negative covolume");
  return cov;
}

std::uint64_t multiplicity(const MonomialIdeal& a, const Caps& caps) {
  require_nonzero(a);
  if (!is_zero_dimensional(a)) throw InputError("multiplicity needs a zero-dimensional ideal");
  Rat e = covolume(build(a), caps);
  for (std::size_t i = 2; i <= a.dim(); ++i) e *= Rat(i);
  if (!e.is_integer()) throw InvariantViolation("n! * covolume = " + e.str() + " is not an integer");
  mpz_class z = e.num();
  if (!z.fits_ulong_p()) throw InvariantViolation("multiplicity overflows 64 bits");
  return z.get_ui();
}

}  // namespace singulact::newton
