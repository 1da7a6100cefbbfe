#include <doctest.h>

#include "singulact/errors.hpp"
#include "singulact/linalg.hpp"
#include "singulact/newton.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace singulact;
using newton::Facet;

namespace {

MonomialIdeal ideal(std::size_t n, std::vector<ExpVec> gens) { return MonomialIdeal(n, std::move(gens)); }

std::vector<Rat> pt(std::initializer_list<long> xs) {
  std::vector<Rat> p;
  for (long x : xs) p.emplace_back(x);
  return p;
}

Facet facet(std::initializer_list<long> u, long c) { return Facet{pt(u), Rat(c)}; }

}  // namespace

TEST_CASE("facets of small polyhedra") {
  auto f1 = newton::build(ideal(2, {{2, 0}, {1, 1}, {0, 3}})).facets();
  CHECK(f1 == std::vector<Facet>{facet({0, 1}, 0), facet({1, 0}, 0), facet({1, 1}, 2), facet({2, 1}, 3)});
  auto f2 = newton::build(ideal(2, {{2, 0}, {0, 3}})).facets();
  CHECK(f2 == std::vector<Facet>{facet({0, 1}, 0), facet({1, 0}, 0), facet({3, 2}, 6)});
  auto f3 = newton::build(maximal_ideal(2)).facets();
  CHECK(f3 == std::vector<Facet>{facet({0, 1}, 0), facet({1, 0}, 0), facet({1, 1}, 1)});
}

TEST_CASE("vertices") {
  CHECK(newton::build(ideal(2, {{2, 0}, {0, 3}})).vertices() == std::vector<newton::Point>{pt({0, 3}), pt({2, 0})});
  CHECK(newton::build(ideal(2, {{2, 0}, {1, 1}, {0, 3}})).vertices().size() == 3);
  CHECK(newton::build(ideal(2, {{1, 0}, {1, 1}})).vertices() == std::vector<newton::Point>{pt({1, 0})});
  // (1,1) is the midpoint of (2,0) and (0,2).
  CHECK(newton::build(ideal(2, {{2, 0}, {1, 1}, {0, 2}})).vertices().size() == 2);
}

TEST_CASE("membership and thresholds") {
  auto P = newton::build(ideal(2, {{2, 0}, {0, 3}}));
  CHECK(newton::contains(P, {Rat(6, 5), Rat(6, 5)}));
  CHECK_FALSE(newton::contains(P, {Rat(1), Rat(1)}));
  CHECK(newton::diagonal_threshold(P) == Rat(6, 5));
  auto M = newton::build(maximal_ideal(3));
  CHECK(newton::contains(M, pt({1, 0, 0})));
  CHECK(newton::diagonal_threshold(M) == Rat(1, 3));
  for (unsigned d = 1; d <= 4; ++d)
    CHECK(newton::diagonal_threshold(newton::build(maximal_ideal_power(3, d))) == Rat(static_cast<long>(d), 3L));
  CHECK(newton::integral_closure_member(ideal(2, {{2, 0}, {0, 2}}), ExpVec{1, 1}));
  CHECK_FALSE(newton::integral_closure_member(ideal(2, {{2, 0}, {0, 2}}), ExpVec{1, 0}));
  CHECK_FALSE(newton::integral_closure_member(maximal_ideal(3), ExpVec{0, 0, 0}));
  CHECK_THROWS_AS(newton::build(MonomialIdeal(2)), InputError);
}

TEST_CASE("covolume and multiplicity") {
  CHECK(newton::covolume(newton::build(maximal_ideal(2))) == Rat(1, 2));
  CHECK(newton::covolume(newton::build(ideal(2, {{2, 0}, {0, 3}}))) == Rat(3));
  CHECK(newton::covolume(newton::build(ideal(2, {{2, 0}, {1, 1}, {0, 3}}))) == Rat(5, 2));
  CHECK(newton::multiplicity(ideal(2, {{2, 0}, {0, 3}})) == 6u);
  for (std::size_t n = 1; n <= 3; ++n)
    for (unsigned k = 1; k <= 5; ++k) {
      std::uint64_t expected = 1;
      for (std::size_t i = 0; i < n; ++i) expected *= k;
      CHECK(newton::multiplicity(maximal_ideal_power(n, k)) == expected);
    }
  CHECK(newton::multiplicity(ideal(3, {{2, 0, 0}, {0, 3, 0}, {0, 0, 4}})) == 24u);
  CHECK_THROWS_AS(newton::multiplicity(ideal(2, {{1, 0}, {1, 1}})), InputError);
}

TEST_CASE("caps") {
  newton::Caps tight{2, 3};
  CHECK_THROWS_AS(newton::build(maximal_ideal(3)).facets(tight), CapsExceeded);
  CHECK_THROWS_AS(newton::build(maximal_ideal_power(2, 4)).facets(tight), CapsExceeded);
  CHECK_NOTHROW(newton::build(maximal_ideal(2)).facets(tight));
}

TEST_CASE("facets are sound on random ideals") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    auto a = gen::ideal(rng, n, 6, 4);
    auto P = newton::build(a);
    for (const auto& f : P.facets()) {
      linalg::Matrix tight;
      for (const auto& v : a.gens()) {
        Rat s(0);
        for (std::size_t i = 0; i < n; ++i) s += f.normal[i] * Rat(v[i]);
        CHECK(s >= f.offset);
        if (s == f.offset) {
          linalg::Vector row(v.to_rational());
          row.push_back(Rat(1));
          tight.push_back(row);
        }
      }
      // Coordinate rays e_i with u_i = 0 are tight directions.
      for (std::size_t i = 0; i < n; ++i)
        if (f.normal[i].is_zero()) {
          linalg::Vector row(n + 1, Rat(0));
          row[i] = Rat(1);
          tight.push_back(row);
        }
      CHECK(oracle::rank(tight) >= n);
    }
  }
}

TEST_CASE("LP membership agrees with facet membership and the planar hull") {
  gen::Rng rng(42);
  for (int trial = 0; trial < 110; ++trial) {
    const std::size_t n = trial % 2 ? 2 : 3;
    auto a = gen::ideal(rng, n, 5, 4);
    auto P = newton::build(a);
    for (int s = 0; s < 12; ++s) {
      std::vector<Rat> q;
      const long den = gen::uniform(rng, 1, 6);
      for (std::size_t i = 0; i < n; ++i) q.emplace_back(static_cast<long>(gen::uniform(rng, 0, 5 * den)), den);
      const bool lp = newton::contains(P, q);
      CHECK(lp == newton::contains_by_facets(P, q));
      if (n == 2 && is_zero_dimensional(a)) CHECK(lp == oracle::in_polyhedron_2d(a, q[0], q[1]));
    }
  }
}

TEST_CASE("membership is monotone under ideal containment") {
  gen::Rng rng(43);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    auto b = gen::ideal(rng, n, 4, 3);
    auto a = ideal_product(b, gen::ideal(rng, n, 2, 2));
    REQUIRE(ideal_contains(b, a));
    auto Pa = newton::build(a), Pb = newton::build(b);
    for (int s = 0; s < 10; ++s) {
      std::vector<Rat> q;
      for (std::size_t i = 0; i < n; ++i) q.emplace_back(static_cast<long>(gen::uniform(rng, 0, 16)), 2L);
      if (newton::contains(Pa, q)) CHECK(newton::contains(Pb, q));
    }
  }
}

TEST_CASE("covolume matches the planar trapezoid oracle") {
  gen::Rng rng(44);
  for (int trial = 0; trial < 150; ++trial) {
    auto a = gen::zero_dim_ideal(rng, 2, 6, 8);
    CHECK(newton::covolume(newton::build(a)) == oracle::covolume_2d(a));
    CHECK(Rat(newton::multiplicity(a)) == Rat(2) * oracle::covolume_2d(a));
  }
}

TEST_CASE("scaling of threshold and multiplicity") {
  gen::Rng rng(45);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    auto a = gen::zero_dim_ideal(rng, n, n + 2, 3);
    const unsigned k = gen::uniform(rng, 1, 3);
    auto ak = ideal_power(a, k);
    const Rat t = newton::diagonal_threshold(newton::build(a));
    CHECK(newton::diagonal_threshold(newton::build(ak)) == Rat(k) * t);
    std::uint64_t kn = 1;
    for (std::size_t i = 0; i < n; ++i) kn *= k;
    auto e = newton::multiplicity(a);
    CHECK(newton::multiplicity(ak, newton::Caps{4, 64}) == kn * e);
    CHECK(newton::covolume(newton::build(a)) > Rat(0));
  }
}

TEST_CASE("polytope volume of simplices and boxes") {
  // Unit cube as half-spaces x_i >= 0, -x_i >= -1.
  std::vector<Facet> cube;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rat> u(3, Rat(0));
    u[i] = Rat(1);
    cube.push_back({u, Rat(0)});
    u[i] = Rat(-1);
    cube.push_back({u, Rat(-1)});
  }
  CHECK(newton::polytope_volume(cube, 3) == Rat(1));
  // Standard simplex x >= 0, -(x1+x2+x3) >= -1.
  std::vector<Facet> simplex;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Rat> u(3, Rat(0));
    u[i] = Rat(1);
    simplex.push_back({u, Rat(0)});
  }
  simplex.push_back({pt({-1, -1, -1}), Rat(-1)});
  CHECK(newton::polytope_volume(simplex, 3) == Rat(1, 6));
}
