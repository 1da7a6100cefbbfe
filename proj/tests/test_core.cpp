#include <doctest.h>

#include "singulact/errors.hpp"
#include "singulact/monomial_ideal.hpp"
#include "singulact/polynomial.hpp"
#include "singulact/rational.hpp"
#include "singulact/weights.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace singulact;

namespace {

Poly mono(std::initializer_list<ExpVec::value_type> e, Rat c = Rat(1)) { return Poly::monomial(ExpVec(e), c); }

MonomialIdeal ideal(std::size_t n, std::vector<ExpVec> gens) { return MonomialIdeal(n, std::move(gens)); }

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rat(4, -6) == Rat(-2, 3));
  CHECK(Rat(4, -6).str() == "-2/3");
  CHECK(Rat(6, 3).str() == "2");
  CHECK(Rat::parse("10/4") == Rat(5, 2));
  CHECK_THROWS_AS(Rat(1, 0), InputError);
  CHECK_THROWS_AS(Rat::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rat::parse("abc"), ParseError);
  CHECK(Rat(2, 3).inverse() == Rat(3, 2));
  CHECK(Rat(-2, 3).pow(3) == Rat(-8, 27));
}

TEST_CASE("extended rationals order infinity last") {
  CHECK(ExtRat::infinity() > ExtRat(Rat(1000000)));
  CHECK(ExtRat::infinity() == ExtRat::infinity());
  CHECK(ExtRat::parse("inf").is_infinite());
  CHECK(ExtRat::parse("5/6") == ExtRat(Rat(5, 6)));
  CHECK_THROWS(ExtRat::infinity().value());
}

TEST_CASE("partial derivatives") {
  Poly f = mono({2, 0}) + mono({0, 3});
  CHECK(partial_derivative(f, 0) == mono({1, 0}, Rat(2)));
  CHECK(partial_derivative(f, 1) == mono({0, 2}, Rat(3)));
  CHECK(partial_derivative(mono({0, 3}), 0).is_zero());
  CHECK_THROWS_AS(partial_derivative(f, 2), InputError);
}

TEST_CASE("jacobian generators") {
  Poly f = mono({4, 1});
  auto g = jacobian_generators(f);
  REQUIRE(g.size() == 2);
  CHECK(g[0] == mono({3, 1}, Rat(4)));
  CHECK(g[1] == mono({4, 0}));
  auto with_f = jacobian_generators(f, true);
  CHECK(with_f.size() == 3);
  CHECK(with_f[0] == f);
  auto cube = jacobian_generators(mono({3, 0, 0}));
  CHECK(cube[0] == mono({2, 0, 0}, Rat(3)));
  CHECK(cube[1].is_zero());
  CHECK(cube[2].is_zero());
}

TEST_CASE("order at origin") {
  CHECK(order_at_origin(mono({2, 0}) + mono({0, 3})) == 2u);
  CHECK(order_at_origin(mono({4, 1})) == 5u);
  CHECK_FALSE(order_at_origin(Poly(2)).has_value());
}

TEST_CASE("restriction to a coordinate hyperplane") {
  Poly f = mono({2, 0, 0}) + mono({0, 3, 0}) + mono({0, 0, 7});
  CHECK(restrict_to_coordinate_hyperplane(f, 2) == mono({2, 0}) + mono({0, 3}));
  CHECK_THROWS_AS(restrict_to_coordinate_hyperplane(mono({1, 1}), 0), InputError);
  CHECK_THROWS_AS(restrict_to_coordinate_hyperplane(mono({2}), 0), InputError);
}

TEST_CASE("polynomial arithmetic agrees with evaluation") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    Poly f = gen::poly(rng, n, 4, 3), g = gen::poly(rng, n, 4, 3);
    std::vector<Rat> p;
    for (std::size_t i = 0; i < n; ++i) p.push_back(gen::coefficient(rng));
    const Rat fv = oracle::evaluate(f, p), gv = oracle::evaluate(g, p);
    CHECK(oracle::evaluate(f + g, p) == fv + gv);
    CHECK(oracle::evaluate(f - g, p) == fv - gv);
    CHECK(oracle::evaluate(f * g, p) == fv * gv);
    CHECK(oracle::evaluate(f.pow(3), p) == fv * fv * fv);
  }
}

TEST_CASE("derivative is additive and order is additive on monomials") {
  gen::Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 4);
    Poly f = gen::poly(rng, n, 5, 4), g = gen::poly(rng, n, 5, 4);
    const std::size_t i = gen::uniform(rng, 0, static_cast<unsigned>(n - 1));
    CHECK(partial_derivative(f + g, i) == partial_derivative(f, i) + partial_derivative(g, i));
    auto u = gen::exponent(rng, n, 5), v = gen::exponent(rng, n, 5);
    CHECK(order_at_origin(Poly::monomial(u) * Poly::monomial(v)) == u.degree() + v.degree());
  }
}

TEST_CASE("ideal products and powers") {
  auto m = maximal_ideal(2);
  auto b = ideal(2, {{1, 0}, {0, 2}});
  CHECK(ideal_product(m, b).gens() == std::vector<ExpVec>{{0, 3}, {1, 1}, {2, 0}});
  CHECK(ideal_product(m, ideal(2, {{3, 0}})).gens() == std::vector<ExpVec>{{3, 1}, {4, 0}});
  CHECK(ideal_product(m, m) == maximal_ideal_power(2, 2));
  CHECK(maximal_ideal(3).gens().size() == 3);
  CHECK(maximal_ideal_power(2, 3).gens() == std::vector<ExpVec>{{0, 3}, {1, 2}, {2, 1}, {3, 0}});
  CHECK(ideal_power(b, 2).gens() == std::vector<ExpVec>{{0, 4}, {1, 2}, {2, 0}});
  CHECK(ideal(2, {{1, 0}, {2, 0}}).gens() == std::vector<ExpVec>{{1, 0}});
}

TEST_CASE("ideal containment") {
  auto a = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  auto b = ideal(2, {{1, 0}, {0, 2}});
  CHECK(ideal_contains(b, a));
  CHECK_FALSE(ideal_contains(a, b));
  CHECK(poly_in_ideal(a, mono({2, 0}) + mono({0, 3})));
  CHECK_FALSE(poly_in_ideal(a, mono({1, 0}) + mono({0, 3})));
  CHECK(is_zero_dimensional(ideal(2, {{2, 0}, {0, 3}})));
  CHECK_FALSE(is_zero_dimensional(ideal(2, {{1, 0}, {1, 1}})));
  CHECK(is_zero_dimensional(maximal_ideal_power(3, 4)));
}

TEST_CASE("ideal product is an associative commutative antichain operation") {
  gen::Rng rng(13);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 3);
    auto a = gen::ideal(rng, n, 4, 4), b = gen::ideal(rng, n, 4, 4), c = gen::ideal(rng, n, 3, 3);
    auto ab = ideal_product(a, b);
    CHECK(ab == ideal_product(b, a));
    CHECK(ideal_product(ab, c) == ideal_product(a, ideal_product(b, c)));
    for (std::size_t i = 0; i < ab.gens().size(); ++i)
      for (std::size_t j = 0; j < ab.gens().size(); ++j)
        if (i != j) CHECK_FALSE(ab.gens()[i].divides(ab.gens()[j]));
    if (ideal_contains(a, b) && ideal_contains(b, a)) CHECK(a.gens() == b.gens());
    CHECK(ideal_contains(a, ab));
  }
}

TEST_CASE("monomialize") {
  auto r = monomialize({mono({1, 0}, Rat(2)), mono({0, 2}, Rat(3))});
  REQUIRE(r.ok());
  CHECK(r.ideal->gens() == std::vector<ExpVec>{{0, 2}, {1, 0}});

  auto s = monomialize({mono({0, 2}, Rat(3)) + mono({0, 4}, Rat(5)), mono({1, 0}, Rat(2))});
  REQUIRE(s.ok());
  CHECK(s.ideal->gens() == std::vector<ExpVec>{{0, 2}, {1, 0}});

  auto t = monomialize({mono({1, 0}, Rat(2)) + mono({0, 2}), mono({1, 1})});
  CHECK_FALSE(t.ok());
  CHECK(t.offending == 0u);
}

TEST_CASE("diagonal jacobians monomialize to the shifted staircase") {
  gen::Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = gen::uniform(rng, 1, 4);
    std::vector<unsigned> a;
    Poly f = gen::diagonal(rng, n, 7, &a);
    auto r = monomialize(jacobian_generators(f));
    REQUIRE(r.ok());
    std::vector<ExpVec> expected;
    for (std::size_t i = 0; i < n; ++i) expected.push_back(gen::pure_power(n, i, a[i] - 1));
    CHECK(*r.ideal == MonomialIdeal(n, expected));
  }
}

TEST_CASE("quasi-homogeneous weights") {
  auto w = quasi_homogeneous_weights(mono({2, 0}) + mono({0, 3}));
  REQUIRE(w);
  CHECK(w->w == std::vector<Rat>{Rat(1, 2), Rat(1, 3)});
  CHECK_FALSE(quasi_homogeneous_weights(mono({2, 0}) + mono({0, 3}) + mono({1, 2})));
  auto v = quasi_homogeneous_weights(mono({3, 1}) + mono({1, 3}));
  REQUIRE(v);
  CHECK(v->w == std::vector<Rat>{Rat(1, 4), Rat(1, 4)});
  CHECK(euler_check(mono({2, 0}) + mono({0, 3}), Weights{{Rat(1, 2), Rat(1, 3)}}));
  CHECK_FALSE(euler_check(mono({2, 0}) + mono({0, 3}), Weights{{Rat(1, 2), Rat(1, 2)}}));
  CHECK(euler_check(mono({2, 0, 0}) + mono({0, 2, 0}) + mono({0, 0, 2}), Weights{{Rat(1, 2), Rat(1, 2), Rat(1, 2)}}));
}

TEST_CASE("weights satisfy the Euler identity on quasi-homogeneous polynomials") {
  gen::Rng rng(15);
  int found = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = gen::uniform(rng, 2, 3);
    // Monomials of weighted degree 1 for random weights 1/k_i.
    std::vector<unsigned> k(n);
    for (auto& x : k) x = gen::uniform(rng, 2, 5);
    std::vector<ExpVec> candidates;
    std::vector<ExpVec::value_type> e(n, 0);
    while (true) {
      Rat d(0);
      for (std::size_t i = 0; i < n; ++i) d += Rat(static_cast<long>(e[i]), static_cast<long>(k[i]));
      if (d == Rat(1)) candidates.emplace_back(e);
      std::size_t i = n;
      while (i > 0 && e[i - 1] == k[i - 1]) e[--i] = 0;
      if (i == 0) break;
      ++e[i - 1];
    }
    Poly f(n);
    for (const auto& c : candidates)
      if (gen::uniform(rng, 0, 1)) f = f + Poly::monomial(c, gen::coefficient(rng));
    if (f.is_zero()) continue;
    auto w = quasi_homogeneous_weights(f);
    REQUIRE(w);
    CHECK(euler_check(f, *w));
    ++found;
  }
  CHECK(found > 100);
}

TEST_CASE("isolatedness certificate") {
  auto f = mono({3, 1}) + mono({1, 3});
  CHECK(jacobian_is_m_primary(f, *quasi_homogeneous_weights(f)));
  auto g = mono({2, 1});
  CHECK_FALSE(jacobian_is_m_primary(g, *quasi_homogeneous_weights(g)));
  auto h = mono({2, 0}) + mono({0, 2});
  CHECK(jacobian_is_m_primary(h, *quasi_homogeneous_weights(h)));
  auto sq = (mono({1, 0}) + mono({0, 1})).pow(2);
  CHECK_FALSE(jacobian_is_m_primary(sq, *quasi_homogeneous_weights(sq)));
}
