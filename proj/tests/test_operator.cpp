#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "ec/catalog.hpp"
#include "ec/operator.hpp"

using namespace ec;

namespace {

Scalar sc(long long num, long long den = 1) { return Scalar(Rat(num, den)); }

// hexagon -> linf2 with T(x1) = (1,1), T(x2) = (1,0); then T(x3) = (0,-1).
Operator hex_to_linf2_a() {
  return Operator::from_images(catalog::get_space("hexagon"), catalog::get_space("linf2"),
                               {{sc(1), sc(1)}, {sc(1), sc(0)}});
}

// hexagon -> linf2 with T(x1) = T(x2) = (1,1); then T(x3) = 0.
Operator hex_to_linf2_b() {
  return Operator::from_images(catalog::get_space("hexagon"), catalog::get_space("linf2"),
                               {{sc(1), sc(1)}, {sc(1), sc(1)}});
}

}  // namespace

TEST_CASE("apply reproduces the quoted images") {
  auto t = catalog::get_operator("ex1");
  const auto& gens = t.domain()->generators();
  CHECK(t.apply(gens[0]) == Vec{sc(1), sc(-1), sc(0)});
  CHECK(t.apply(gens[1]) == Vec{sc(1), sc(0), sc(1)});
  CHECK(t.apply(gens[2]) == Vec{sc(0), sc(1), sc(1)});
  CHECK(t.apply({sc(0), sc(0)}) == Vec{sc(0), sc(0), sc(0)});
}

TEST_CASE("operator norm") {
  auto t = catalog::get_operator("ex1");
  CHECK(t.op_norm() == Scalar(1));

  Operator zero(t.domain(), t.codomain(), Mat(3, 2));
  CHECK(zero.op_norm() == Scalar(0));
  CHECK(zero.is_zero());

  CHECK(t.scaled(sc(2)).op_norm() == sc(2));
  CHECK(t.scaled(sc(-1, 3)).op_norm() == sc(1, 3));
}

TEST_CASE("attainment sets") {
  SECTION("ex1 attains everywhere") {
    auto t = catalog::get_operator("ex1");
    CHECK(t.attainment_set().size() == 6);
  }
  SECTION("norm attained at all six vertices") {
    CHECK(hex_to_linf2_a().attainment_set().size() == 6);
  }
  SECTION("collapsing operator attains only at x1, x2") {
    auto t = hex_to_linf2_b();
    const auto& gens = t.domain()->generators();
    CHECK(t.apply(gens[2]) == Vec{sc(0), sc(0)});
    auto att = t.attainment_set();
    CHECK(att.size() == 4);
    for (const Vec& x : att) CHECK((canonical_rep(x) == gens[0] || canonical_rep(x) == gens[1]));
  }
  SECTION("zero operator has no attainment set") {
    auto hex = catalog::get_space("hexagon");
    Operator zero(hex, catalog::get_space("linf2"), Mat(2, 2));
    try {
      zero.attainment_set();
      FAIL("expected ZeroOperator");
    } catch (const error& e) {
      CHECK(e.code() == errc::zero_operator);
    }
  }
}

TEST_CASE("active sets") {
  SECTION("zero operator is strictly interior") {
    auto hex = catalog::get_space("hexagon");
    Operator zero(hex, catalog::get_space("linf2"), Mat(2, 2));
    CHECK(zero.active_set().empty());
  }
  SECTION("ex1 is tight at every generator pair") {
    auto t = catalog::get_operator("ex1");
    auto active = t.active_set();
    std::set<std::size_t> gens_hit;
    for (const ActivePair& p : active) gens_hit.insert(p.gen);
    CHECK(gens_hit == std::set<std::size_t>{0, 1, 2});
  }
  SECTION("identity on the sup cube has four active pairs") {
    auto linf2 = catalog::get_space("linf2");
    Operator id(linf2, linf2, Mat::identity(2));
    auto active = id.active_set();
    CHECK(active.size() == 4);
    int negatives = 0;
    for (const ActivePair& p : active) negatives += (p.sign < 0);
    CHECK(negatives == 1);  // e2 is tight at (1,-1) with the negative sign
  }
  SECTION("expansion is rejected") {
    auto t = catalog::get_operator("ex1");
    try {
      t.scaled(sc(3, 2)).active_set();
      FAIL("expected NormExceedsOne");
    } catch (const error& e) {
      CHECK(e.code() == errc::norm_exceeds_one);
    }
  }
}

TEST_CASE("from_images solves the exact linear system") {
  // the matrix of ex3 in standard coordinates, given in the catalog
  auto t = catalog::get_operator("ex3");
  Scalar r2 = Scalar::sqrt_of(2);
  CHECK(t.matrix()(0, 0) == sc(1));
  CHECK(t.matrix()(0, 1) == sc(1) - r2);
  CHECK(t.matrix()(1, 0) == r2 - sc(1));
  CHECK(t.matrix()(1, 1) == sc(1));
  // quoted dependent images
  const auto& gens = t.domain()->generators();
  CHECK(t.apply(gens[2]) == Vec{sc(1) - r2, sc(1)});
  CHECK(t.apply(gens[3]) == Vec{sc(-1), r2 - sc(1)});
}

TEST_CASE("active pairs sit inside the attainment set at norm one") {
  for (const char* name : {"ex1", "ex2", "ex3"}) {
    auto t = catalog::get_operator(name);
    REQUIRE(t.op_norm() == Scalar(1));
    auto att = t.attainment_set();
    for (const ActivePair& p : t.active_set()) {
      const Vec& g = t.domain()->generators()[p.gen];
      CHECK(std::find(att.begin(), att.end(), g) != att.end());
    }
  }
}

TEST_CASE("norm equals the facet-max formulation") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long long> num(-8, 8);
  std::uniform_int_distribution<long long> den(1, 5);
  auto hex = catalog::get_space("hexagon");
  auto linf2 = catalog::get_space("linf2");
  for (int k = 0; k < 80; ++k) {
    Mat m(2, 2);
    for (auto& c : m.data) c = sc(num(rng), den(rng));
    Operator t(hex, linf2, m);
    Scalar facet_max;
    for (const Vec& g : hex->generators())
      for (const Vec& f : linf2->facets()) {
        Scalar v = dot(f, t.apply(g));
        if (Scalar::compare(v, facet_max) > 0) facet_max = v;
      }
    CHECK(t.op_norm() == facet_max);
  }
}

TEST_CASE("attainment symmetry and norm subadditivity") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<long long> num(-6, 6);
  std::uniform_int_distribution<long long> den(1, 4);
  auto oct = catalog::get_space("octagon");
  auto linf2 = catalog::get_space("linf2");
  for (int k = 0; k < 60; ++k) {
    Mat m1(2, 2), m2(2, 2);
    for (auto& c : m1.data) c = sc(num(rng), den(rng));
    for (auto& c : m2.data) c = sc(num(rng), den(rng));
    Operator a(oct, linf2, m1), b(oct, linf2, m2);
    CHECK(Scalar::compare(a.plus(b).op_norm(), a.op_norm() + b.op_norm()) <= 0);
    if (!a.is_zero()) {
      auto att = a.attainment_set();
      CHECK_FALSE(att.empty());
      for (const Vec& x : att) {
        CHECK(std::find(att.begin(), att.end(), vec_neg(x)) != att.end());
        CHECK(a.codomain()->gauge(a.apply(x)) == a.op_norm());
      }
    }
  }
}
