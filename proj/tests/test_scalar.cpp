#include <catch2/catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <random>

#include "ec/scalar.hpp"

using ec::Field;
using ec::Rat;
using ec::Scalar;

namespace {

Scalar sc(long long num, long long den = 1) { return Scalar(Rat(num, den)); }

Scalar sc(long long an, long long ad, long long bn, long long bd, std::int64_t d) {
  return Scalar(Rat(an, ad), Rat(bn, bd), d);
}

// 128-bit float approximation, used as an independent comparison oracle.
using Quad = boost::multiprecision::cpp_bin_float_quad;

Quad approx(const Scalar& x) {
  Quad a = static_cast<Quad>(numerator(x.rational_part())) /
           static_cast<Quad>(denominator(x.rational_part()));
  Quad b = static_cast<Quad>(numerator(x.radical_part())) /
           static_cast<Quad>(denominator(x.radical_part()));
  return a + b * sqrt(Quad(x.radicand()));
}

struct RandomScalars {
  std::mt19937_64 rng{20240817};
  std::uniform_int_distribution<long long> num{-50, 50};
  std::uniform_int_distribution<long long> den{1, 20};
  std::int64_t d;

  explicit RandomScalars(std::int64_t radicand) : d(radicand) {}

  Scalar next() {
    return Scalar(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)), d);
  }
};

}  // namespace

TEST_CASE("field validation") {
  CHECK_NOTHROW(Field(1));
  CHECK_NOTHROW(Field(2));
  CHECK_NOTHROW(Field(3));
  CHECK_NOTHROW(Field(30));
  CHECK_THROWS_AS(Field(0), ec::error);
  CHECK_THROWS_AS(Field(4), ec::error);
  CHECK_THROWS_AS(Field(12), ec::error);
  CHECK_THROWS_AS(Field(-3), ec::error);
}

TEST_CASE("quadratic field arithmetic") {
  SECTION("multiplicative identity") {
    Scalar one = sc(1, 1, 0, 1, 2);
    CHECK(one * one == sc(1));
  }
  SECTION("conjugate product in Q(sqrt(2))") {
    Scalar x = sc(1, 1, -1, 1, 2);
    Scalar y = sc(1, 1, 1, 1, 2);
    CHECK(x * y == sc(-1));
  }
  SECTION("radical parts cancel") {
    Scalar x = sc(1, 2, 1, 2, 3);
    Scalar y = sc(1, 2, -1, 2, 3);
    CHECK(x + y == sc(1));
    CHECK((x + y).is_rational());
  }
  SECTION("division undoes multiplication") {
    Scalar x = sc(3, 7, -2, 5, 3);
    Scalar y = sc(-1, 2, 4, 3, 3);
    CHECK(x * y / y == x);
  }
  SECTION("division by zero") {
    CHECK_THROWS_AS(sc(1) / sc(0), ec::error);
    try {
      sc(1) / Scalar(Rat(0), Rat(0), 2);
      FAIL("expected DivisionByZero");
    } catch (const ec::error& e) {
      CHECK(e.code() == ec::errc::division_by_zero);
    }
  }
  SECTION("incompatible radicands") {
    Scalar r2 = Scalar::sqrt_of(2);
    Scalar r3 = Scalar::sqrt_of(3);
    CHECK_THROWS_AS(r2 + r3, ec::error);
    CHECK_THROWS_AS(r2 * r3, ec::error);
    CHECK(r2 * sc(2) == Scalar(Rat(0), Rat(2), 2));  // rationals embed freely
  }
}

TEST_CASE("exact sign predicate") {
  CHECK(sc(1, 1, -1, 1, 2).sign() == -1);   // 1 - sqrt(2) < 0
  CHECK(Scalar(Rat(0), Rat(0), 3).sign() == 0);
  CHECK(sc(-1, 2, 1, 2, 3).sign() == +1);   // sqrt(3)/2 dominates -1/2
  CHECK(sc(1, 2, -1, 2, 3).sign() == -1);
  CHECK(sc(5, 1, -1, 1, 2).sign() == +1);   // 5 dominates sqrt(2)
  CHECK(Scalar::sqrt_of(2).sign() == +1);
}

TEST_CASE("exact comparison") {
  CHECK(Scalar::compare(sc(1, 2), Scalar(Rat(0), Rat(1, 2), 3)) < 0);  // 1/2 < sqrt(3)/2
  Scalar x = sc(5, 7, 2, 3, 2);
  CHECK(Scalar::compare(x, x) == 0);
  // sqrt(2) - 1 < 1/2 because 2 < (3/2)^2
  CHECK(Scalar::compare(Scalar::sqrt_of(2) - sc(1), sc(1, 2)) < 0);
  CHECK(sc(1, 3) < sc(1, 2));
  CHECK(Scalar::sqrt_of(3) > sc(1));
}

TEST_CASE("parse and format") {
  SECTION("grammar examples") {
    Scalar x = Scalar::parse("1/2+1/2*sqrt(3)");
    CHECK(x.rational_part() == Rat(1, 2));
    CHECK(x.radical_part() == Rat(1, 2));
    CHECK(x.radicand() == 3);
    CHECK(Scalar::parse("-1") == sc(-1));
    CHECK(Scalar::parse("3/6") == sc(1, 2));
    CHECK(Scalar::parse("3/6").str() == "1/2");
  }
  SECTION("unit radical coefficients") {
    CHECK(Scalar::parse("sqrt(2)") == Scalar::sqrt_of(2));
    CHECK(Scalar::parse("-sqrt(2)") == -Scalar::sqrt_of(2));
    CHECK(Scalar::sqrt_of(2).str() == "sqrt(2)");
    CHECK((-Scalar::sqrt_of(2)).str() == "-sqrt(2)");
    CHECK(Scalar::parse("1-sqrt(2)").str() == "1-sqrt(2)");
    CHECK(Scalar::parse("2*sqrt(2)").str() == "2*sqrt(2)");
  }
  SECTION("canonicalization on parse") {
    CHECK(Scalar::parse("0*sqrt(3)") == sc(0));
    CHECK(Scalar::parse("sqrt(1)") == sc(1));
    CHECK(Scalar::parse("1/2 + 1/2*sqrt(3)") == Scalar::parse("1/2+1/2*sqrt(3)"));
  }
  SECTION("errors carry positions") {
    for (const char* bad : {"", "1/0", "1+", "sqrt(4)", "1+2", "sqrt(3)+sqrt(3)",
                            "x", "1..2", "1/2/3", "--1", "1*2"}) {
      INFO(bad);
      CHECK_THROWS_AS(Scalar::parse(bad), ec::error);
    }
    try {
      Scalar::parse("1/2+x");
      FAIL("expected ParseError");
    } catch (const ec::error& e) {
      CHECK(e.code() == ec::errc::parse_error);
      CHECK(e.message().find("position") != std::string::npos);
    }
  }
  SECTION("round trips") {
    RandomScalars gen(3);
    for (int k = 0; k < 500; ++k) {
      Scalar x = gen.next();
      CHECK(Scalar::parse(x.str()) == x);
    }
  }
}

TEST_CASE("field axioms on random triples") {
  for (std::int64_t d : {std::int64_t{2}, std::int64_t{3}}) {
    RandomScalars gen(d);
    for (int k = 0; k < 2000; ++k) {
      Scalar x = gen.next(), y = gen.next(), z = gen.next();
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + (-x) == Scalar(0));
      if (!y.is_zero()) CHECK(y * (Scalar(1) / y) == Scalar(1));
    }
  }
}

TEST_CASE("sign is multiplicative") {
  RandomScalars gen(2);
  for (int k = 0; k < 10000; ++k) {
    Scalar x = gen.next(), y = gen.next();
    CHECK((x * y).sign() == x.sign() * y.sign());
  }
}

TEST_CASE("cmp agrees with 128-bit float approximation") {
  RandomScalars gen(3);
  int checked = 0;
  for (int k = 0; k < 10000; ++k) {
    Scalar x = gen.next(), y = gen.next();
    Quad fx = approx(x), fy = approx(y);
    // The float oracle is only consulted away from ties it cannot resolve.
    if (fx == fy) continue;
    ++checked;
    CHECK(Scalar::compare(x, y) == (fx < fy ? -1 : 1));
  }
  CHECK(checked > 9000);
}

TEST_CASE("canonical form is idempotent") {
  RandomScalars gen(2);
  for (int k = 0; k < 2000; ++k) {
    Scalar x = gen.next() * gen.next() + gen.next();
    Scalar re(x.rational_part(), x.radical_part(), x.radicand());
    CHECK(re == x);
    CHECK(re.str() == x.str());
    if (x.is_rational()) CHECK(x.radicand() == 1);
  }
}
