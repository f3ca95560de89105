#include <catch2/catch_amalgamated.hpp>

#include "ec/catalog.hpp"
#include "ec/extremal.hpp"
#include "ec/json_io.hpp"

using namespace ec;

namespace {
Scalar sc(long long num, long long den = 1) { return Scalar(Rat(num, den)); }
}

TEST_CASE("every catalog space validates on load") {
  for (const std::string& name : catalog::space_names()) {
    INFO(name);
    CHECK_NOTHROW(catalog::get_space(name));
    CHECK_FALSE(catalog::space_note(name).empty());
  }
  CHECK(catalog::get_space("linf(2)")->name() == "linf2");
  CHECK(catalog::get_space("l1(3)")->name() == "l13");
  try {
    catalog::get_space("nonagon");
    FAIL("expected UnknownName");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_name);
  }
}

TEST_CASE("fixture geometry") {
  auto hex = catalog::get_space("hexagon");
  CHECK(hex->field().d == 3);
  CHECK(hex->generators()[0] == Vec{sc(1), sc(0)});
  CHECK(hex->generators()[1] == Vec{sc(1, 2), Scalar(Rat(0), Rat(1, 2), 3)});
  CHECK(hex->generators()[2] == Vec{sc(-1, 2), Scalar(Rat(0), Rat(1, 2), 3)});

  auto oct = catalog::get_space("octagon");
  CHECK(oct->field().d == 2);
  CHECK(oct->generators().size() == 4);
  CHECK(oct->generators()[1] == Vec{Scalar(Rat(0), Rat(1, 2), 2), Scalar(Rat(0), Rat(1, 2), 2)});

  auto xp8 = catalog::get_space("xp8");
  CHECK(xp8->dim() == 3);
  CHECK(xp8->extreme_points().size() == 8);  // validation is the provenance
  CHECK(xp8->is_extreme_point({sc(1), sc(1), sc(1)}));
}

TEST_CASE("catalog operators reproduce the quoted images exactly") {
  auto ex1 = catalog::get_operator("ex1");
  CHECK(ex1.apply(ex1.domain()->generators()[2]) == Vec{sc(0), sc(1), sc(1)});

  auto ex2 = catalog::get_operator("ex2");
  CHECK(ex2.apply(ex2.domain()->generators()[2]) == Vec{sc(-1, 2), sc(0), sc(1, 2)});

  auto ex3 = catalog::get_operator("ex3");
  Scalar r2 = Scalar::sqrt_of(2);
  CHECK(ex3.matrix()(0, 0) == sc(1));
  CHECK(ex3.matrix()(0, 1) == sc(1) - r2);
  CHECK(ex3.matrix()(1, 0) == r2 - sc(1));
  CHECK(ex3.matrix()(1, 1) == sc(1));

  try {
    catalog::get_operator("ex4");
    FAIL("expected UnknownName");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_name);
  }
}

TEST_CASE("the three counterexample operators") {
  for (const char* name : {"ex1", "ex2", "ex3"}) {
    INFO(name);
    auto t = catalog::get_operator(name);
    CHECK(t.op_norm() == Scalar(1));
    CHECK(is_extreme(t).is_extreme());
    CHECK_FALSE(weak_lp_holds(t).holds);
  }
}

TEST_CASE("space JSON round trip") {
  for (const char* name : {"hexagon", "octagon", "xp8", "linf3"}) {
    auto s = catalog::get_space(name);
    auto back = space_from_json(space_to_json(*s));
    CHECK(back->dim() == s->dim());
    CHECK(back->field() == s->field());
    CHECK(back->generators() == s->generators());
  }
}

TEST_CASE("operator JSON round trip and images form") {
  auto t = catalog::get_operator("ex3");
  auto back = operator_from_json(operator_to_json(t));
  CHECK(back == t);

  Json j;
  j["domain"] = "hexagon";
  j["codomain"] = "linf3";
  j["images"] = Json::array({Json::array({"1", "-1", "0"}), Json::array({"1", "0", "1"})});
  CHECK(operator_from_json(j) == catalog::get_operator("ex1"));

  Json bad;
  bad["domain"] = "hexagon";
  bad["codomain"] = "linf3";
  try {
    operator_from_json(bad);
    FAIL("expected ParseError");
  } catch (const error& e) {
    CHECK(e.code() == errc::parse_error);
  }
}

TEST_CASE("certificate JSON carries the witness data") {
  auto t = catalog::get_operator("ex1");
  Json je = certificate_to_json(is_extreme(t));
  CHECK(je["verdict"] == "Extreme");
  CHECK(je["op_norm"] == "1");
  CHECK(je["spanning_constraints"].size() == 6);

  Json jn = certificate_to_json(is_extreme(t.scaled(sc(1, 2))));
  CHECK(jn["verdict"] == "NotExtreme");
  CHECK(jn.contains("epsilon"));
  CHECK(jn["t1"].size() == 3);
}
