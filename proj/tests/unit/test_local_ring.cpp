#include "doctest.h"
#include "samuel/errors.hpp"
#include "samuel/local_ring.hpp"
#include "samuel/ring_file.hpp"
#include "support/linear_oracle.hpp"

using namespace samuel;

namespace {

LocalRingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> relations) {
  auto ambient = PolyRing::make(std::move(vars));
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(r, ambient));
  return LocalRing::make(ambient, std::move(rel));
}

QuotientIdeal Qi(const LocalRingPtr& R, std::vector<std::string> gens) {
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, R->ambient()));
  return R->ideal(std::move(g));
}

std::vector<RingElement> elems(const LocalRingPtr& R, std::vector<std::string> gens) {
  std::vector<RingElement> out;
  for (const auto& s : gens) out.push_back(R->parse_element(s));
  return out;
}

LocalRingPtr example_ring() { return make_ring({"x", "y", "z", "w"}, {"x*y^3", "x*z", "x*w"}); }
LocalRingPtr two_planes() { return make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}); }

}  // namespace

TEST_CASE("presented ring construction") {
  auto R = example_ring();
  CHECK(R->dimension() == 3);
  CHECK(two_planes()->dimension() == 2);
  CHECK_THROWS_AS(make_ring({"x"}, {"x - 1"}), InvalidArgument);
  auto elt = R->parse_element("x*z + y");
  CHECK(elt.representative().to_string() == "y");
}

TEST_CASE("local colength examples") {
  auto line = make_ring({"x"}, {});
  CHECK(local_colength(Qi(line, {"x^2"})) == 2);
  CHECK(local_colength(Qi(line, {"x^2 - x"})) == 1);
  CHECK(local_colength(Qi(line, {"x - 1"})) == 0);
  CHECK_THROWS_AS(local_colength(line->zero_ideal(), LengthOptions{8}), NoStabilization);
}

TEST_CASE("local colength of the depth-one example agrees with the linear-algebra oracle") {
  auto R = example_ring();
  auto Q = Qi(R, {"x - y", "x - z", "x - w"});
  std::size_t engine = local_colength(Q);
  std::vector<Polynomial> gens = Q.lift().generators();
  for (unsigned N = 4; N <= 6; ++N) CHECK(testing::linear_algebra_colength(gens, 4, N) == engine);
  auto Q2 = ideal_power(Q, 2);
  std::size_t engine2 = local_colength(Q2);
  for (unsigned N = 5; N <= 7; ++N)
    CHECK(testing::linear_algebra_colength(Q2.lift().generators(), 4, N) == engine2);
}

TEST_CASE("ideal operations in R") {
  auto R = make_ring({"u", "x"}, {"u^2", "u*x"});
  auto zero = R->zero_ideal();
  auto x = R->parse_element("x");
  CHECK(ideal_equal(ideal_colon(zero, x), Qi(R, {"u"})));
  CHECK(ideal_equal(ideal_colon(zero, x.pow(2)), Qi(R, {"u"})));
  auto a = Qi(R, {"x^2"});
  CHECK(ideal_equal(ideal_sum(a, zero), a));
  CHECK(ideal_equal(ideal_intersection(Qi(R, {"u", "x"}), Qi(R, {"x"})), Qi(R, {"x"})));
  auto ann = ideal_colon(zero, x);
  for (const auto& g : ann.generators()) CHECK((R->element(g) * x).is_zero());
}

TEST_CASE("subquotient lengths") {
  auto S2 = make_ring({"x", "y"}, {});
  auto c = Qi(S2, {"x"});
  CHECK(subquotient_length(c, c) == 0);
  CHECK(subquotient_length(Qi(S2, {"x", "y"}), Qi(S2, {"x", "y^3"})) == 2);
  CHECK_THROWS_AS(subquotient_length(Qi(S2, {"x", "y^2"}), c, LengthOptions{10}), NoStabilization);
  auto S3 = make_ring({"x", "y", "z"}, {});
  auto xy = Qi(S3, {"x", "y"});
  auto colon = ideal_colon(xy, S3->parse_element("z"));
  CHECK(subquotient_length(colon, xy) == 0);
  // a ⊆ c gives zero
  CHECK(subquotient_length(Qi(S2, {"x^2"}), c) == 0);
}

TEST_CASE("H0 lengths") {
  auto domain = make_ring({"x", "y"}, {"y^2 - x^3"});
  CHECK(h0_length(domain->zero_ideal()) == 0);
  auto fat = make_ring({"u", "x"}, {"u^2", "u*x"});
  CHECK(h0_length(fat->zero_ideal()) == 1);
  auto planes = two_planes();
  CHECK(h0_length(Qi(planes, {"x - u"})) == 1);
  CHECK(h0_length(planes->zero_ideal()) == 0);
}

TEST_CASE("H0 of the zero ideal vanishes exactly when J is m-saturated") {
  std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> rings{
      {{"x", "y"}, {"x*y"}},
      {{"x", "y"}, {"x^2", "x*y"}},
      {{"x", "y", "z"}, {"x*z", "y*z"}},
      {{"x", "y", "z"}, {"x^2", "x*y", "x*z"}},
      {{"u", "x"}, {"u^2", "u*x"}},
  };
  for (const auto& [vars, rel] : rings) {
    auto R = make_ring(vars, rel);
    bool saturated = ideal_equal(saturation(R->defining_ideal(), Ideal::maximal(R->ambient())), R->defining_ideal());
    CHECK((h0_length(R->zero_ideal()) == 0) == saturated);
  }
}

TEST_CASE("parameter ideals") {
  auto S2 = make_ring({"x", "y"}, {});
  CHECK(is_parameter_ideal(*S2, elems(S2, {"x", "y"})));
  CHECK_FALSE(is_parameter_ideal(*S2, elems(S2, {"x"})));
  auto R = example_ring();
  CHECK(is_parameter_ideal(*R, elems(R, {"x - y", "x - z", "x - w"}), LengthOptions{20}));
  CHECK_FALSE(is_parameter_ideal(*R, elems(R, {"y", "z", "w"}), LengthOptions{12}));
}

TEST_CASE("local colength is monotone and matches colength on monomial ideals") {
  auto S = make_ring({"x", "y", "z"}, {});
  std::vector<std::vector<std::string>> chain{
      {"x^3", "y^2", "z^2", "x*y*z"},
      {"x^2", "y^2", "z^2"},
      {"x^2", "y", "z^2"},
      {"x", "y", "z"},
  };
  std::size_t prev = 0;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    auto a = Qi(S, chain[i]);
    std::size_t len = local_colength(a);
    CHECK(len == colength(a.lift()));
    if (i > 0) CHECK(len <= prev);
    prev = len;
  }
}

TEST_CASE("ring files") {
  const char* text = R"(
# the depth-one example
field Q
vars x y z w
relations x*y^3, x*z, x*w
ideal Q = x - y, x - z, x - w
)";
  RingSpec spec = parse_ring_file(text);
  CHECK(spec.vars.size() == 4);
  CHECK(spec.relations.size() == 3);
  REQUIRE(spec.ideal("Q") != nullptr);
  CHECK(spec.ideal("Q")->size() == 3);
  auto R = build_ring(spec);
  CHECK(R->dimension() == 3);

  auto fp = build_ring(parse_ring_file("field Fp 32003\nvars x y\nrelations x*y\n"));
  CHECK(fp->ambient()->field().characteristic() == 32003);
  CHECK(build_ring(spec, Field::prime(32003))->ambient()->field().characteristic() == 32003);

  try {
    parse_ring_file("vars x y\nbogus 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_ring_file("vars x y\nrelations x*q\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_ring_file("field Fp 7\nvars x\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("relations x\n"), ParseError);
  CHECK_THROWS_AS(parse_ring_file("vars x\nexpect d = 1\n"), ParseError);

  auto corpus = parse_corpus_file("instance a\nvars x\nexpect d = 1\ninstance b\nvars y\n");
  CHECK(corpus.size() == 2);
  CHECK(corpus[0].expects.at("d") == "1");
  CHECK(parse_field_flag("fp:32003").characteristic() == 32003);
  CHECK(parse_field_flag("q").is_rational());
  CHECK_THROWS_AS(parse_field_flag("fp:x"), InvalidArgument);
}
