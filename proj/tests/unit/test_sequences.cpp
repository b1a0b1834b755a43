#include <algorithm>

#include "doctest.h"
#include "samuel/errors.hpp"
#include "samuel/sequences.hpp"

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

}  // namespace

TEST_CASE("regular sequences") {
  auto S2 = make_ring({"x", "y"}, {});
  CHECK(is_regular_sequence(elems(S2, {"x", "y"})).verdict);
  auto nodal = make_ring({"x", "y"}, {"x*y"});
  auto report = is_regular_sequence(elems(nodal, {"x", "y"}));
  CHECK_FALSE(report.verdict);
  REQUIRE(report.failing_index);
  CHECK(*report.failing_index == 1);  // x is already a zero divisor
  REQUIRE(report.first_failure());
  CHECK(report.first_failure()->witness.size() == 2);
  auto with_zero = is_regular_sequence(elems(S2, {"x", "0"}));
  CHECK_FALSE(with_zero.verdict);
  CHECK(*with_zero.failing_index == 2);
}

TEST_CASE("d-sequences") {
  auto S2 = make_ring({"x", "y"}, {});
  CHECK(is_d_sequence(elems(S2, {"x", "y"})).verdict);
  auto fat = make_ring({"u", "x"}, {"u^2", "u*x"});
  CHECK(is_d_sequence(elems(fat, {"x"})).verdict);
  CHECK_FALSE(is_regular_sequence(elems(fat, {"x"})).verdict);

  auto R = make_ring({"x", "y", "z", "w"}, {"x*y^3", "x*z", "x*w"});
  auto report = is_d_sequence(elems(R, {"x - y", "x - z", "x - w"}));
  CHECK_FALSE(report.verdict);
  REQUIRE(report.first_failure());
  CHECK(report.first_failure()->witness.size() == 2);
  CHECK(report.first_failure()->witness[0] != report.first_failure()->witness[1]);

  // condition (i)
  CHECK_FALSE(is_d_sequence(elems(S2, {"x", "x + x*y"})).verdict);
  CHECK_THROWS_AS(is_d_sequence({}), InvalidArgument);
}

TEST_CASE("d-sequence verdicts are stable under unit scaling") {
  auto planes = make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
  auto xs = elems(planes, {"x - u", "y - v"});
  auto scaled = elems(planes, {"-3*x + 3*u", "1/2*y - 1/2*v"});
  auto a = is_d_sequence(xs);
  auto b = is_d_sequence(scaled);
  CHECK(a.verdict == b.verdict);
  CHECK(a.failing_index == b.failing_index);
}

TEST_CASE("certified regular sequences are d-sequences and permutable") {
  std::vector<std::pair<LocalRingPtr, std::vector<std::string>>> cases{
      {make_ring({"x", "y", "z"}, {}), {"x", "y", "z"}},
      {make_ring({"x", "y"}, {"y^2 - x^3"}), {"x"}},
      {make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"}), {"x - u"}},
      {make_ring({"x", "y", "z"}, {"x*y - z^2"}), {"x", "y"}},
  };
  for (auto& [R, gens] : cases) {
    auto xs = elems(R, gens);
    REQUIRE(is_regular_sequence(xs).verdict);
    CHECK(is_d_sequence(xs).verdict);
    std::reverse(xs.begin(), xs.end());
    CHECK(is_regular_sequence(xs).verdict);
  }
}

TEST_CASE("superficial elements") {
  auto S2 = make_ring({"x", "y"}, {});
  auto m = S2->maximal_ideal();
  SuperficialOptions window{3, 8};
  auto ok = is_superficial(m, S2->parse_element("x"), window);
  CHECK(ok.verdict);
  REQUIRE(ok.certificate_c);
  CHECK(*ok.certificate_c == 1);
  CHECK(ok.n_max == 8);
  CHECK_FALSE(is_superficial(m, S2->parse_element("x^2"), window).verdict);
  CHECK_FALSE(is_superficial(Qi(S2, {"x^2", "y"}), S2->parse_element("x"), window).verdict);

  auto cubic = make_ring({"x", "y"}, {"y^3"});
  CHECK(is_superficial(cubic->maximal_ideal(), cubic->parse_element("x"), window).verdict);
  CHECK_FALSE(is_superficial(cubic->maximal_ideal(), cubic->parse_element("y"), window).verdict);
}

TEST_CASE("superficial sequence search") {
  SuperficialOptions window{2, 6};
  auto S3 = make_ring({"x", "y", "z"}, {});
  auto found = superficial_sequence_search(S3->maximal_ideal(), 3, 10, 0, window);
  CHECK(found.size() == 3);
  CHECK(is_regular_sequence(found).verdict);
  auto again = superficial_sequence_search(S3->maximal_ideal(), 3, 10, 0, window);
  for (std::size_t i = 0; i < found.size(); ++i) CHECK(found[i] == again[i]);

  auto planes = make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
  auto Q = Qi(planes, {"x - u", "y - v"});
  auto one = superficial_sequence_search(Q, 1, 10, 0, window);
  REQUIRE(one.size() == 1);
  CHECK(is_superficial(Q, one[0], window).verdict);

  CHECK(superficial_sequence_search(Q, 0, 10, 0).empty());
  CHECK_THROWS_AS(superficial_sequence_search(Q, 3, 10, 0), InvalidArgument);
  auto nilpotent = make_ring({"x", "y"}, {"y^3"});
  CHECK_THROWS_AS(superficial_sequence_search(Qi(nilpotent, {"y", "x^2"}), 1, 0, 0, window), SearchExhausted);
}

TEST_CASE("report JSON") {
  auto nodal = make_ring({"x", "y"}, {"x*y"});
  auto j = is_regular_sequence(elems(nodal, {"x", "y"})).to_json();
  CHECK(j["verdict"] == false);
  CHECK(j["failing_index"] == 1);
  CHECK(j["elements"].size() == 2);
  CHECK(j["conditions"][0]["witness"].size() == 2);
}
