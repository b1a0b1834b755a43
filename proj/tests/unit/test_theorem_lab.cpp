#include "doctest.h"
#include "samuel/errors.hpp"
#include "samuel/theorem_lab.hpp"

using namespace samuel;

namespace {

LocalRingPtr make_ring(std::vector<std::string> vars, std::vector<std::string> relations) {
  auto ambient = PolyRing::make(std::move(vars));
  std::vector<Polynomial> rel;
  for (const auto& r : relations) rel.push_back(parse_polynomial(r, ambient));
  return LocalRing::make(ambient, std::move(rel));
}

std::vector<RingElement> elems(const LocalRingPtr& R, std::vector<std::string> gens) {
  std::vector<RingElement> out;
  for (const auto& s : gens) out.push_back(R->parse_element(s));
  return out;
}

std::vector<Polynomial> polys(const LocalRingPtr& R, std::vector<std::string> gens) {
  std::vector<Polynomial> out;
  for (const auto& s : gens) out.push_back(parse_polynomial(s, R->ambient()));
  return out;
}

LocalRingPtr polynomial_ring(int d) {
  std::vector<std::string> v;
  for (int i = 1; i <= d; ++i) v.push_back("x" + std::to_string(i));
  return make_ring(v, {});
}

long choose(long a, long m) {
  if (m < 0 || a < m) return 0;
  long r = 1;
  for (long i = 1; i <= m; ++i) r = r * (a - m + i) / i;
  return r;
}

}  // namespace

TEST_CASE("colon formula against the fitted top coefficient") {
  auto S3 = make_ring({"x", "y", "z"}, {});
  auto f = ed_colon_formula(S3->maximal_ideal(), elems(S3, {"x", "y", "z"}));
  CHECK(f.value == 0);
  CHECK(f.unmet.empty());

  auto planes = make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
  auto ys = elems(planes, {"x - u", "y - v"});
  auto Q = planes->ideal(std::span<const RingElement>(ys));
  auto g = ed_colon_formula(Q, ys);
  auto fit = fit_coefficients(hilbert_samuel_table(Q, 10), 2);
  CHECK(g.unmet.empty());
  CHECK(g.value == fit.e[2]);

  auto cubic = make_ring({"x", "y"}, {"y^3"});
  CHECK_THROWS_AS(ed_colon_formula(cubic->ideal(polys(cubic, {"x"})), elems(cubic, {"x"})), InvalidArgument);
}

TEST_CASE("colon formula reports a missing reduction") {
  auto S2 = make_ring({"x", "y"}, {});
  auto ys = elems(S2, {"x", "y^2"});
  auto f = ed_colon_formula(S2->maximal_ideal(), ys);
  CHECK_FALSE(f.unmet.empty());
  CHECK(f.status == HypothesisStatus::Unmet);
}

TEST_CASE("lower bound surrogate") {
  auto planes = make_ring({"x", "y", "u", "v"}, {"x*u", "x*v", "y*u", "y*v"});
  CHECK(lower_bound_surrogate(planes, elems(planes, {"x - u", "y - v"})) == -1);
  auto S3 = make_ring({"x", "y", "z"}, {});
  CHECK(lower_bound_surrogate(S3, elems(S3, {"x", "y", "z"})) == 0);
  // x kills u, so it cannot start a regular sequence
  CHECK_THROWS_AS(lower_bound_surrogate(planes, elems(planes, {"x", "y - v"})), InvalidArgument);
}

TEST_CASE("idealization closed form") {
  CHECK(idealization_coeffs(4, 2, {1, 0, 0, 0, 0}, {1, 0, 0}) == std::vector<long>{1, 0, 1, 0, 0});
  CHECK(idealization_coeffs(5, 2, {1, 0, 0, 0, 0, 0}, {1, 0, 0}) == std::vector<long>{1, 0, 0, -1, 0, 0});
  CHECK(idealization_coeffs(3, 2, {1, 0, 0, 0}, {2, 5, 7}) == std::vector<long>{1, -2, -5, -7});
  CHECK_THROWS_AS(idealization_coeffs(3, 3, {1, 0, 0, 0}, {1, 0, 0, 0}), InvalidArgument);
  CHECK_THROWS_AS(idealization_coeffs(3, 0, {1, 0, 0, 0}, {1}), InvalidArgument);
  CHECK_THROWS_AS(idealization_coeffs(3, 1, {1, 0, 0}, {1, 0}), InvalidArgument);
}

TEST_CASE("idealization table is the sum of two binomial tables") {
  for (auto [d, t] : std::vector<std::pair<int, int>>{{3, 1}, {3, 2}, {4, 2}, {4, 3}}) {
    auto R = polynomial_ring(d);
    std::vector<std::string> q, p;
    for (int i = 1; i <= d; ++i) q.push_back("x" + std::to_string(i));
    for (int i = 1; i <= d - t; ++i) p.push_back("x" + std::to_string(i));
    auto report = idealization_cross_check(R, polys(R, p), polys(R, q), 2 * d + 4);
    for (int n = 1; n <= 2 * d + 4; ++n)
      CHECK(report.table[static_cast<std::size_t>(n)] == choose(n + d - 1, d) + choose(n + t - 1, t));
    REQUIRE(report.claims.size() == 1);
    CHECK(report.claims[0].verdict == Verdict::Verified);
  }
  auto R = polynomial_ring(3);
  CHECK_THROWS_AS(idealization_cross_check(R, {}, polys(R, {"x1", "x2", "x3"}), 10), InvalidArgument);
  CHECK_THROWS_AS(idealization_cross_check(R, polys(R, {"x1"}), polys(R, {"x1", "x2"}), 10), NoStabilization);
}

TEST_CASE("builtin corpus has no failures") {
  auto report = run_corpus(builtin_corpus());
  CHECK(report.instances.size() == 6);
  CHECK(report.count(Verdict::Failure) == 0);
  CHECK(report.errors() == 0);
  for (std::size_t i = 1; i < report.instances.size(); ++i)
    CHECK(report.instances[i - 1].name < report.instances[i].name);

  const TheoremReport* example = nullptr;
  for (const auto& r : report.instances)
    if (r.name == "example_depth1") example = &r;
  REQUIRE(example);
  const Claim* e3 = example->find("e3-nonpositive");
  REQUIRE(e3);
  CHECK(e3->verdict == Verdict::Skipped);
  CHECK(e3->values["e3"] == 3);

  CHECK(report.to_json().dump() == run_corpus(builtin_corpus()).to_json().dump());
}

TEST_CASE("corpus isolation and empty corpus") {
  auto empty = run_corpus("");
  CHECK(empty.instances.empty());
  CHECK(empty.to_json()["summary"]["failure"] == 0);

  const char* text =
      "instance bad\nvars x y\nideal Q = x\n\n"
      "instance good\nvars x y\nideal Q = x, y\nexpect e = 1,0,0\n";
  auto report = run_corpus(text);
  REQUIRE(report.instances.size() == 2);
  CHECK(report.errors() == 1);
  CHECK(report.instances[0].error_kind == std::string("InvalidArgument"));
  CHECK_FALSE(report.instances[1].error_kind);
  CHECK(report.count(Verdict::Failure) == 0);
}

TEST_CASE("wrong expectations are failures") {
  auto report = run_corpus("instance s\nvars x y\nideal Q = x, y\nexpect e = 1,0,1\n");
  CHECK(report.count(Verdict::Failure) == 1);
  CHECK(report.instances[0].find("expected-e")->verdict == Verdict::Failure);
  CHECK_THROWS_AS(CorpusInstance::from_spec(parse_corpus_file("instance s\nvars x\nideal Q = x\nexpect depth_class = x\n")[0]),
                  InvalidArgument);
}
