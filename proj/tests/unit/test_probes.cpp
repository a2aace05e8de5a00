#include <doctest.h>

#include "error.hpp"
#include "probes.hpp"

using namespace fillprobe;

namespace {

struct Group {
  GroupPresentation p;
  RewritingSystem rws;
  explicit Group(const char* src) : p(parse_presentation(src)), rws(knuth_bendix_bounded(p)) {}
};

const char* kFree = "a,b |";
const char* kGrid = "a,b | a b a^-1 b^-1";
const char* kSurface = "a1,a2,b1,b2 | a1 b1 a1^-1 b1^-1 a2 b2 a2^-1 b2^-1";

}  // namespace

TEST_CASE("growth fit examples") {
  auto linear = fit_growth({{4, 1}, {8, 2}, {12, 3}});
  CHECK(linear.growth == GrowthClass::kLinear);
  CHECK(linear.K == Rational(1, 4));
  CHECK(fit_growth({{4, 1}, {8, 4}, {12, 9}}).growth == GrowthClass::kQuadratic);
  auto zero = fit_growth({{1, 0}, {2, 0}, {3, 0}});
  CHECK(zero.growth == GrowthClass::kLinear);
  CHECK(zero.K == 0);
  CHECK(fit_growth({{2, 8}, {4, 64}, {6, 216}}).growth == GrowthClass::kSuperquadratic);
  CHECK_THROWS_AS(fit_growth(std::vector<std::pair<unsigned, Rational>>{}), Error);
}

TEST_CASE("exact multiples of k fit as linear with that constant") {
  for (Rational K : {Rational(1, 3), Rational(5, 2), Rational(7)}) {
    std::vector<std::pair<unsigned, Rational>> table;
    for (unsigned k = 1; k <= 12; ++k) table.emplace_back(k, K * k);
    auto fit = fit_growth(table);
    CHECK(fit.growth == GrowthClass::kLinear);
    CHECK(fit.K == K);
    CHECK(fit.residual == 0);
  }
}

TEST_CASE("free group table is zero") {
  Group f2(kFree);
  ProbeBudget budget;
  budget.k_max = 8;
  auto est = estimate_fv(f2.p, f2.rws, budget);
  REQUIRE(est.table.size() == 8);
  for (const auto& row : est.table) CHECK(row.value == 0);
  auto report = probe_hyperbolicity(f2.p, f2.rws, budget);
  CHECK(report.verdict == HyperbolicityVerdict::kConsistentWithHyperbolic);
  CHECK(report.fit.K == 0);
}

TEST_CASE("grid table and verdict") {
  Group z2(kGrid);
  ProbeBudget budget;
  budget.k_max = 8;
  auto est = estimate_fv(z2.p, z2.rws, budget);
  CHECK(est.mode == SamplingMode::kExhaustive);
  CHECK(est.table[3].value == 1);
  CHECK(est.table[7].value == 4);
  for (std::size_t i = 1; i < est.table.size(); ++i) {
    CHECK(est.table[i].value >= est.table[i - 1].value);
    CHECK(est.table[i].witness_length <= est.table[i].k);
  }
  auto report = probe_hyperbolicity(z2.p, z2.rws, budget);
  CHECK(report.verdict == HyperbolicityVerdict::kNonHyperbolicEvidence);
  REQUIRE(report.witness);
  CHECK(report.witness->value / report.witness->witness_length > Rational(1, 4));
}

TEST_CASE("a smaller radius cap never raises table values") {
  Group z2(kGrid);
  ProbeBudget wide, narrow;
  wide.k_max = narrow.k_max = 6;
  narrow.radius_cap = 4;
  auto a = estimate_fv(z2.p, z2.rws, wide);
  auto b = estimate_fv(z2.p, z2.rws, narrow);
  for (std::size_t i = 0; i < a.table.size(); ++i) CHECK(a.table[i].value <= b.table[i].value);
}

TEST_CASE("surface group relator loop") {
  Group g2(kSurface);
  ProbeBudget budget;
  budget.k_max = 8;
  auto est = estimate_fv(g2.p, g2.rws, budget);
  CHECK(est.table[7].value == 1);
  CHECK(est.table[6].value == 0);
  CHECK(est.max_relator_length == 8);
}

TEST_CASE("sampled mode is seeded") {
  Group z2(kGrid);
  ProbeBudget budget;
  budget.k_max = 8;
  budget.mode = SamplingMode::kSampled;
  budget.samples = 64;
  auto a = estimate_fv(z2.p, z2.rws, budget);
  auto b = estimate_fv(z2.p, z2.rws, budget);
  CHECK(a.mode == SamplingMode::kSampled);
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    CHECK(a.table[i].value == b.table[i].value);
    CHECK(a.table[i].witness == b.table[i].witness);
    CHECK(a.table[i].value <= Rational(a.table[i].k * a.table[i].k, 16) + 1);
  }
}

TEST_CASE("walk cap makes the verdict inconclusive") {
  Group z2(kGrid);
  ProbeBudget budget;
  budget.k_max = 8;
  budget.circuits.walk_cap = 10;
  auto report = probe_hyperbolicity(z2.p, z2.rws, budget);
  CHECK(report.verdict == HyperbolicityVerdict::kInconclusive);
  CHECK(report.estimate.capped);
}

TEST_CASE("a tiny vertex cap is reported, not thrown") {
  Group z2(kGrid);
  ProbeBudget budget;
  budget.k_max = 8;
  budget.ball.vertex_cap = 20;
  auto report = probe_hyperbolicity(z2.p, z2.rws, budget);
  CHECK(report.verdict == HyperbolicityVerdict::kInconclusive);
  CHECK(report.estimate.complex_radius == 2);
  CHECK_FALSE(report.estimate.cap_reason.empty());
}

TEST_CASE("probes refuse incomplete systems") {
  auto p = parse_presentation("a,t | t a t^-1 a^-1 a^-1");
  auto rws = knuth_bendix_bounded(p, {4, 64});
  CHECK_THROWS_AS(estimate_fv(p, rws), Error);
  CHECK_THROWS_AS(probe_amenability(p, rws, {2}), Error);
}

TEST_CASE("flow trend rule") {
  CHECK(classify_flow({1}) == FlowVerdict::kInconclusive);
  CHECK(classify_flow({1, 1, 1}) == FlowVerdict::kBoundedFlow);
  CHECK(classify_flow({1, 2, 3, 4}) == FlowVerdict::kGrowingFlow);
  CHECK(classify_flow({1, Rational(3, 2), Rational(7, 4), Rational(15, 8)}) == FlowVerdict::kBoundedFlow);
  CHECK(classify_flow({1, 3, 2, 4}) == FlowVerdict::kInconclusive);
}

TEST_CASE("free group flow stays at most one half") {
  Group f2(kFree);
  auto probe = probe_amenability(f2.p, f2.rws, {2, 3, 4});
  CHECK(probe.verdict == FlowVerdict::kBoundedFlow);
  for (const auto& row : probe.table) {
    REQUIRE(row.solved);
    CHECK(row.t <= Rational(1, 2));
  }
  CHECK(probe.table[0].t == Rational(5, 12));
}

TEST_CASE("grid flow grows") {
  Group z2(kGrid);
  auto probe = probe_amenability(z2.p, z2.rws, {2, 3, 4, 5});
  CHECK(probe.verdict == FlowVerdict::kGrowingFlow);
  for (std::size_t i = 1; i < probe.table.size(); ++i) CHECK(probe.table[i].t > probe.table[i - 1].t);
  auto single = probe_amenability(z2.p, z2.rws, {1});
  CHECK(single.verdict == FlowVerdict::kInconclusive);
  CHECK_THROWS_AS(probe_amenability(z2.p, z2.rws, {0, 2}), Error);
}

TEST_CASE("flow witnesses meet their demands") {
  Group z2(kGrid);
  auto probe = probe_amenability(z2.p, z2.rws, {3});
  auto x = attach_cells(build_ball(z2.p, z2.rws, 3), z2.p);
  auto net = apply(x.d1, probe.table[0].witness, 0);
  for (std::size_t v = 0; v < x.ball.vertex_count(); ++v)
    if (x.ball.depth[v] < 3) CHECK(net.coefficient(v) == 1);
  Rational biggest = 0;
  for (const auto& [e, q] : probe.table[0].witness.entries()) biggest = std::max(biggest, abs_value(q));
  CHECK(biggest == probe.table[0].t);
}

TEST_CASE("worker count does not change results") {
  Group z2(kGrid);
  ProbeBudget one, many;
  one.k_max = many.k_max = 8;
  many.workers = 4;
  auto a = estimate_fv(z2.p, z2.rws, one);
  auto b = estimate_fv(z2.p, z2.rws, many);
  for (std::size_t i = 0; i < a.table.size(); ++i) {
    CHECK(a.table[i].value == b.table[i].value);
    CHECK(a.table[i].witness == b.table[i].witness);
  }
}
