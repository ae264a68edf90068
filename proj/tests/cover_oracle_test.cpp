#include <gtest/gtest.h>

#include <cstdlib>
#include <stdexcept>

#include "classical_bracket.hpp"
#include "fvj/closure.hpp"
#include "fvj/cover_oracle.hpp"
#include "fvj/errors.hpp"

namespace fvj {
namespace {

SmoothedState state(int m1, int m2, std::initializer_list<std::pair<int, int>> pairs, std::int64_t loops = 0) {
  return make_smoothed_state({m1, m2}, pairs, loops);
}

// Cylinder slots: right i -> i, left i -> m + i (0-based).

TEST(TraceComponents, Cylinder) {
  const auto cyl = SurfaceSpec::cylinder(3);
  const auto one = trace_components(state(1, 0, {{0, 1}}), cyl);
  ASSERT_EQ(one.size(), 1U);
  EXPECT_EQ(std::llabs(one[0].homology.p), 1);
  EXPECT_EQ(one[0].homology.q, 0);
  EXPECT_EQ(one[0].cycle.size(), 2U);

  const auto turn = trace_components(state(2, 0, {{0, 1}, {2, 3}}), cyl);
  ASSERT_EQ(turn.size(), 1U);
  EXPECT_TRUE(turn[0].homology.is_null());

  const auto loops = trace_components(state(1, 0, {{0, 1}}, 2), cyl);
  ASSERT_EQ(loops.size(), 3U);
  EXPECT_TRUE(loops[1].cycle.empty());
  EXPECT_TRUE(loops[2].homology.is_null());
}

TEST(TraceComponents, SlashTwoTwo) {
  const auto comps = trace_components(slash_matching(2, 2, Chirality::slash), SurfaceSpec::torus(2, 2));
  ASSERT_EQ(comps.size(), 2U);
  for (const auto& c : comps) {
    EXPECT_EQ(std::llabs(c.homology.p), 1);
    EXPECT_EQ(std::llabs(c.homology.q), 1);
  }
  const auto& a = comps[0].homology;
  const auto& b = comps[1].homology;
  EXPECT_TRUE(a == b || (a.p == -b.p && a.q == -b.q));
}

TEST(TraceComponents, InconsistentClassesAreErrors) {
  // Strands swapping heights wind twice around the cylinder.
  EXPECT_THROW(trace_components(state(2, 0, {{0, 3}, {1, 2}}), SurfaceSpec::cylinder(3)), EmbeddingViolation);
  // Same matching on the torus: class (2, 0) is not primitive.
  EXPECT_THROW(trace_components(state(2, 0, {{0, 3}, {1, 2}}), SurfaceSpec::torus(3, 3)), EmbeddingViolation);
  // A horizontal and a vertical strand would have to cross.
  EXPECT_THROW(trace_components(state(1, 1, {{0, 2}, {1, 3}}), SurfaceSpec::torus(3, 3)), EmbeddingViolation);
  EXPECT_THROW(trace_components(state(1, 1, {{0, 2}, {1, 3}}), SurfaceSpec::cylinder(3)), std::invalid_argument);
}

TEST(OracleCensus, Examples) {
  EXPECT_EQ(oracle_census(state(1, 0, {{0, 1}}, 2), SurfaceSpec::torus(3, 5)), (ComponentCensus{3, 0}));
  EXPECT_EQ(oracle_census(state(1, 0, {{0, 1}}), SurfaceSpec::cylinder(2)), (ComponentCensus{0, 1}));
  EXPECT_EQ(oracle_census(state(1, 0, {{0, 1}}, 2), SurfaceSpec::cylinder(4)), (ComponentCensus{2, 1}));
  EXPECT_EQ(oracle_census(slash_matching(6, 9, Chirality::backslash), SurfaceSpec::torus(4, 8)), (ComponentCensus{0, 3}));
  EXPECT_EQ(oracle_census(state(0, 0, {}, 4), SurfaceSpec::torus(4, 8)), (ComponentCensus{4, 0}));
}

TEST(BlockIdentities, Examples) {
  const auto r = block_identities(4, 8, 6, 9);
  EXPECT_EQ(r.v1, 48);
  EXPECT_EQ(r.v2, 12);
  EXPECT_EQ(r.v3, 48);
  EXPECT_TRUE(r.ok);
  const auto s = block_identities(2, 2, 1, 1);
  EXPECT_EQ(s.v1, 2);
  EXPECT_EQ(s.v2, 1);
  EXPECT_EQ(s.v3, 2);
  for (int d = 1; d <= 7; ++d)
    for (int m = 1; m <= 7; ++m) {
      const auto sym = block_identities(d, d, m, m);
      EXPECT_EQ(sym.v1, d);
      EXPECT_EQ(sym.v3, d);
      EXPECT_EQ(sym.v2, 1);
    }
  EXPECT_THROW(block_identities(0, 1, 1, 1), std::invalid_argument);
}

TEST(OracleCheck, TorusLinksMatchGcdCounts) {
  for (int m1 = 1; m1 <= 6; ++m1)
    for (int m2 = 1; m2 <= 6; ++m2)
      for (int d1 = 2; d1 <= 5; ++d1)
        for (int d2 = 2; d2 <= 5; ++d2)
          for (auto c : {Chirality::slash, Chirality::backslash}) {
            const auto t = build_slash_tangle(m1, m2, c, SurfaceSpec::torus(d1, d2));
            StateSumOptions o;
            o.jobs = 1;
            ASSERT_TRUE(oracle_check(t, o).ok());
          }
}

TEST(OracleCheck, CorruptedClassifierIsCaught) {
  StateSumOptions o;
  o.jobs = 2;
  o.classifier = [](const SmoothedState& s, const SurfaceSpec& spec) {
    auto c = classify(s, spec);
    if (s.interior_loops == 3) ++c.trivial;
    return c;
  };
  const auto report = oracle_check(testing::right_trefoil(), o);
  ASSERT_EQ(report.mismatches.size(), 1U);
  const auto& m = report.mismatches.front();
  EXPECT_EQ(m.state, "111");
  EXPECT_EQ(m.state_index, 7U);
  EXPECT_EQ(m.exponent, -3);
  EXPECT_EQ(m.classified, (ComponentCensus{4, 0}));
  EXPECT_EQ(m.oracle, (ComponentCensus{3, 0}));
  EXPECT_TRUE(m.error.empty());
  EXPECT_EQ(report.states_checked, 8U);
}

TEST(OracleCheck, ThrowingClassifierIsRecorded) {
  StateSumOptions o;
  o.classifier = [](const SmoothedState&, const SurfaceSpec&) -> ComponentCensus { throw EmbeddingViolation("boom"); };
  const auto report = oracle_check(testing::figure_eight(), o);
  EXPECT_EQ(report.mismatches.size(), 16U);
  EXPECT_NE(report.mismatches.front().error.find("boom"), std::string::npos);
  for (std::size_t i = 0; i < report.mismatches.size(); ++i) EXPECT_EQ(report.mismatches[i].state_index, i);
}

}  // namespace
}  // namespace fvj
