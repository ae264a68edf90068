#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "classical_bracket.hpp"
#include "fvj/closure.hpp"
#include "fvj/cover_oracle.hpp"
#include "fvj/diagram.hpp"
#include "fvj/errors.hpp"
#include "fvj/flat_value.hpp"
#include "fvj/state_sum.hpp"
#include "sweep_word.hpp"

namespace fvj {
namespace {

using testing::WordShape;

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> terms(0, 4), exp(-6, 6), coef(-5, 5);
  LaurentPoly p;
  for (int i = terms(rng); i > 0; --i) p.add_term(exp(rng), coef(rng));
  return p;
}

WordShape random_shape(std::mt19937_64& rng, bool torus) {
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  WordShape s;
  if (torus) {
    s.surface = SurfaceSpec::torus(pick(2, 5), pick(2, 5));
    s.m1 = pick(0, 3);
    s.m2 = pick(0, 3);
  } else {
    s.surface = SurfaceSpec::cylinder(pick(2, 6));
    s.m1 = pick(0, 4);
  }
  s.crossings = pick(0, 7);
  return s;
}

StateSumOptions serial_opts() {
  StateSumOptions o;
  o.jobs = 1;
  return o;
}

TEST(LaurentRing, Axioms) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ(x + LaurentPoly{}, x);
    EXPECT_EQ(x * LaurentPoly::constant(1), x);
    EXPECT_TRUE((x - x).is_zero());
    EXPECT_EQ(x.shifted(3).shifted(-3), x);
  }
}

TEST(NormalizeCensus, ExtraCircleMultipliesByLoopFactor) {
  for (std::int64_t t = 0; t < 6; ++t)
    for (std::int64_t e = 0; e < 4; ++e) {
      if (t + e == 0) continue;
      EXPECT_EQ(normalize_census({t + 1, e}), fv_scale(loop_factor(), normalize_census({t, e})));
    }
}

TEST(FlatValueJson, RoundTrip) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    FlatValue v;
    for (int g = 0; g < 3; ++g) v.add(g, random_poly(rng));
    if (i % 17 == 0) v.add(1, LaurentPoly::monomial(BigInt(1) << 100, -7));
    EXPECT_EQ(parse_flat_value_json(render(v, Format::json)), v);
  }
}

TEST(DiagramModel, SerializeParseRoundTrip) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    ASSERT_TRUE(validate(t).empty()) << serialize(t);
    EXPECT_EQ(parse_tangle(serialize(t)), t);
  }
}

TEST(DiagramModel, MirrorNegatesWrithe) {
  std::mt19937_64 rng(14);
  for (int i = 0; i < 200; ++i) {
    const auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    const auto m = mirror(t);
    EXPECT_TRUE(validate(m).empty());
    EXPECT_EQ(writhe(m), -writhe(t));
    EXPECT_EQ(mirror(m), t);
  }
}

TEST(DiagramModel, MirrorInvertsVariable) {
  std::mt19937_64 rng(15);
  for (int i = 0; i < 60; ++i) {
    const auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    const auto lhs = flat_bracket(mirror(t), serial_opts());
    const auto base = flat_bracket(t, serial_opts());
    FlatValue rhs;
    for (const auto& [g, p] : base.entries()) {
      LaurentPoly q;
      for (const auto& [k, c] : p.terms()) q.add_term(-k, c);
      rhs.add(g, q);
    }
    EXPECT_EQ(lhs, rhs) << serialize(t);
  }
}

// Random edits of a valid document: validate must be empty exactly when
// parse_tangle accepts.
TEST(DiagramModel, ValidateAgreesWithParse) {
  std::mt19937_64 rng(16);
  int rejected = 0;
  for (int i = 0; i < 300; ++i) {
    auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    std::uniform_int_distribution<int> what(0, 3);
    switch (what(rng)) {
      case 0:
        if (!t.crossings.empty()) t.crossings.front().slots[1] = t.crossings.front().slots[0];
        break;
      case 1:
        if (!t.right.empty()) t.right.front().dir = t.right.front().dir == EndDirection::in ? EndDirection::out : EndDirection::in;
        break;
      case 2:
        if (!t.crossings.empty()) t.crossings.back().over_in = 4 - t.crossings.back().over_in;
        break;
      default: break;
    }
    const auto text = serialize(t);
    const bool valid = validate(parse_tangle_syntax(text)).empty();
    bool parsed = true;
    try {
      parse_tangle(text);
    } catch (const InvalidTangle&) {
      parsed = false;
    }
    EXPECT_EQ(valid, parsed) << text;
    rejected += !valid;
  }
  EXPECT_GT(rejected, 50);
}

TEST(ClassicalLimit, MatchesTextbookBracket) {
  std::mt19937_64 rng(17);
  for (const auto& t : {testing::left_trefoil(), testing::right_trefoil(), testing::figure_eight(), testing::hopf_link()})
    EXPECT_EQ(flat_jones(t, serial_opts()), testing::as_flat_value(testing::textbook_jones(t)));
  for (int i = 0; i < 80; ++i) {
    WordShape s;
    s.crossings = std::uniform_int_distribution<int>(1, 8)(rng);
    const auto t = testing::realize_random_orientation(testing::random_word(s, rng), rng);
    EXPECT_EQ(flat_jones(t, serial_opts()), testing::as_flat_value(testing::textbook_jones(t))) << serialize(t);
  }
}

TEST(StateSum, ParallelEqualsSerial) {
  std::mt19937_64 rng(18);
  for (int i = 0; i < 60; ++i) {
    const auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    StateSumOptions par;
    par.jobs = 4;
    par.record_states = true;
    StateSumOptions ser = par;
    ser.jobs = 1;
    const auto a = evaluate_states(t, par);
    const auto b = evaluate_states_serial(t, ser);
    EXPECT_EQ(a.bracket, b.bracket);
    ASSERT_EQ(a.states.size(), b.states.size());
    for (std::size_t k = 0; k < a.states.size(); ++k) {
      EXPECT_EQ(a.states[k].index, b.states[k].index);
      EXPECT_EQ(a.states[k].census, b.states[k].census);
    }
  }
}

TEST(Closure, ReductionOrderDoesNotMatter) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 80; ++i) {
    const bool torus = i % 2 == 1;
    const auto t = testing::realize(testing::random_word(random_shape(rng, torus), rng));
    StateResolver r(t);
    const auto total = std::uint64_t{1} << r.crossing_count();
    for (std::uint64_t s = 0; s < total; ++s) {
      SmoothedState ss;
      r.resolve(s, ss);
      auto chooser = [&](std::size_t count) { return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng); };
      if (torus)
        EXPECT_EQ(reduce_torus(ss), reduce_torus(ss, chooser));
      else
        EXPECT_EQ(reduce_cylinder(ss), reduce_cylinder(ss, chooser));
    }
  }
}

TEST(CoverOracle, AgreesWithClassification) {
  std::mt19937_64 rng(20);
  for (int i = 0; i < 200; ++i) {
    const auto t = testing::realize_random_orientation(testing::random_word(random_shape(rng, i % 2 == 1), rng), rng);
    const auto report = oracle_check(t, serial_opts());
    EXPECT_TRUE(report.ok()) << serialize(t) << (report.ok() ? "" : report.mismatches.front().state + " " + report.mismatches.front().error);
  }
}

TEST(CoverOracle, SeamCrossingsMatchReducedCounts) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 60; ++i) {
    const auto t = testing::realize(testing::random_word(random_shape(rng, true), rng));
    StateResolver r(t);
    const auto total = std::uint64_t{1} << r.crossing_count();
    for (std::uint64_t s = 0; s < total; ++s) {
      SmoothedState ss;
      r.resolve(s, ss);
      const auto red = reduce_torus(ss);
      std::int64_t p = 0, q = 0;
      for (const auto& c : trace_components(ss, t.surface)) {
        p += std::llabs(c.homology.p);
        q += std::llabs(c.homology.q);
      }
      EXPECT_EQ(p, red.m1);
      EXPECT_EQ(q, red.m2);
    }
  }
}

TEST(CoverOracle, BlockIdentitiesOnFullRange) {
  for (int d1 = 1; d1 <= 12; ++d1)
    for (int d2 = 1; d2 <= 12; ++d2)
      for (int m1 = 1; m1 <= 12; ++m1)
        for (int m2 = 1; m2 <= 12; ++m2) ASSERT_TRUE(block_identities(d1, d2, m1, m2).ok) << d1 << d2 << m1 << m2;
}

TEST(Invariance, ReidemeisterMoves) {
  std::mt19937_64 rng(22);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  for (int i = 0; i < 40; ++i) {
    auto shape = random_shape(rng, i % 2 == 1);
    shape.crossings = pick(0, 4);
    shape.m1 = std::max(shape.m1, 1);
    const auto w = testing::random_word(shape, rng);
    const auto base = testing::jones_over_orientations(w);

    auto spot = [&](int span) {
      std::vector<std::size_t> ok;
      for (std::size_t at = 0; at <= w.events.size(); ++at)
        if (testing::strands_before(w, at) >= span) ok.push_back(at);
      return ok;
    };
    for (bool below : {false, true})
      for (bool over : {false, true}) {
        const auto at = spot(1)[static_cast<std::size_t>(pick(0, static_cast<int>(spot(1).size()) - 1))];
        const int pos = pick(0, testing::strands_before(w, at) - 1);
        EXPECT_EQ(testing::jones_over_orientations(testing::insert_kink(w, at, pos, below, over)), base);
      }
    if (const auto ok = spot(2); !ok.empty()) {
      const auto at = ok[static_cast<std::size_t>(pick(0, static_cast<int>(ok.size()) - 1))];
      const int pos = pick(0, testing::strands_before(w, at) - 2);
      EXPECT_EQ(testing::jones_over_orientations(testing::insert_r2(w, at, pos, pick(0, 1) == 1)), base);
    }
    if (const auto ok = spot(3); !ok.empty()) {
      const auto at = ok[static_cast<std::size_t>(pick(0, static_cast<int>(ok.size()) - 1))];
      const int pos = pick(0, testing::strands_before(w, at) - 3);
      std::array<int, 3> h{0, 1, 2};
      std::shuffle(h.begin(), h.end(), rng);
      const auto pair = testing::insert_r3(w, at, pos, h);
      EXPECT_EQ(testing::jones_over_orientations(pair.left), testing::jones_over_orientations(pair.right));
    }
  }
}

}  // namespace
}  // namespace fvj
