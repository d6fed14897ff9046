#include "doctest.h"

#include <random>

#include "jaccomb/abel.hpp"
#include "jaccomb/classification.hpp"

#include "helpers.hpp"

using namespace jaccomb;
using jaccomb::testing::error_code_of;

namespace {

Polarization pol(std::vector<const char*> texts) {
  std::vector<Rat> q;
  for (auto* t : texts) q.push_back(parse_rational(t));
  return Polarization(std::move(q));
}

// Canonical degree-0 polarization of the cycle curve: ((n-1)/n, ..., -(n-1)^2/n).
Polarization canonical_cycle(int n) {
  std::vector<Rat> q;
  for (int i = 0; i + 1 < n; ++i) q.push_back(make_rat(n - 1, n));
  q.push_back(make_rat(-(n - 1) * (n - 1), n));
  return Polarization(std::move(q));
}

// Triangle with a tail: cycle block {C1,C2,C3} plus a bridge to C4.
CurveGraph tailed_triangle() {
  return CurveGraph(
      {{"C1", 0}, {"C2", 0}, {"C3", 0}, {"C4", 0}},
      {{0, 1, 1, 0}, {1, 0, 1, 0}, {1, 1, 0, 1}, {0, 0, 1, 0}},
      std::vector<PointRecord>{{{0, 1}}, {{0, 2}}, {{1, 2}}, {{2, 3}}});
}

// The per-point form of the twist test: every singular point p and every
// biconnected proper subcurve y must satisfy d_y - [p meets y] > q_y - delta_y/2.
// Equivalent to the worst-case form because every component carries a point.
bool per_point_admissible(const CurveGraph& g, const Polarization& q, const Multidegree& d) {
  auto biconn = biconnected_subcurves(g);
  for (const PointRecord& p : g.points()) {
    for (Subcurve y : biconn) {
      long long hit = 0;
      for (int c : p.on)
        if (y.contains(c)) {
          hit = 1;
          break;
        }
      Rat lhs(static_cast<long>(degree_of(d, y) - hit));
      if (!(lhs > q_of(q, y) - make_rat(delta(g, y), 2))) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("cycle curves at the canonical polarization admit the expected twist") {
  for (int n = 2; n <= 5; ++n) {
    auto g = cycle_curve(n);
    auto r = abel_admissible(g, canonical_cycle(n));
    CAPTURE(n);
    CHECK(r.admissible);
    REQUIRE(r.witness.has_value());
    Multidegree expect(static_cast<std::size_t>(n), 1);
    expect.back() = -(n - 2);
    CHECK(*r.witness == expect);
    CHECK(twist_is_admissible(g, canonical_cycle(n), *r.witness));
  }
}

TEST_CASE("the other triangle class admits no Abel map") {
  auto g = cycle_curve(3);
  auto r = abel_admissible(g, pol({"1/3", "1/3", "-2/3"}));
  CHECK_FALSE(r.admissible);
  CHECK_FALSE(r.witness.has_value());
  CHECK_FALSE(twist_is_admissible(g, pol({"1/3", "1/3", "-2/3"}), {1, 1, -1}));
}

TEST_CASE("single components are always admissible") {
  auto g = cycle_curve(1);
  auto r = abel_admissible(g, pol({"4"}));
  CHECK(r.admissible);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == Multidegree{5});
  CHECK(twist_is_admissible(g, pol({"4"}), {5}));
}

TEST_CASE("admissibility requires a general polarization") {
  CHECK(error_code_of([&] { abel_admissible(cycle_curve(2), pol({"0", "0"})); }) ==
        errc::not_general);
}

TEST_CASE("the twist test enforces the degree bookkeeping") {
  auto g = cycle_curve(3);
  auto q = canonical_cycle(3);
  CHECK(error_code_of([&] { twist_is_admissible(g, q, {1, 1, 0}); }) == errc::degree_mismatch);
  CHECK(error_code_of([&] { twist_is_admissible(g, q, {1, 1}); }) == errc::invalid_input);
}

TEST_CASE("a separating point incident to three components is rejected") {
  CurveGraph g({{"C1", 0}, {"C2", 0}, {"C3", 0}}, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}},
               std::vector<PointRecord>{{{0, 1, 2}}});
  auto q = pol({"2/3", "2/3", "-4/3"});
  REQUIRE(is_general(g, q));
  CHECK(error_code_of([&] { abel_admissible(g, q); }) == errc::dagger_violation);
}

TEST_CASE("blockwise admissibility is the AND over blocks") {
  auto g = tailed_triangle();

  // The triangle block inherits (1/3, 1/3, -2/3): inadmissible overall.
  auto bad = pol({"1/3", "1/3", "-2/3", "0"});
  REQUIRE(is_general(g, bad));
  auto rb = abel_admissible(g, bad);
  CHECK_FALSE(rb.admissible);

  // The triangle block inherits (2/3, 2/3, -4/3): admissible, and the witness
  // stitches the block witnesses together (one extra unit per block).
  auto good = pol({"2/3", "2/3", "-4/3", "0"});
  REQUIRE(is_general(g, good));
  auto rg = abel_admissible(g, good);
  CHECK(rg.admissible);
  REQUIRE(rg.witness.has_value());
  CHECK(*rg.witness == Multidegree{1, 1, -1, 1});
  CHECK(total_degree(*rg.witness) == 2);  // |q| plus one unit for each of the two blocks
  CHECK(twist_is_admissible(g, good, *rg.witness));
  // Starving one block while feeding another is a bookkeeping error, not a
  // mere failure: each block restriction owes exactly one extra unit.
  CHECK(error_code_of([&] { twist_is_admissible(g, good, {1, 1, -1, 0}); }) ==
        errc::degree_mismatch);
  // Correct per-block totals against the inadmissible class simply fail.
  CHECK_FALSE(twist_is_admissible(g, bad, {1, 1, -1, 1}));
}

TEST_CASE("polarization_for_twist reproduces hand values") {
  auto g3 = cycle_curve(3);
  auto q = polarization_for_twist(g3, {1, 1, -1});
  CHECK(q.entries() == std::vector<Rat>{make_rat(2, 3), make_rat(2, 3), make_rat(-4, 3)});

  auto g1 = cycle_curve(1);
  CHECK(polarization_for_twist(g1, {5}).entries() == std::vector<Rat>{Rat(4)});
}

TEST_CASE("polarization_for_twist round-trips on a block tree") {
  CurveGraph g(
      {{"C1", 0}, {"C2", 0}, {"C3", 0}, {"C4", 0}},
      {{0, 2, 0, 0}, {2, 0, 1, 0}, {0, 1, 0, 2}, {0, 0, 2, 0}},
      std::vector<PointRecord>{{{0, 1}}, {{0, 1}}, {{1, 2}}, {{2, 3}}, {{2, 3}}});
  Multidegree d{1, 0, 1, 0};
  auto q = polarization_for_twist(g, d);
  CHECK(q.entries() ==
        std::vector<Rat>{make_rat(1, 2), make_rat(-1, 2), make_rat(1, 2), make_rat(-1, 2)});
  CHECK(is_general(g, q));
  CHECK(twist_is_admissible(g, q, d));
  auto r = abel_admissible(g, q);
  CHECK(r.admissible);
  REQUIRE(r.witness.has_value());
  CHECK(*r.witness == d);  // d is the lex-least admissible twist here
}

TEST_CASE("admissible_classes annotates every class") {
  auto g3 = cycle_curve(3);
  auto classes = admissible_classes(g3, classify(g3, 0, 3));
  REQUIRE(classes.size() == 2);
  REQUIRE(classes[0].abel_admissible.has_value());
  REQUIRE(classes[1].abel_admissible.has_value());
  // Exactly one class carries the Abel map: the one whose signature matches
  // the canonical polarization.
  int admissible = 0;
  for (const auto& c : classes) {
    if (*c.abel_admissible) {
      ++admissible;
      CHECK(c.signature == signature_of(g3, canonical_cycle(3)));
      REQUIRE(c.abel_witness.has_value());
      CHECK(twist_is_admissible(g3, c.representative, *c.abel_witness));
    } else {
      CHECK_FALSE(c.abel_witness.has_value());
    }
  }
  CHECK(admissible == 1);

  // Two-component curves: every class admits the Abel map.
  std::vector<PointRecord> recs{{{0, 1}}, {{0, 1}}, {{0, 1}}};
  CurveGraph g2({{"C1", 0}, {"C2", 0}}, {{0, 3}, {3, 0}}, recs);
  auto classes2 = admissible_classes(g2, classify(g2, 0, default_grid_denominator(g2)));
  REQUIRE_FALSE(classes2.empty());
  for (const auto& c : classes2) {
    REQUIRE(c.abel_admissible.has_value());
    CHECK(*c.abel_admissible);
  }
}

TEST_CASE("admissibility and witnesses translate along integral shifts") {
  auto g = cycle_curve(3);
  auto q = canonical_cycle(3);
  Multidegree e{1, -2, 1};
  auto qs = jaccomb::testing::shifted(q, e);
  auto base = abel_admissible(g, q);
  auto moved = abel_admissible(g, qs);
  CHECK(base.admissible == moved.admissible);
  REQUIRE(moved.witness.has_value());
  CHECK(*moved.witness == jaccomb::testing::shifted(*base.witness, e));

  auto bad = pol({"1/3", "1/3", "-2/3"});
  CHECK(abel_admissible(g, jaccomb::testing::shifted(bad, e)).admissible ==
        abel_admissible(g, bad).admissible);
}

TEST_CASE("the worst-case twist test equals the per-point quantification") {
  std::mt19937_64 rng(20260812);
  jaccomb::testing::RandomCurveOptions opt;
  opt.max_gamma = 5;
  opt.bridgeless = true;
  for (int iter = 0; iter < 30; ++iter) {
    auto g = jaccomb::testing::random_curve(rng, opt);
    REQUIRE(separating_points(g).empty());
    auto q = jaccomb::testing::random_general(rng, g);
    long long want = to_longlong(q.total()) + 1;
    for (int trial = 0; trial < 25; ++trial) {
      auto d = jaccomb::testing::random_multidegree(rng, g.gamma(), -2, 3);
      d[0] += want - total_degree(d);
      CAPTURE(iter);
      CAPTURE(trial);
      CHECK(twist_is_admissible(g, q, d) == per_point_admissible(g, q, d));
    }
  }
}
