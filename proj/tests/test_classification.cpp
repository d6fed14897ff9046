#include "doctest.h"

#include <cstdlib>
#include <set>

#include "jaccomb/classification.hpp"

#include "helpers.hpp"

using namespace jaccomb;
using jaccomb::testing::error_code_of;

namespace {

CurveGraph two_components(long long k) {
  std::vector<PointRecord> recs;
  for (long long i = 0; i < k; ++i) recs.push_back({{0, 1}});
  return CurveGraph({{"C1", 0}, {"C2", 0}}, {{0, k}, {k, 0}}, std::move(recs));
}

}  // namespace

TEST_CASE("a single component has one class") {
  auto classes = classify(cycle_curve(1), 5, 7);
  REQUIRE(classes.size() == 1);
  CHECK(classes[0].signature == Signature{{0}});
  CHECK(classes[0].representative.total() == Int(5));
}

TEST_CASE("the triangle splits into exactly two classes") {
  auto g = cycle_curve(3);
  auto classes = classify(g, 0, 3);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0].signature == Signature{{0, 0, 0}, {0, 1, -1}, {1, 0, -1}});
  CHECK(classes[1].signature == Signature{{0, 0, 0}, {1, -1, 0}, {1, 0, -1}});
  for (const auto& c : classes) {
    CHECK(is_general(g, c.representative));
    CHECK(signature_of(g, c.representative) == c.signature);
    CHECK(c.representative.total() == Int(0));
  }
  CHECK(classes[0].signature < classes[1].signature);  // sorted output
}

TEST_CASE("cycle curve class counts at the natural grid") {
  CHECK(classify(cycle_curve(2), 0, 2).size() == 1);
  CHECK(classify(cycle_curve(3), 0, 3).size() == 2);
  CHECK(classify(cycle_curve(4), 0, 4).size() == 6);
}

TEST_CASE("two-component curves have a single class") {
  for (long long k : {2, 3}) {
    auto g = two_components(k);
    auto classes = classify(g, 0, default_grid_denominator(g));
    CAPTURE(k);
    CHECK(classes.size() == 1);
  }
}

TEST_CASE("signatures are normalized, stable under refinement, of size c(X)") {
  auto g = cycle_curve(4);
  auto classes = classify(g, 0, 4);
  for (const auto& c : classes) {
    REQUIRE_FALSE(c.signature.empty());
    CHECK(c.signature.front() == Multidegree{0, 0, 0, 0});
    CHECK(c.signature.size() == 4);  // c(I_4) = 4
    CHECK(std::is_sorted(c.signature.begin(), c.signature.end()));
  }
  CHECK(classification_stabilizes(g, 0, 4, 8));
}

TEST_CASE("classification_stabilizes on small cycles and refusal of bad pairs") {
  CHECK(classification_stabilizes(cycle_curve(2), 0, 2, 4));
  CHECK(classification_stabilizes(cycle_curve(3), 0, 3, 6));
  CHECK(error_code_of([] { classification_stabilizes(cycle_curve(3), 0, 3, 7); }) ==
        errc::invalid_input);
}

TEST_CASE("class counts do not depend on the total degree") {
  auto g = cycle_curve(3);
  std::set<std::size_t> sizes;
  for (long long total : {-1ll, 0ll, 1ll, 5ll}) {
    auto classes = classify(g, total, 3);
    sizes.insert(classes.size());
    for (const auto& c : classes) CHECK(c.representative.total() == Int(static_cast<long>(total)));
  }
  CHECK(sizes == std::set<std::size_t>{2});
}

TEST_CASE("signature_of requires a general polarization") {
  std::vector<Rat> zero{Rat(0), Rat(0)};
  CHECK(error_code_of([&] { signature_of(cycle_curve(2), Polarization(zero)); }) ==
        errc::not_general);
}

TEST_CASE("signature_of is invariant under integral translation") {
  auto g = cycle_curve(4);
  std::vector<Rat> entries{make_rat(1, 4), make_rat(1, 4), make_rat(1, 4), make_rat(-3, 4)};
  Polarization q(entries);
  auto base = signature_of(g, q);
  CHECK(signature_of(g, jaccomb::testing::shifted(q, {2, -1, 0, 3})) == base);
}

TEST_CASE("the scan result does not depend on the worker count") {
  auto g = cycle_curve(4);
  auto run_with = [&](const char* threads) {
    setenv("JACCOMB_THREADS", threads, 1);
    auto classes = classify(g, 0, 4);
    unsetenv("JACCOMB_THREADS");
    return classes;
  };
  auto one = run_with("1");
  auto three = run_with("3");
  auto eight = run_with("8");
  REQUIRE(one.size() == three.size());
  REQUIRE(one.size() == eight.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].signature == three[i].signature);
    CHECK(one[i].representative.entries() == three[i].representative.entries());
    CHECK(one[i].signature == eight[i].signature);
    CHECK(one[i].representative.entries() == eight[i].representative.entries());
  }
}

TEST_CASE("default grid denominators") {
  CHECK(default_grid_denominator(cycle_curve(1)) == 2);
  CHECK(default_grid_denominator(cycle_curve(2)) == 8);    // 2 * lcm(1,2) * delta 2
  CHECK(default_grid_denominator(cycle_curve(3)) == 24);   // 2 * 6 * 2
  CHECK(default_grid_denominator(two_components(3)) == 12);  // 2 * 2 * 3
}
