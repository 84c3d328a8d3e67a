#include "bsfold/rootsys.hpp"

#include "doctest.h"
#include "test_util.hpp"

using namespace bsfold;

namespace {

Root rv(const RootSystem& rs, std::initializer_list<std::int64_t> coeffs) {
  LVector v(rs.rank());
  int i = 0;
  for (auto c : coeffs) v[i++] = c;
  return Root(v);
}

// Independent orbit-closure count: depth-first over reflections with a
// linear-scan set, not sharing the builder's code path.
size_t orbit_positive_count(const RootSystem& rs) {
  std::vector<Root> found;
  auto seen = [&](const Root& r) {
    for (const Root& f : found)
      if (f == r) return true;
    return false;
  };
  std::vector<Root> queue;
  for (int i = 1; i <= rs.rank(); ++i) {
    queue.push_back(rs.simple_root(i));
    found.push_back(rs.simple_root(i));
  }
  while (!queue.empty()) {
    Root r = queue.back();
    queue.pop_back();
    for (int i = 1; i <= rs.rank(); ++i) {
      Root img = reflect(rs, i, r);
      if (!seen(img)) {
        found.push_back(img);
        queue.push_back(img);
      }
    }
  }
  size_t positive = 0;
  for (const Root& r : found)
    if (r.is_positive()) ++positive;
  return positive;
}

}  // namespace

TEST_CASE("positive roots of small systems") {
  auto a2 = RootSystem::build(Family::A, 2);
  REQUIRE(a2.positive_roots().size() == 3);
  CHECK(a2.is_positive_root(rv(a2, {1, 0})));
  CHECK(a2.is_positive_root(rv(a2, {0, 1})));
  CHECK(a2.is_positive_root(rv(a2, {1, 1})));

  auto a1 = RootSystem::build(Family::A, 1);
  CHECK(a1.positive_roots().size() == 1);

  auto g2 = RootSystem::build(Family::G, 2);
  CHECK(g2.positive_roots().size() == 6);
}

TEST_CASE("positive root counts match the classical values") {
  struct Row {
    Family f;
    int rank;
    size_t count;
  };
  const Row rows[] = {{Family::A, 3, 6},  {Family::A, 4, 10}, {Family::B, 2, 4},
                      {Family::B, 3, 9},  {Family::C, 2, 4},  {Family::C, 3, 9},
                      {Family::D, 4, 12}, {Family::D, 5, 20}, {Family::F, 4, 24},
                      {Family::G, 2, 6},  {Family::E, 6, 36}, {Family::E, 7, 63},
                      {Family::E, 8, 120}};
  for (const Row& row : rows) {
    auto rs = RootSystem::build(row.f, row.rank);
    CHECK(rs.positive_roots().size() == row.count);
    CHECK(orbit_positive_count(rs) == row.count);
  }
}

TEST_CASE("invalid family/rank pairs are rejected") {
  CHECK_THROWS_AS(RootSystem::build(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(RootSystem::build(Family::A, 9), std::invalid_argument);
}

TEST_CASE("simple reflections on A2") {
  auto rs = RootSystem::build(Family::A, 2);
  CHECK(reflect(rs, 1, rv(rs, {1, 0})) == rv(rs, {-1, 0}));
  CHECK(reflect(rs, 1, rv(rs, {0, 1})) == rv(rs, {1, 1}));
  CHECK(reflect(rs, 2, rv(rs, {1, 1})) == rv(rs, {1, 0}));
  CHECK_THROWS_AS(reflect(rs, 3, rv(rs, {1, 0})), std::out_of_range);
}

TEST_CASE("words, products and inverses") {
  auto rs = RootSystem::build(Family::A, 2);
  CHECK(weyl_from_word(rs, {}).is_identity());
  CHECK(weyl_from_word(rs, {1, 1}).is_identity());
  CHECK(weyl_from_word(rs, {1, 2, 1}) == weyl_from_word(rs, {2, 1, 2}));

  CHECK(weyl_apply(weyl_identity(rs), rs.simple_root(1)) == rs.simple_root(1));
  // The product acts by composition, so the right factor acts first:
  // (s2 s1)(alpha2) = s2(s1(alpha2)) = alpha1.
  CHECK(weyl_apply(weyl_from_word(rs, {2, 1}), rs.simple_root(2)) == rs.simple_root(1));
  CHECK(weyl_apply(weyl_from_word(rs, {1, 2}), rs.simple_root(2)) == rv(rs, {-1, -1}));

  std::mt19937_64 rng(testutil::env_seed(11));
  auto shared = testutil::shared_system(Family::A, 2);
  for (int trial = 0; trial < 30; ++trial) {
    WeylElt w = weyl_from_word(rs, testutil::random_word(rng, shared, 6));
    CHECK(weyl_mul(w, weyl_inv(w)).is_identity());
  }
}

TEST_CASE("Weyl group permutes the roots") {
  for (Family f : {Family::A, Family::B}) {
    auto shared = testutil::shared_system(f, 3);
    const RootSystem& rs = *shared;
    std::mt19937_64 rng(testutil::env_seed(12));
    for (int trial = 0; trial < 20; ++trial) {
      WeylElt w = weyl_from_word(rs, testutil::random_word(rng, shared, 7));
      for (const Root& alpha : rs.positive_roots()) CHECK(rs.is_root(weyl_apply(w, alpha)));
    }
  }
}

TEST_CASE("reflection identities") {
  auto shared = testutil::shared_system(Family::B, 3);
  const RootSystem& rs = *shared;
  std::mt19937_64 rng(testutil::env_seed(13));
  for (int trial = 0; trial < 25; ++trial) {
    LVector v(rs.rank());
    for (int i = 0; i < rs.rank(); ++i) v[i] = rand_int(rng, -4, 4);
    for (int i = 1; i <= rs.rank(); ++i)
      CHECK(reflect(rs, i, reflect(rs, i, Root(v))) == Root(v));

    // s_{w alpha} = w s_alpha w^{-1}
    WeylElt w = weyl_from_word(rs, testutil::random_word(rng, shared, 6));
    const auto& pos = rs.positive_roots();
    const Root& alpha =
        pos[static_cast<size_t>(rand_int(rng, 0, static_cast<std::int64_t>(pos.size()) - 1))];
    WeylElt lhs = root_reflection(rs, weyl_apply(w, alpha));
    WeylElt rhs = weyl_mul(weyl_mul(w, root_reflection(rs, alpha)), weyl_inv(w));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("simply laced classification") {
  CHECK(RootSystem::build(Family::A, 3).is_simply_laced());
  CHECK_FALSE(RootSystem::build(Family::B, 2).is_simply_laced());
  CHECK(RootSystem::build(Family::D, 4).is_simply_laced());
  CHECK(RootSystem::build({{Family::A, 2}, {Family::D, 4}}).is_simply_laced());
  CHECK_FALSE(RootSystem::build({{Family::A, 2}, {Family::C, 3}}).is_simply_laced());
}

TEST_CASE("products of components") {
  auto rs = RootSystem::build({{Family::A, 1}, {Family::A, 1}});
  CHECK(rs.rank() == 2);
  CHECK(rs.positive_roots().size() == 2);
  CHECK(rs.cartan()(0, 1) == 0);
  CHECK(weyl_apply(simple_reflection(rs, 1), rs.simple_root(2)) == rs.simple_root(2));
}

TEST_CASE("root formatting") {
  auto b2 = RootSystem::build(Family::B, 2);
  CHECK(b2.format_root(rv(b2, {1, 2})) == "a1+2*a2");
  CHECK(b2.format_root(rv(b2, {-1, 0})) == "-a1");
  CHECK(b2.format_root(rv(b2, {0, 0})) == "0");
}
