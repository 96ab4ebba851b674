#include <doctest.h>

#include "gdm/group.hpp"
#include "test_support.hpp"

using namespace gdm;

TEST_CASE("modular addition wraps") {
  auto z3 = GroupDescriptor::cyclic(3);
  auto a = make_element(z3, {2});
  CHECK(add(a, a) == make_element(z3, {1}));
}

TEST_CASE("integer addition cancels") {
  auto z = GroupDescriptor::integers();
  CHECK(add(make_element(z, {5}), make_element(z, {-5})) == zero(z));
}

TEST_CASE("vector addition is componentwise") {
  auto z22 = GroupDescriptor::vector_mod(2, 2);
  auto a = make_element(z22, {1, 0});
  auto b = make_element(z22, {1, 1});
  CHECK(add(a, b) == make_element(z22, {0, 1}));
}

TEST_CASE("negate") {
  auto z4 = GroupDescriptor::cyclic(4);
  CHECK(negate(make_element(z4, {3})) == make_element(z4, {1}));
  auto z = GroupDescriptor::integers();
  CHECK(negate(zero(z)) == zero(z));
  auto z2 = GroupDescriptor::cyclic(2);
  CHECK(negate(make_element(z2, {1})) == make_element(z2, {1}));
}

TEST_CASE("is_zero") {
  auto z3 = GroupDescriptor::cyclic(3);
  CHECK(is_zero(zero(z3)));
  auto z22 = GroupDescriptor::vector_mod(2, 2);
  CHECK_FALSE(is_zero(make_element(z22, {0, 1})));
  auto z = GroupDescriptor::integers();
  CHECK_FALSE(is_zero(make_element(z, {-7})));
}

TEST_CASE("sum folds from zero") {
  auto z3 = GroupDescriptor::cyclic(3);
  auto one3 = make_element(z3, {1});
  CHECK(is_zero(sum(z3, {one3, one3, one3})));
  auto z2 = GroupDescriptor::cyclic(2);
  auto one2 = make_element(z2, {1});
  CHECK(sum(z2, {one2, one2, one2}) == one2);
  auto z = GroupDescriptor::integers();
  CHECK(sum(z, {}) == zero(z));
}

TEST_CASE("descriptor mismatch is rejected") {
  auto z2 = GroupDescriptor::cyclic(2);
  auto z3 = GroupDescriptor::cyclic(3);
  CHECK_THROWS_AS(add(make_element(z2, {1}), make_element(z3, {1})), std::invalid_argument);
}

TEST_CASE("descriptor validation") {
  CHECK_THROWS_AS(GroupDescriptor::cyclic(1), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::vector_mod(4, 2), std::invalid_argument);
  CHECK_THROWS_AS(GroupDescriptor::product({}), std::invalid_argument);
  CHECK_THROWS_AS(make_element(GroupDescriptor::cyclic(3), {1, 2}), std::invalid_argument);
}

TEST_CASE("integer overflow fails hard") {
  auto z = GroupDescriptor::integers();
  auto big = make_element(z, {INT64_MAX});
  CHECK_THROWS_AS(add(big, big), std::overflow_error);
}

TEST_CASE("group laws on random triples") {
  gdmtest::Rng rng(7101);
  std::vector<GroupDescriptorPtr> groups = {
      GroupDescriptor::integers(), GroupDescriptor::cyclic(2), GroupDescriptor::cyclic(5),
      GroupDescriptor::vector_mod(3, 2),
      GroupDescriptor::product({GroupDescriptor::cyclic(4), GroupDescriptor::integers()})};
  for (const auto& desc : groups) {
    for (int trial = 0; trial < 200; ++trial) {
      auto a = gdmtest::random_element(rng, desc, 0.2);
      auto b = gdmtest::random_element(rng, desc, 0.2);
      auto c = gdmtest::random_element(rng, desc, 0.2);
      CHECK(add(add(a, b), c) == add(a, add(b, c)));
      CHECK(add(a, b) == add(b, a));
      CHECK(is_zero(add(a, negate(a))));
    }
  }
}

TEST_CASE("order annihilates in finite groups") {
  gdmtest::Rng rng(7102);
  auto z6 = GroupDescriptor::cyclic(6);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = gdmtest::random_element(rng, z6, 0.1);
    CHECK(is_zero(sum(z6, std::vector<GroupElement>(6, a))));
  }
  auto z32 = GroupDescriptor::vector_mod(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    auto a = gdmtest::random_element(rng, z32, 0.1);
    CHECK(is_zero(sum(z32, std::vector<GroupElement>(3, a))));
  }
}

TEST_CASE("product slots flatten factor slots") {
  auto d = GroupDescriptor::product(
      {GroupDescriptor::vector_mod(2, 2), GroupDescriptor::integers()});
  CHECK(d->slots() == std::vector<long long>{2, 2, 0});
  auto e = make_element(d, {3, 1, -4});
  CHECK(e.v == std::vector<long long>{1, 1, -4});
}
