#include <doctest.h>

#include "ordgame/derivation.hpp"
#include "ordgame/errors.hpp"
#include "support.hpp"

using namespace ordgame;
using testing_support::Rng;

namespace {

Ordinal O(const char* s) { return Ordinal::parse(s); }

using IntSystem = DerivationSystem<int>;

IntSystem ints(int n, IntSystem::Step step) {
  IntSystem::Set ground;
  for (int i = 0; i < n; ++i) ground.insert(i);
  return IntSystem(ground, std::move(step));
}

}  // namespace

TEST_CASE("derivation_index examples") {
  const auto remove_all = ints(5, [](const IntSystem::Set&) { return IntSystem::Set{}; });
  CHECK(derivation_index(remove_all, {1, 2}) == TransfiniteIndex(Ordinal(1)));
  CHECK(derivation_index(remove_all, {}) == TransfiniteIndex(Ordinal(0)));

  const auto identity = ints(5, [](const IntSystem::Set& s) { return s; });
  CHECK(derivation_index(identity, {3}).is_infinite());

  // Drop the largest element: index is the size of the start set.
  const auto drop_max = ints(10, [](IntSystem::Set s) {
    if (!s.empty()) s.erase(std::prev(s.end()));
    return s;
  });
  CHECK(derivation_index(drop_max, {0, 4, 7, 9}) == TransfiniteIndex(Ordinal(4)));

  // Drop the largest element until {0, 1} remains: nonempty fixed point.
  const auto stuck = ints(10, [](IntSystem::Set s) {
    if (s.size() > 2) s.erase(std::prev(s.end()));
    return s;
  });
  CHECK(derivation_index(stuck, {0, 1, 5}).is_infinite());

  FiniteBTree chain4(std::set<NodePath>{parse_path("(4)"), parse_path("(4,3)"), parse_path("(4,3,2)"),
                                        parse_path("(4,3,2,1)")});
  const auto sys = tree_derivation(chain4);
  CHECK(derivation_index(sys, sys.ground()) == TransfiniteIndex(Ordinal(4)));
}

TEST_CASE("derivation_index rejects bad input") {
  const auto grow = ints(5, [](IntSystem::Set s) {
    s.insert(4);
    return s;
  });
  CHECK_THROWS_AS(derivation_index(grow, {1}), DomainError);
  const auto identity = ints(3, [](const IntSystem::Set& s) { return s; });
  CHECK_THROWS_AS(derivation_index(identity, {7}), DomainError);
}

TEST_CASE("transfinite index ordering") {
  CHECK(TransfiniteIndex(O("w^w^w")) < TransfiniteIndex::infinity());
  CHECK(TransfiniteIndex(Ordinal(3)) < TransfiniteIndex(O("w")));
  CHECK(TransfiniteIndex::infinity() == TransfiniteIndex::infinity());
  CHECK(TransfiniteIndex::infinity().to_string() == "inf");
  CHECK_THROWS_AS(TransfiniteIndex::infinity().value(), DomainError);
}

TEST_CASE("cb_stage examples") {
  CHECK(cb_stage(O("w^2*3+w+4"), 1) == O("w*3+1"));
  for (const char* a : {"0", "5", "w", "w^w+3", "w^(w+1)*2"}) CHECK(cb_stage(O(a), 0) == O(a));
  CHECK(cb_stage(O("w^w"), O("w")) == Ordinal(1));
  CHECK(cb_stage(O("w^2*3+w+4"), 2) == Ordinal(3));
  CHECK(cb_stage(O("w^2*3+w+4"), 3) == Ordinal(0));
}

TEST_CASE("cb_step examples") {
  CHECK(cb_step(5) == Ordinal(0));
  CHECK(cb_step(O("w")) == Ordinal(1));
  CHECK(cb_step(O("w^w")) == O("w^w"));
  CHECK(cb_step(Ordinal()) == Ordinal());
}

TEST_CASE("cb_index examples") {
  CHECK(cb_index(Ordinal()) == Ordinal(0));
  CHECK(cb_index(O("w^3*2+w")) == Ordinal(4));
  CHECK(cb_index(O("w^w")) == O("w+1"));
  CHECK(cb_index(7) == Ordinal(1));
}

TEST_CASE("dz_bound examples") {
  CHECK(dz_bound(O("w^2")).bound == O("w^3"));
  CHECK_FALSE(dz_bound(O("w^2")).extension);
  CHECK(dz_bound(1).bound == O("w"));
  CHECK(dz_bound(O("w^w")).bound == O("w^w"));
  CHECK_THROWS_AS(dz_bound(Ordinal()), DomainError);

  const auto ext = dz_bound(O("w^2*3+1"));
  CHECK(ext.extension);
  CHECK(ext.bound == omega_times(O("w^2*3+1")));
}

TEST_CASE("property: stage coherence below w^5") {
  Rng rng(31);
  for (int i = 0; i < 400; ++i) {
    const Ordinal a = testing_support::random_below_omega_pow(rng, 5);
    for (std::uint64_t g = 0; g <= 5; ++g) CHECK(cb_stage(a, g + 1) == cb_step(cb_stage(a, g)));
  }
}

TEST_CASE("property: naive iteration below w^w counts cb_index") {
  Rng rng(32);
  for (int i = 0; i < 400; ++i) {
    const Ordinal a = testing_support::random_below_omega_pow(rng, 7);
    std::uint64_t steps = 0;
    for (Ordinal cur = a; !cur.is_zero(); cur = cb_step(cur)) ++steps;
    CHECK(Ordinal(steps) == cb_index(a));
  }
  // At w^w the naive iteration stalls; only the limit stage empties it.
  CHECK(cb_step(O("w^w")) == O("w^w"));
  CHECK(cb_stage(O("w^w"), cb_index(O("w^w"))).is_zero());
}

TEST_CASE("property: cb_index is the least empty stage") {
  Rng rng(33);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = testing_support::random_ordinal(rng, 2);
    const Ordinal idx = cb_index(a);
    CHECK(cb_stage(a, idx).is_zero());
    if (!idx.is_zero()) CHECK_FALSE(cb_stage(a, pred(idx)).is_zero());
  }
}

TEST_CASE("property: monotonicity") {
  Rng rng(34);
  for (int i = 0; i < 400; ++i) {
    Ordinal a = testing_support::random_ordinal(rng, 2), b = testing_support::random_ordinal(rng, 2);
    if (b < a) std::swap(a, b);
    CHECK(cb_index(a) <= cb_index(b));
    for (const Ordinal& g : {Ordinal(0), Ordinal(1), Ordinal(2), Ordinal::omega(), O("w+1")})
      CHECK(cb_stage(a, g) <= cb_stage(b, g));
  }
}

TEST_CASE("property: dz_bound arithmetic") {
  Rng rng(35);
  for (int i = 0; i < 300; ++i) {
    const Ordinal xi = testing_support::random_ordinal(rng, 2);
    const Ordinal p = omega_pow(xi);
    const auto d = dz_bound(p);
    CHECK_FALSE(d.extension);
    CHECK(d.bound == omega_pow(add(1, xi)));
    CHECK(d.bound == omega_times(p));
    if (xi >= Ordinal::omega()) {
      CHECK(d.bound == p);
      CHECK(dz_bound(d.bound).bound == d.bound);
    }
  }
}

TEST_CASE("property: derivation index of leaf stripping is the tree order") {
  Rng rng(36);
  for (int i = 0; i < 200; ++i) {
    const auto t = testing_support::random_tree(rng, 40, 7);
    const auto sys = tree_derivation(t);
    CHECK(derivation_index(sys, sys.ground()) == TransfiniteIndex(Ordinal(order(t))));
  }
}
