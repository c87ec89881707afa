#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellweyl/hurwitz.hpp"

using namespace ellweyl;

namespace {

RootVector r4(std::vector<int> beta, int k = 0, int l = 0) { return canonical(RootVector{std::move(beta), k, l}); }

BraidWord random_word(std::mt19937_64& rng, int len, int size) {
  std::uniform_int_distribution<int> gen(1, len - 1), sign(0, 1);
  BraidWord w;
  for (int i = 0; i < size; ++i) w.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return w;
}

}  // namespace

TEST_CASE("sigma and its inverse") {
  std::mt19937_64 rng(3);
  for (Kind k : kAllKinds) {
    const ReflTuple t = standard_tuple(k);
    for (int i = 1; i < t.size(); ++i) {
      CHECK(sigma(i, sigma(i, t, 1), -1) == t);
      CHECK(sigma(i, sigma(i, t, -1), 1) == t);
    }
    CHECK_THROWS_AS(sigma(t.size(), t), std::out_of_range);
    const BraidWord w = random_word(rng, t.size(), 40);
    const ReflTuple u = apply_braid(w, t);
    CHECK(u.product() == t.product());
    CHECK(apply_braid(inverse_word(w), u) == t);
  }
}

TEST_CASE("braid relations") {
  const ReflTuple t = standard_tuple(Kind::E6);
  CHECK(apply_braid({1, 2, 1}, t) == apply_braid({2, 1, 2}, t));
  CHECK(apply_braid({1, 3}, t) == apply_braid({3, 1}, t));
}

TEST_CASE("matrix action agrees with root action") {
  const Kind k = Kind::D4;
  const ReflTuple t = standard_tuple(k);
  std::vector<GroupMatrix> ms;
  for (const auto& r : t.entries()) ms.push_back(reflection_matrix(k, r, Ambient::Vtilde));
  const BraidWord w = {1, -3, 2, 5, -4, 2, 1};
  const ReflTuple u = apply_braid(w, t);
  const auto moved = apply_braid_matrices(w, ms);
  for (int i = 0; i < u.size(); ++i) CHECK(moved[static_cast<std::size_t>(i)] == reflection_matrix(k, u[i], Ambient::Vtilde));
}

// Frozen from tests/oracle/oracle.py.
TEST_CASE("explicit D4 braid") {
  const Kind k = Kind::D4;
  const ReflTuple src = d4_tau_source();
  const ReflTuple middle(k, {r4({0, 1, 0, 0}, 0, -1), r4({0, 1, 0, 0}, -1, -1), r4({1, 0, 0, 0}), r4({0, 0, 1, 0}),
                             r4({0, 0, 0, 1}), r4({1, 2, 1, 1}, 0, -1)});
  const ReflTuple final_(k, {r4({1, 0, 0, 0}), r4({0, 0, 1, 0}), r4({0, 0, 0, 1}), r4({1, 2, 1, 1}, 0, -1),
                             r4({0, 1, 0, 0}), r4({0, 1, 0, 0}, 1, 0)});
  CHECK(apply_braid(d4_tau_inner_word(), src) == middle);
  CHECK(apply_braid(d4_tau_word(), src) == final_);
  CHECK(final_ == standard_tuple(k));
}

// Frozen from tests/oracle/oracle.py.
TEST_CASE("D4 census at bound 0") {
  const OrbitCensus c = orbit_explore(standard_tuple(Kind::D4), {0, 1'000'000, 1});
  CHECK(c.size() == 145'824);
  CHECK(c.truncations == 116'496);
  CHECK_FALSE(c.overflow);
  CHECK(c.entries.back().depth == 19);
  for (std::size_t i : {std::size_t{1}, std::size_t{5000}, c.size() - 1})
    CHECK(apply_braid(c.word_to(i), c.seed) == c.state(i));
}

TEST_CASE("census is deterministic across thread counts") {
  const ReflTuple seed = standard_tuple(Kind::D4);
  const OrbitCensus a = orbit_explore(seed, {1, 20'000, 1});
  const OrbitCensus b = orbit_explore(seed, {1, 20'000, 3});
  REQUIRE(a.size() == b.size());
  CHECK(a.overflow);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a.entries[i].state == b.entries[i].state);
}

TEST_CASE("pack round trip") {
  const ReflTuple t = d4_tau_source();
  CHECK(unpack(Kind::D4, t.size(), pack(t)) == t);
}

TEST_CASE("connect search") {
  const ReflTuple s = standard_tuple(Kind::D4);
  const ReflTuple u = apply_braid({3, 1, -4, 2, 5, 5, -1}, s);
  const ConnectResult r = connect_search(s, u, 1, 100'000);
  REQUIRE(r.word.has_value());
  CHECK(apply_braid(*r.word, s) == u);
  const ReflTuple other = d4_two_orbit_witness().tuple;
  CHECK_THROWS_AS(connect_search(s, other, 1, 1000), ProductMismatchError);
}

TEST_CASE("two-orbit witness") {
  const TwoOrbitReport rep = d4_two_orbit_witness();
  CHECK(rep.product_matches);
  CHECK(rep.differs_from_coxeter);
  CHECK(rep.phi_product_is_c);
}

TEST_CASE("lambda_t on normalized tuples") {
  const OrbitCensus c = orbit_explore(standard_tuple(Kind::D4), {0, 1'000'000, 1});
  int shaped = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const ReflTuple t = c.state(i);
    if (!has_normal_shape(t)) continue;
    ++shaped;
    CHECK(lambda_t_check(t).valid);
  }
  CHECK(shaped == 32);
}

// Frozen from tests/oracle/oracle.py (counts of positive roots with lambda_t = 1).
TEST_CASE("P-conjugation orbit") {
  const std::vector<std::size_t> lambda_one = {8, 18, 24, 30};
  for (std::size_t i = 0; i < 4; ++i) {
    const ConjugationOrbit o = p_conjugation_orbit(kAllKinds[i], 0);
    CHECK(o.lambda_one.size() == lambda_one[i]);
    CHECK(o.all_lambda_one_reached);
    CHECK(o.neighbor_condition);
  }
}

TEST_CASE("tuple validation") {
  CHECK_THROWS(ReflTuple(Kind::D4, {RootVector{{1, 0, 1, 0}, 0, 0}}));
  CHECK_THROWS(ReflTuple(Kind::D4, {RootVector{{1, 0, 0}, 0, 0}}));
}
