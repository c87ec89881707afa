#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellweyl/group.hpp"

using namespace ellweyl;

namespace {

Triple random_element(Kind k, std::mt19937_64& rng, int len) {
  const auto roots = finite_roots(k);
  std::uniform_int_distribution<std::size_t> pick(0, roots.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::vector<RootVector> word;
  for (int i = 0; i < len; ++i) {
    RootVector r = roots[pick(rng)];
    r.k = coeff(rng);
    r.l = coeff(rng);
    word.push_back(r);
  }
  return product_triple(k, word);
}

}  // namespace

TEST_CASE("Coxeter triple") {
  for (Kind k : kAllKinds) {
    const auto& d = finite_type_data(k);
    const Triple c = coxeter_triple(k);
    const RootVector h = highest_root(k);
    for (int i = 0; i < d.n; ++i) CHECK(c.lambda(i) == -h.beta[static_cast<std::size_t>(i)]);
    IntVector mu = IntVector::Zero(d.n + 1);
    mu(d.t - 1) = 1;
    CHECK(c.mu == mu);
  }
}

// Frozen from tests/oracle/oracle.py: c^m = I - E(a, b') on Vtilde, order m_t on V.
TEST_CASE("central element") {
  for (Kind k : kAllKinds) {
    const auto& d = finite_type_data(k);
    const Triple c = coxeter_triple(k);
    CHECK(triple_pow(c, d.m_t) == central_z(k));
    const BasisIndex idx{d.n};
    IntMatrix z = IntMatrix::Identity(d.n + 3, d.n + 3);
    z(idx.a(), idx.b_prime()) = -1;
    CHECK(triple_to_matrix(central_z(k), Ambient::Vtilde).matrix() == z);
    CHECK(order_in_W(coxeter_transformation(k, Realization::W)) == d.m_t);
    CHECK_FALSE(order_in_W(coxeter_transformation(k, Realization::Wtilde), 200).has_value());
  }
}

TEST_CASE("triple law agrees with matrices") {
  std::mt19937_64 rng(7);
  for (Kind k : kAllKinds) {
    for (int i = 0; i < 50; ++i) {
      const Triple x = random_element(k, rng, 5), y = random_element(k, rng, 5);
      CHECK(triple_to_matrix(x * y) == triple_to_matrix(x) * triple_to_matrix(y));
      CHECK(matrix_to_triple(triple_to_matrix(x)) == x);
      CHECK(x * triple_inverse(x) == identity_triple(k));
      CHECK(triple_to_matrix(x).inverse() == triple_to_matrix(triple_inverse(x)));
    }
  }
}

TEST_CASE("z is central") {
  std::mt19937_64 rng(11);
  for (Kind k : kAllKinds) {
    const Triple z = central_z(k);
    for (int i = 0; i < 20; ++i) {
      const Triple x = random_element(k, rng, 6);
      CHECK(x * z == z * x);
    }
  }
}

TEST_CASE("reflections") {
  const Kind k = Kind::E7;
  const RootVector g = simple_root(k, 3, 2, -1);
  const Triple s = reflection_triple(k, g);
  CHECK(s * s == identity_triple(k));
  const GroupMatrix m = reflection_matrix(k, g, Ambient::Vhat);
  CHECK((m * m).is_identity());
  CHECK(fixed_space(m).dim() == ambient_dim(k, Ambient::Vhat) - 1);
}

TEST_CASE("non-isometries are rejected") {
  IntMatrix m = IntMatrix::Identity(6, 6);
  m(0, 0) = 2;
  CHECK_FALSE(is_isometry(Kind::D4, Ambient::V, m));
  CHECK_THROWS(GroupMatrix(Kind::D4, Ambient::V, m));
}

TEST_CASE("projection to W") {
  const Kind k = Kind::D4;
  CHECK(projection_phi(central_z(k)).is_identity());
  CHECK(projection_phi(coxeter_triple(k)) == coxeter_transformation(k, Realization::W));
}
