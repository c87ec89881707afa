#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellweyl/bilinear.hpp"

using namespace ellweyl;

// Frozen from tests/oracle/oracle.py.
TEST_CASE("signatures") {
  for (Kind k : kAllKinds) {
    const int n = finite_type_data(k).n;
    CHECK(signature(gram_matrix(k, Ambient::V)) == Signature{n, 0, 2});
    CHECK(signature(gram_matrix(k, Ambient::Vtilde)) == Signature{n + 1, 1, 1});
    CHECK(signature(gram_matrix(k, Ambient::Vhat)) == Signature{n + 2, 2, 0});
  }
}

TEST_CASE("signature of small forms") {
  IntMatrix h(2, 2);
  h << 0, 1, 1, 0;
  CHECK(signature(h) == Signature{1, 1, 0});
  IntMatrix z = IntMatrix::Zero(3, 3);
  CHECK(signature(z) == Signature{0, 0, 3});
  IntMatrix bad(2, 2);
  bad << 1, 2, 0, 1;
  CHECK_THROWS_AS(signature(bad), std::invalid_argument);
}

TEST_CASE("rank and kernel over Q") {
  IntMatrix m(2, 3);
  m << 1, 2, 3, 2, 4, 6;
  const RationalMatrix q = RationalMatrix::from(m);
  CHECK(rank(q) == 1);
  const RationalMatrix ker = kernel(q);
  CHECK(ker.rows() == 2);
  CHECK((q * ker.transpose()).is_zero());
}

TEST_CASE("radical and subspaces") {
  const Kind k = Kind::E6;
  const BasisIndex idx{finite_type_data(k).n};
  const IntMatrix g = gram_matrix(k, Ambient::V);
  IntVector a = IntVector::Zero(g.rows()), b = a;
  a(idx.a()) = 1;
  b(idx.b()) = 1;
  const auto rad = RationalSubspace::span(k, Ambient::V, {a, b});
  CHECK(rad.dim() == 2);
  CHECK(is_null_space(rad));
  CHECK(orth_complement(rad) == RationalSubspace::full(k, Ambient::V));
  CHECK(orth_complement(RationalSubspace::full(k, Ambient::V)) == rad);
  CHECK(rad.contains(IntVector(a + 3 * b)));
  IntVector e1 = IntVector::Zero(g.rows());
  e1(0) = 1;
  CHECK_FALSE(rad.contains(e1));
}

TEST_CASE("fixed space of the identity") {
  const auto f = fixed_space(Kind::D4, Ambient::Vhat, IntMatrix::Identity(8, 8));
  CHECK(f.dim() == 8);
  CHECK_THROWS(fixed_space(Kind::D4, Ambient::Vhat, IntMatrix::Identity(7, 7)));
}

TEST_CASE("sabotage hook breaks isotropy of a") {
  const Kind k = Kind::D4;
  set_gram_sabotage(true);
  const Signature broken = signature(gram_matrix(k, Ambient::V));
  set_gram_sabotage(false);
  CHECK_FALSE(broken == Signature{4, 0, 2});
  CHECK(signature(gram_matrix(k, Ambient::V)) == Signature{4, 0, 2});
}
