#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellweyl/hurwitz.hpp"
#include "ellweyl/scherk.hpp"

using namespace ellweyl;

// Frozen from tests/oracle/oracle.py: fixed space of the lifted Coxeter
// element has dimension 2, so the length is n + 2.
TEST_CASE("length of the Coxeter element") {
  const std::vector<int> lengths = {6, 8, 9, 10};
  for (std::size_t i = 0; i < 4; ++i) {
    const Kind k = kAllKinds[i];
    const LengthCertificate c = scherk_length(coxeter_transformation(k, Realization::What));
    CHECK(c.dim_fixed == 2);
    CHECK(c.dim_fperp == finite_type_data(k).n + 2);
    CHECK_FALSE(c.is_null);
    CHECK(c.length == lengths[i]);
    CHECK(scherk_length(coxeter_triple(k)).length == lengths[i]);
  }
}

TEST_CASE("normal-form lift agrees with the generator lift") {
  for (Kind k : kAllKinds)
    CHECK(triple_to_matrix(coxeter_triple(k), Ambient::Vhat) == coxeter_transformation(k, Realization::What));
}

TEST_CASE("length of simple elements") {
  const Kind k = Kind::E8;
  CHECK(scherk_length(identity_triple(k)).length == 0);
  CHECK(scherk_length(reflection_triple(k, simple_root(k, 5, 1, 2))).length == 1);
  CHECK_THROWS(scherk_length(GroupMatrix::identity(k, Ambient::V)));
}

TEST_CASE("reducedness") {
  const Kind k = Kind::D4;
  CHECK(verify_reduced(standard_tuple(k)).status == Reducedness::Reduced);
  const ReflTuple rep(k, {simple_root(k, 1), simple_root(k, 1)});
  const ReducedVerdict v = verify_reduced(rep);
  CHECK(v.status == Reducedness::NotReduced);
  REQUIRE(v.shorter.has_value());
  CHECK(v.shorter->empty());
  const ReflTuple sep(k, {simple_root(k, 1), simple_root(k, 2), simple_root(k, 1, 0, 0)});
  const ReducedVerdict w = verify_reduced(sep);
  CHECK(w.status == Reducedness::NotReduced);
  REQUIRE(w.shorter.has_value());
  CHECK(product_triple(k, *w.shorter) == sep.product());
}
