#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ellweyl/rootsys.hpp"

using namespace ellweyl;

// Frozen from tests/oracle/oracle.py.
TEST_CASE("root counts and highest roots") {
  const std::vector<std::pair<Kind, std::vector<int>>> expected = {
      {Kind::D4, {1, 2, 1, 1}},
      {Kind::E6, {1, 2, 2, 3, 2, 1}},
      {Kind::E7, {2, 2, 3, 4, 3, 2, 1}},
      {Kind::E8, {2, 3, 4, 6, 5, 4, 3, 2}},
  };
  const std::vector<std::size_t> counts = {24, 72, 126, 240};
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const Kind k = expected[i].first;
    CAPTURE(to_string(k));
    CHECK(finite_roots(k).size() == counts[i]);
    CHECK(highest_root(k).beta == expected[i].second);
    CHECK(highest_root(k).beta == finite_type_data(k).marks);
  }
}

TEST_CASE("type table") {
  CHECK(finite_type_data(Kind::D4).t == 2);
  CHECK(finite_type_data(Kind::D4).m_t == 2);
  CHECK(finite_type_data(Kind::E6).m_t == 3);
  CHECK(finite_type_data(Kind::E7).m_t == 4);
  CHECK(finite_type_data(Kind::E8).m_t == 6);
  for (Kind k : kAllKinds) {
    const auto& d = finite_type_data(k);
    CHECK(d.marks[static_cast<std::size_t>(d.t - 1)] == d.m_t);
  }
}

TEST_CASE("parse_kind") {
  CHECK(parse_kind("E7") == Kind::E7);
  CHECK_FALSE(parse_kind("A3").has_value());
  CHECK_FALSE(parse_kind("").has_value());
}

TEST_CASE("finite roots are closed under reflection and negation") {
  for (Kind k : kAllKinds) {
    const auto& rs = root_system(k);
    for (int i = 0; i < rs.size(); ++i) {
      CHECK(rs.pairing(i, i) == 2);
      CHECK(rs.root(rs.negate(i)) == (-RootVector{rs.root(i), 0, 0}).beta);
      for (int j = 0; j < rs.size(); j += 7) {
        const int r = rs.reflect(i, j);
        REQUIRE(r >= 0);
        CHECK(rs.reflect(i, r) == j);
      }
    }
  }
}

TEST_CASE("elliptic roots and canonical form") {
  const Kind k = Kind::D4;
  RootVector g = simple_root(k, 2, 3, -5);
  CHECK(is_root(k, g));
  CHECK(is_canonical(g));
  CHECK_FALSE(is_canonical(-g));
  CHECK(canonical(-g) == g);
  CHECK_FALSE(is_root(k, RootVector{{1, 0, 1, 0}, 0, 0}));
  CHECK(pairing(k, g, g) == 2);
  // a and b are radical: shifting does not change pairings
  CHECK(pairing(k, simple_root(k, 1, 4, 2), simple_root(k, 2, -1, 7)) == -1);
}

TEST_CASE("elliptic basis and diagram") {
  for (Kind k : kAllKinds) {
    const auto& d = finite_type_data(k);
    const EllipticBasis eb = elliptic_basis(k);
    CHECK(eb.alpha.size() == static_cast<std::size_t>(d.n + 2));
    RootVector a0 = highest_root(k);
    a0 = -a0;
    a0.l = 1;
    CHECK(eb.alpha0() == a0);
    CHECK(eb.alpha_tstar() == simple_root(k, d.t, 1, 0));
    const auto edges = elliptic_diagram(k);
    CHECK(std::count_if(edges.begin(), edges.end(),
                        [](const DiagramEdge& e) { return e.style == EdgeStyle::DottedDouble; }) == 1);
  }
}
