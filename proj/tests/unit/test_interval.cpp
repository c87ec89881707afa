#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ellweyl/interval.hpp"
#include "ellweyl/scherk.hpp"

using namespace ellweyl;

namespace {

const IntervalPoset& d4_poset() {
  static const IntervalPoset p = build_poset(orbit_explore(standard_tuple(Kind::D4), {0, 1'000'000, 1}));
  return p;
}

}  // namespace

TEST_CASE("transitive reduction") {
  // 0 < 1 < 2 < 3, with shortcuts 0 < 2 and 0 < 3
  const auto red = transitive_reduction(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}});
  CHECK(red == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("prefixes of a reduced tuple") {
  const auto pre = prefixes_of(standard_tuple(Kind::E6));
  REQUIRE(pre.size() == 9);
  CHECK(pre.front().element == identity_triple(Kind::E6));
  CHECK(pre.back().element == coxeter_triple(Kind::E6));
  CHECK_THROWS_AS(prefixes_of(ReflTuple(Kind::D4, {simple_root(Kind::D4, 1), simple_root(Kind::D4, 1)})),
                  NotReducedError);
}

TEST_CASE("D4 interval at bound 0") {
  const IntervalPoset& p = d4_poset();
  CHECK(p.nodes.size() == 3448);
  CHECK(p.covers.size() == 16324);
  const PosetReport r = check_poset(p);
  CHECK(r.unique_bottom);
  CHECK(r.unique_top);
  CHECK(r.graded);
  CHECK(r.covers_reduced);
  CHECK(r.scherk_bounded);
  CHECK(r.scherk_equal == p.nodes.size());
  CHECK(r.rank_sizes == std::vector<std::size_t>{1, 93, 844, 1572, 844, 93, 1});
  CHECK(p.nodes[p.top()].element == coxeter_triple(Kind::D4));
}

TEST_CASE("comparisons") {
  const IntervalPoset& p = d4_poset();
  const LeqResult up = leq(p, p.bottom(), p.top());
  REQUIRE(up.answer == Comparison::Yes);
  CHECK(up.chain.size() == 6);
  Triple x = p.nodes[p.bottom()].element;
  for (const auto& r : up.chain) x = x * reflection_triple(Kind::D4, r);
  CHECK(x == p.nodes[p.top()].element);
  CHECK(leq(p, p.top(), p.bottom()).answer == Comparison::NoInCensus);
}

TEST_CASE("export and import") {
  const IntervalPoset& p = d4_poset();
  CHECK(import_poset_json(export_poset(p, PosetFormat::Json)) == p);
  const std::string dot = export_poset(p, PosetFormat::Dot);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(parse_poset_format("dot") == PosetFormat::Dot);
  CHECK_FALSE(parse_poset_format("svg").has_value());
  CHECK(node_id(p.nodes[0].element).size() == 16);
}
