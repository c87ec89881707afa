#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "ellweyl/serialize.hpp"

using namespace ellweyl;

TEST_CASE("round trips") {
  const Kind k = Kind::E7;
  const RootVector r = simple_root(k, 4, -2, 3);
  CHECK(root_from_json(to_json(r)) == r);
  const Triple c = coxeter_triple(k);
  CHECK(triple_from_json(to_json(c)) == c);
  const ReflTuple t = standard_tuple(k);
  CHECK(tuple_from_json(to_json(t)) == t);
  const BraidWord w = {1, -2, 6};
  CHECK(braid_from_json(braid_to_json(w)) == w);
}

TEST_CASE("malformed input is rejected") {
  Json bad = to_json(coxeter_triple(Kind::D4));
  bad["w_fin"][0][0] = 5;
  CHECK_THROWS(triple_from_json(bad));
  CHECK_THROWS(tuple_from_json(Json::parse(R"({"kind":"D4","entries":[{"beta":[1,0,1,0],"k":0,"l":0}]})")));
  CHECK_THROWS(tuple_from_json(Json::parse(R"({"kind":"A2","entries":[]})")));
  CHECK_THROWS(braid_from_json(Json::parse(R"([1,"x"])")));
}

TEST_CASE("census output") {
  const OrbitCensus c = orbit_explore(standard_tuple(Kind::D4), {0, 500, 1});
  std::ostringstream out;
  write_census_lines(out, c);
  std::istringstream in(out.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(in, line)) {
    const Json j = Json::parse(line);
    CHECK(j.contains("entries"));
    ++count;
  }
  CHECK(count == c.size());
  const Json s = census_summary(c, 1);
  CHECK(s["states"] == 500);
  CHECK(s["overflow"] == true);
}

TEST_CASE("fnv1a") {
  // reference values of 64-bit FNV-1a
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}
