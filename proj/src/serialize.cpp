#include "ellweyl/serialize.hpp"

#include <cstdio>

namespace ellweyl {

namespace {

Kind kind_from_json(const Json& j) {
  const auto k = parse_kind(j.get<std::string>());
  if (!k) throw std::invalid_argument("unknown kind " + j.dump());
  return *k;
}

Json int_vector(const IntVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

IntVector int_vector_from(const Json& j, Eigen::Index expected) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != expected)
    throw std::invalid_argument("vector of length " + std::to_string(expected) + " expected");
  IntVector v(expected);
  for (Eigen::Index i = 0; i < expected; ++i) v(i) = j[static_cast<std::size_t>(i)].get<Int>();
  return v;
}

}  // namespace

Json to_json(const RootVector& r) { return Json{{"beta", r.beta}, {"k", r.k}, {"l", r.l}}; }

RootVector root_from_json(const Json& j) {
  return RootVector{j.at("beta").get<std::vector<int>>(), j.at("k").get<int>(), j.at("l").get<int>()};
}

Json to_json(const Triple& x) {
  Json w = Json::array();
  for (Eigen::Index i = 0; i < x.w_fin.rows(); ++i) w.push_back(int_vector(x.w_fin.row(i).transpose()));
  return Json{{"kind", std::string(to_string(x.kind))},
              {"w_fin", w},
              {"lambda", int_vector(x.lambda)},
              {"mu", int_vector(x.mu)}};
}

Triple triple_from_json(const Json& j) {
  const Kind kind = kind_from_json(j.at("kind"));
  const int n = finite_type_data(kind).n;
  Triple x{kind, IntMatrix(n, n), int_vector_from(j.at("lambda"), n), int_vector_from(j.at("mu"), n + 1)};
  const Json& w = j.at("w_fin");
  if (!w.is_array() || static_cast<int>(w.size()) != n) throw std::invalid_argument("w_fin must be n x n");
  for (int i = 0; i < n; ++i) x.w_fin.row(i) = int_vector_from(w[static_cast<std::size_t>(i)], n).transpose();
  if (!in_finite_weyl_group(kind, x.w_fin)) throw std::invalid_argument("w_fin is not in the finite Weyl group");
  return x;
}

Json to_json(const ReflTuple& t) {
  Json e = Json::array();
  for (const auto& r : t.entries()) e.push_back(to_json(r));
  return Json{{"kind", std::string(to_string(t.kind()))}, {"entries", e}};
}

ReflTuple tuple_from_json(const Json& j) {
  std::vector<RootVector> e;
  for (const auto& r : j.at("entries")) e.push_back(root_from_json(r));
  return ReflTuple(kind_from_json(j.at("kind")), std::move(e));
}

Json braid_to_json(const BraidWord& w) { return Json(w); }

BraidWord braid_from_json(const Json& j) {
  BraidWord w = j.get<BraidWord>();
  for (int x : w)
    if (x == 0) throw std::invalid_argument("braid letter 0 is not a generator");
  return w;
}

Json to_json(const LengthCertificate& c) {
  return Json{{"dim_fixed", c.dim_fixed}, {"dim_fperp", c.dim_fperp}, {"is_null", c.is_null}, {"length", c.length}};
}

void write_census_lines(std::ostream& out, const OrbitCensus& census) {
  const FiniteRootSystem& rs = root_system(census.kind);
  const int len = census.seed.size();
  for (const auto& entry : census.entries) {
    Json e = Json::array();
    for (int i = 0; i < len; ++i) {
      const auto base = static_cast<std::size_t>(3 * i);
      e.push_back(to_json(RootVector{rs.root(entry.state.bytes[base]), entry.state.bytes[base + 1],
                                     entry.state.bytes[base + 2]}));
    }
    out << Json{{"entries", e}, {"depth", entry.depth}}.dump() << '\n';
  }
}

Json census_summary(const OrbitCensus& census, std::uint64_t rng_seed) {
  return Json{{"kind", std::string(to_string(census.kind))},
              {"bound", census.options.coeff_bound},
              {"states", census.size()},
              {"truncations", census.truncations},
              {"overflow", census.overflow},
              {"max_states", census.options.max_states},
              {"max_depth", census.entries.empty() ? 0 : census.entries.back().depth},
              {"seed", rng_seed},
              {"seed_tuple", to_json(census.seed)}};
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ellweyl
