#include "ellweyl/interval.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "ellweyl/scherk.hpp"

namespace ellweyl {

namespace {

struct KeyHash {
  std::size_t operator()(const std::vector<Int>& v) const noexcept {
    std::uint64_t h = 14695981039346656037ULL;
    for (Int x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

std::vector<Int> flat_key(const Triple& x) {
  std::vector<Int> k;
  k.reserve(static_cast<std::size_t>(x.w_fin.size() + x.lambda.size() + x.mu.size()));
  for (Eigen::Index i = 0; i < x.w_fin.rows(); ++i)
    for (Eigen::Index j = 0; j < x.w_fin.cols(); ++j) k.push_back(x.w_fin(i, j));
  for (Eigen::Index i = 0; i < x.lambda.size(); ++i) k.push_back(x.lambda(i));
  for (Eigen::Index i = 0; i < x.mu.size(); ++i) k.push_back(x.mu(i));
  return k;
}

std::string serialized(const Triple& x) { return to_json(x).dump(); }

}  // namespace

std::string node_id(const Triple& x) { return fnv1a_hex(serialized(x)); }

std::optional<std::size_t> IntervalPoset::find(const Triple& x) const {
  for (std::size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].element == x) return i;
  return std::nullopt;
}

std::size_t IntervalPoset::bottom() const {
  auto i = find(identity_triple(kind));
  if (!i) throw std::logic_error("interval has no bottom element");
  return *i;
}

std::size_t IntervalPoset::top() const {
  auto i = find(coxeter_triple(kind));
  if (!i) throw std::logic_error("interval has no top element");
  return *i;
}

int IntervalPoset::max_length() const {
  int m = 0;
  for (const auto& x : nodes) m = std::max(m, x.length);
  return m;
}

std::vector<IntervalElement> prefixes_of(const ReflTuple& t) {
  if (verify_reduced(t, 0).status != Reducedness::Reduced)
    throw NotReducedError("factorization is not certified reduced");
  std::vector<IntervalElement> out;
  Triple cur = identity_triple(t.kind());
  out.push_back({cur, 0, {{0, 0}}, 1});
  for (int i = 0; i < t.size(); ++i) {
    cur = cur * reflection_triple(t.kind(), t[i]);
    out.push_back({cur, i + 1, {{0, i + 1}}, 1});
  }
  return out;
}

IntervalPoset build_poset(const OrbitCensus& census) {
  const ReflTuple& seed = census.seed;
  if (!(seed.product() == coxeter_triple(seed.kind())))
    throw std::invalid_argument("census seed is not a factorization of the Coxeter transformation");
  if (verify_reduced(seed, 0).status != Reducedness::Reduced)
    throw NotReducedError("census seed is not certified reduced");

  const Kind kind = census.kind;
  const int len = seed.size();
  const FiniteRootSystem& rs = root_system(kind);
  std::vector<IntervalElement> nodes;
  std::unordered_map<std::vector<Int>, std::size_t, KeyHash> index;
  std::map<std::pair<std::size_t, std::size_t>, RootVector> edges;
  auto node_of = [&](const Triple& x, int length, std::size_t f, int cut) {
    auto [it, fresh] = index.emplace(flat_key(x), nodes.size());
    if (fresh) nodes.push_back({x, length, {}, 0});
    IntervalElement& e = nodes[it->second];
    if (e.length != length) throw std::logic_error("element met at two different prefix lengths");
    if (e.witnesses.size() < kMaxWitnesses) e.witnesses.emplace_back(f, cut);
    ++e.witness_count;
    return it->second;
  };

  // reflection triples of every positive root with its k, l, cached per root
  std::map<std::array<int, 3>, Triple> refl_cache;
  for (std::size_t f = 0; f < census.size(); ++f) {
    const PackedState& s = census.entries[f].state;
    Triple cur = identity_triple(kind);
    std::size_t prev = node_of(cur, 0, f, 0);
    for (int i = 0; i < len; ++i) {
      const auto base = static_cast<std::size_t>(3 * i);
      const std::array<int, 3> key{s.bytes[base], s.bytes[base + 1], s.bytes[base + 2]};
      auto it = refl_cache.find(key);
      if (it == refl_cache.end())
        it = refl_cache.emplace(key, reflection_triple(kind, RootVector{rs.root(key[0]), key[1], key[2]})).first;
      cur = cur * it->second;
      const std::size_t here = node_of(cur, i + 1, f, i + 1);
      edges.emplace(std::make_pair(prev, here), RootVector{rs.root(key[0]), key[1], key[2]});
      prev = here;
    }
  }

  // sort nodes by (length, serialized element) and relabel
  std::vector<std::pair<std::pair<int, std::string>, std::size_t>> order;
  for (std::size_t i = 0; i < nodes.size(); ++i) order.push_back({{nodes[i].length, serialized(nodes[i].element)}, i});
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> relabel(nodes.size());
  IntervalPoset p{kind, census.options.coeff_bound, census.size(), census.complete(), {}, {}};
  for (std::size_t r = 0; r < order.size(); ++r) {
    relabel[order[r].second] = r;
    p.nodes.push_back(std::move(nodes[order[r].second]));
  }
  for (auto& x : p.nodes) x.scherk_length = scherk_length(x.element).length;

  std::vector<std::pair<std::size_t, std::size_t>> raw;
  for (const auto& [e, root] : edges) raw.emplace_back(relabel[e.first], relabel[e.second]);
  const auto reduced = transitive_reduction(p.nodes.size(), raw);
  std::set<std::pair<std::size_t, std::size_t>> keep(reduced.begin(), reduced.end());
  for (const auto& [e, root] : edges) {
    const auto key = std::make_pair(relabel[e.first], relabel[e.second]);
    if (keep.count(key)) p.covers.push_back({key.first, key.second, root});
  }
  std::sort(p.covers.begin(), p.covers.end(),
            [](const CoverEdge& a, const CoverEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::vector<std::size_t>> out(count);
  std::vector<int> indeg(count, 0);
  for (const auto& [u, v] : edges) {
    if (u >= count || v >= count) throw std::out_of_range("edge endpoint out of range");
    out[u].push_back(v);
  }
  for (auto& o : out) {
    std::sort(o.begin(), o.end());
    o.erase(std::unique(o.begin(), o.end()), o.end());
    for (std::size_t v : o) ++indeg[v];
  }
  // level = length of the longest path from a source (Kahn order)
  std::vector<std::size_t> level(count, 0), queue;
  for (std::size_t v = 0; v < count; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::size_t u = queue[head];
    for (std::size_t v : out[u]) {
      level[v] = std::max(level[v], level[u] + 1);
      if (--indeg[v] == 0) queue.push_back(v);
    }
  }
  if (queue.size() != count) throw std::invalid_argument("transitive_reduction: relation has a cycle");

  // u -> v is redundant iff v is reachable from u by a path of length >= 2.
  // Such a path only visits vertices of level below level(v).
  std::vector<std::pair<std::size_t, std::size_t>> kept;
  std::vector<std::size_t> mark(count, static_cast<std::size_t>(-1));
  std::vector<std::size_t> stack;
  for (std::size_t u = 0; u < count; ++u) {
    std::size_t top = 0;
    for (std::size_t v : out[u]) top = std::max(top, level[v]);
    stack.clear();
    for (std::size_t w : out[u])
      for (std::size_t x : out[w])
        if (level[x] <= top && mark[x] != u) {
          mark[x] = u;
          stack.push_back(x);
        }
    while (!stack.empty()) {
      const std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : out[x])
        if (level[y] <= top && mark[y] != u) {
          mark[y] = u;
          stack.push_back(y);
        }
    }
    for (std::size_t v : out[u])
      if (mark[v] != u) kept.emplace_back(u, v);
  }
  return kept;
}

PosetReport check_poset(const IntervalPoset& p) {
  PosetReport r;
  const int n2 = p.nodes.empty() ? 0 : p.max_length();
  std::vector<int> indeg(p.nodes.size(), 0), outdeg(p.nodes.size(), 0);
  r.graded = true;
  for (const auto& e : p.covers) {
    ++outdeg[e.from];
    ++indeg[e.to];
    if (p.nodes[e.to].length != p.nodes[e.from].length + 1) r.graded = false;
  }
  std::size_t minimal = 0, maximal = 0;
  for (std::size_t i = 0; i < p.nodes.size(); ++i) {
    if (indeg[i] == 0) ++minimal;
    if (outdeg[i] == 0) ++maximal;
  }
  const auto bottom = p.find(identity_triple(p.kind));
  const auto top = p.find(coxeter_triple(p.kind));
  r.unique_bottom = minimal == 1 && bottom && indeg[*bottom] == 0 && p.nodes[*bottom].length == 0;
  r.unique_top = maximal == 1 && top && outdeg[*top] == 0 && p.nodes[*top].length == n2;

  std::vector<std::pair<std::size_t, std::size_t>> raw;
  for (const auto& e : p.covers) raw.emplace_back(e.from, e.to);
  auto red = transitive_reduction(p.nodes.size(), raw);
  std::sort(red.begin(), red.end());
  r.covers_reduced = red == raw;

  r.scherk_bounded = true;
  r.rank_sizes.assign(static_cast<std::size_t>(n2 + 1), 0);
  for (const auto& x : p.nodes) {
    if (x.scherk_length < 0 || x.scherk_length > x.length) r.scherk_bounded = false;
    if (x.scherk_length == x.length) ++r.scherk_equal;
    ++r.rank_sizes[static_cast<std::size_t>(x.length)];
  }
  return r;
}

LeqResult leq(const IntervalPoset& p, std::size_t x, std::size_t y) {
  if (x >= p.nodes.size() || y >= p.nodes.size()) throw std::out_of_range("leq: node index out of range");
  if (x == y) return {Comparison::Yes, {}};
  const int ly = p.nodes[y].length;
  if (p.nodes[x].length >= ly) return {Comparison::NoInCensus, {}};
  // covers are sorted by source, so the successors of u are a contiguous range
  auto range = [&](std::size_t u) {
    auto lo = std::lower_bound(p.covers.begin(), p.covers.end(), u,
                               [](const CoverEdge& e, std::size_t v) { return e.from < v; });
    auto hi = lo;
    while (hi != p.covers.end() && hi->from == u) ++hi;
    return std::make_pair(lo, hi);
  };
  std::map<std::size_t, const CoverEdge*> via;
  std::deque<std::size_t> queue{x};
  via.emplace(x, nullptr);
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    if (u == y) break;
    auto [lo, hi] = range(u);
    for (auto it = lo; it != hi; ++it) {
      if (p.nodes[it->to].length > ly) continue;
      if (via.emplace(it->to, &*it).second) queue.push_back(it->to);
    }
  }
  if (!via.count(y)) return {p.complete ? Comparison::NoInCensus : Comparison::Unknown, {}};
  std::vector<RootVector> chain;
  for (std::size_t cur = y; cur != x; cur = via.at(cur)->from) chain.push_back(via.at(cur)->root);
  std::reverse(chain.begin(), chain.end());
  return {Comparison::Yes, chain};
}

std::optional<PosetFormat> parse_poset_format(std::string_view name) {
  if (name == "json") return PosetFormat::Json;
  if (name == "dot") return PosetFormat::Dot;
  return std::nullopt;
}

std::string export_poset(const IntervalPoset& p, PosetFormat format) {
  std::vector<std::string> ids;
  for (const auto& x : p.nodes) ids.push_back(node_id(x.element));
  if (format == PosetFormat::Json) {
    Json nodes = Json::array();
    for (std::size_t i = 0; i < p.nodes.size(); ++i) {
      const auto& x = p.nodes[i];
      Json w = Json::array();
      for (const auto& [f, c] : x.witnesses) w.push_back({f, c});
      nodes.push_back({{"id", ids[i]},
                       {"length", x.length},
                       {"element", to_json(x.element)},
                       {"scherk_length", x.scherk_length},
                       {"witness_count", x.witness_count},
                       {"witnesses", w}});
    }
    Json covers = Json::array();
    for (const auto& e : p.covers) covers.push_back({{"from", ids[e.from]}, {"to", ids[e.to]}, {"root", to_json(e.root)}});
    Json doc{{"kind", std::string(to_string(p.kind))},
             {"bound", p.coeff_bound},
             {"factorizations", p.factorizations},
             {"complete", p.complete},
             {"nodes", nodes},
             {"covers", covers}};
    return doc.dump(1) + "\n";
  }
  if (format == PosetFormat::Dot) {
    std::ostringstream out;
    out << "digraph interval {\n  rankdir=BT;\n  node [shape=point];\n";
    for (int len = 0; len <= p.max_length(); ++len) {
      out << "  { rank=same;";
      for (std::size_t i = 0; i < p.nodes.size(); ++i)
        if (p.nodes[i].length == len) out << " \"" << ids[i] << "\";";
      out << " }\n";
    }
    for (const auto& e : p.covers) out << "  \"" << ids[e.from] << "\" -> \"" << ids[e.to] << "\";\n";
    out << "}\n";
    return out.str();
  }
  throw std::invalid_argument("unsupported poset format");
}

IntervalPoset import_poset_json(const std::string& text) {
  const Json doc = Json::parse(text);
  const auto kind = parse_kind(doc.at("kind").get<std::string>());
  if (!kind) throw std::invalid_argument("unknown kind in poset document");
  IntervalPoset p{*kind, doc.at("bound").get<int>(), doc.at("factorizations").get<std::size_t>(),
                  doc.at("complete").get<bool>(), {}, {}};
  std::map<std::string, std::size_t> by_id;
  for (const auto& n : doc.at("nodes")) {
    IntervalElement x{triple_from_json(n.at("element")), n.at("length").get<int>(), {},
                      n.at("witness_count").get<std::size_t>(), n.at("scherk_length").get<int>()};
    for (const auto& w : n.at("witnesses")) x.witnesses.emplace_back(w[0].get<std::size_t>(), w[1].get<int>());
    const std::string id = n.at("id").get<std::string>();
    if (id != node_id(x.element)) throw std::invalid_argument("node id does not match its element");
    by_id.emplace(id, p.nodes.size());
    p.nodes.push_back(std::move(x));
  }
  for (const auto& e : doc.at("covers"))
    p.covers.push_back({by_id.at(e.at("from").get<std::string>()), by_id.at(e.at("to").get<std::string>()),
                        root_from_json(e.at("root"))});
  return p;
}

}  // namespace ellweyl
