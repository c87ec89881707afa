#include "ellweyl/hurwitz.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ellweyl {

namespace {

void require_index(int i, int length) {
  if (i < 1 || i >= length)
    throw std::out_of_range("braid generator index " + std::to_string(i) + " out of range for length " +
                            std::to_string(length));
}

int max_abs_k(const ReflTuple& t) {
  int m = 0;
  for (const auto& r : t.entries()) m = std::max(m, std::abs(r.k));
  return m;
}

int max_abs_l(const ReflTuple& t) {
  int m = 0;
  for (const auto& r : t.entries()) m = std::max(m, std::abs(r.l));
  return m;
}

constexpr int kMaxCoefficient = 120;

// One sigma move on packed bytes. Returns false if a new coefficient leaves
// [-klim, klim] x [-llim, llim].
bool packed_move(const FiniteRootSystem& rs, const PackedState& in, int letter, int klim, int llim, PackedState& out) {
  out = in;
  const int i = std::abs(letter) - 1;
  std::int8_t* x = out.bytes.data() + 3 * i;
  std::int8_t* y = x + 3;
  // move s_delta(gamma) into the slot of the conjugated entry
  const std::int8_t* delta;
  const std::int8_t* gamma;
  std::int8_t* moved;   // slot receiving delta unchanged
  std::int8_t* conj;    // slot receiving s_delta(gamma)
  std::int8_t tmp[3];
  if (letter > 0) {
    delta = in.bytes.data() + 3 * (i + 1);
    gamma = in.bytes.data() + 3 * i;
    moved = x;
    conj = y;
  } else {
    delta = in.bytes.data() + 3 * i;
    gamma = in.bytes.data() + 3 * (i + 1);
    moved = y;
    conj = x;
  }
  const int p = rs.pairing(delta[0], gamma[0]);
  int r = rs.reflect(delta[0], gamma[0]);
  int k = gamma[1] - p * delta[1];
  int l = gamma[2] - p * delta[2];
  if (!rs.is_positive(r)) {
    r = rs.negate(r);
    k = -k;
    l = -l;
  }
  if (std::abs(k) > klim || std::abs(l) > llim) return false;
  tmp[0] = delta[0];
  tmp[1] = delta[1];
  tmp[2] = delta[2];
  moved[0] = tmp[0];
  moved[1] = tmp[1];
  moved[2] = tmp[2];
  conj[0] = static_cast<std::int8_t>(r);
  conj[1] = static_cast<std::int8_t>(k);
  conj[2] = static_cast<std::int8_t>(l);
  return true;
}

std::vector<int> all_letters(int length) {
  std::vector<int> letters;
  for (int i = 1; i < length; ++i) {
    letters.push_back(i);
    letters.push_back(-i);
  }
  return letters;
}

int checked_limit(int bound, int seed_max) {
  if (bound < 0) throw std::invalid_argument("coefficient bound must be non-negative");
  const int lim = bound + seed_max;
  if (lim > kMaxCoefficient) throw std::invalid_argument("coefficient bound too large");
  return lim;
}

}  // namespace

// ---------------------------------------------------------------------------

ReflTuple::ReflTuple(Kind kind, std::vector<RootVector> entries) : kind_(kind), product_(identity_triple(kind)) {
  if (static_cast<int>(entries.size()) > kMaxTupleLength) throw std::invalid_argument("tuple too long");
  for (auto& r : entries) {
    if (!is_root(kind, r)) throw NotARootError("not a root: " + to_string(r));
    r = canonical(r);
  }
  entries_ = std::move(entries);
  product_ = product_triple(kind, entries_);
}

ReflTuple::ReflTuple(Kind kind, std::vector<RootVector> entries, Triple product)
    : kind_(kind), entries_(std::move(entries)), product_(std::move(product)) {}

RootVector reflect_root(Kind kind, const RootVector& delta, const RootVector& gamma) {
  const int p = pairing(kind, delta, gamma);
  RootVector r = gamma;
  for (std::size_t i = 0; i < r.beta.size(); ++i) r.beta[i] -= p * delta.beta[i];
  r.k -= p * delta.k;
  r.l -= p * delta.l;
  return canonical(r);
}

ReflTuple sigma(int i, const ReflTuple& t, int direction) {
  require_index(i, t.size());
  if (direction != 1 && direction != -1) throw std::invalid_argument("sigma direction must be +1 or -1");
  std::vector<RootVector> e = t.entries();
  const auto a = static_cast<std::size_t>(i - 1);
  const auto b = a + 1;
  if (direction == 1) {
    RootVector conj = reflect_root(t.kind(), e[b], e[a]);
    e[a] = e[b];
    e[b] = std::move(conj);
  } else {
    RootVector conj = reflect_root(t.kind(), e[a], e[b]);
    e[b] = e[a];
    e[a] = std::move(conj);
  }
  return ReflTuple(t.kind(), std::move(e), t.product());
}

ReflTuple apply_braid(const BraidWord& word, const ReflTuple& t) {
  for (int letter : word) require_index(std::abs(letter), t.size());
  ReflTuple cur = t;
  for (int letter : word) cur = sigma(std::abs(letter), cur, letter > 0 ? 1 : -1);
  return cur;
}

BraidWord inverse_word(const BraidWord& word) {
  BraidWord inv(word.rbegin(), word.rend());
  for (int& x : inv) x = -x;
  return inv;
}

std::vector<GroupMatrix> apply_braid_matrices(const BraidWord& word, std::vector<GroupMatrix> g) {
  const int len = static_cast<int>(g.size());
  for (int letter : word) require_index(std::abs(letter), len);
  for (int letter : word) {
    const auto a = static_cast<std::size_t>(std::abs(letter) - 1);
    const auto b = a + 1;
    if (letter > 0) {
      GroupMatrix conj = g[b].inverse() * g[a] * g[b];
      g[a] = g[b];
      g[b] = conj;
    } else {
      GroupMatrix conj = g[a] * g[b] * g[a].inverse();
      g[b] = g[a];
      g[a] = conj;
    }
  }
  return g;
}

ReflTuple standard_tuple(Kind kind) { return ReflTuple(kind, coxeter_roots(kind)); }

BraidWord d4_tau_inner_word() {
  // (s2 s3 s4 s5)(s1 s2 s3 s4): the rightmost generator acts first.
  return {4, 3, 2, 1, 5, 4, 3, 2};
}

BraidWord d4_tau_word() {
  // (s4 s5)(s3 s4)(s2 s3)(s1 s2) after the inner factor.
  BraidWord w = d4_tau_inner_word();
  for (int x : {2, 1, 3, 2, 4, 3, 5, 4}) w.push_back(x);
  return w;
}

ReflTuple d4_tau_source() {
  const Kind k = Kind::D4;
  RootVector h = highest_root(k);
  h.k = 1;
  h.l = -1;
  return ReflTuple(k, {simple_root(k, 1, -1), simple_root(k, 3, -1), simple_root(k, 4, -1), h,
                       simple_root(k, 2, 0, -1), simple_root(k, 2, -1, -1)});
}

// ---------------------------------------------------------------------------

std::size_t PackedStateHash::operator()(const PackedState& s) const noexcept {
  std::uint64_t h = 14695981039346656037ULL;
  for (std::int8_t b : s.bytes) {
    h ^= static_cast<std::uint8_t>(b);
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 29));
}

PackedState pack(const ReflTuple& t) {
  const FiniteRootSystem& rs = root_system(t.kind());
  PackedState s;
  for (int i = 0; i < t.size(); ++i) {
    const RootVector& r = t[i];
    if (std::abs(r.k) > kMaxCoefficient || std::abs(r.l) > kMaxCoefficient)
      throw std::invalid_argument("root coefficient too large to pack");
    const int idx = rs.index_of(r.beta);
    s.bytes[static_cast<std::size_t>(3 * i)] = static_cast<std::int8_t>(idx);
    s.bytes[static_cast<std::size_t>(3 * i + 1)] = static_cast<std::int8_t>(r.k);
    s.bytes[static_cast<std::size_t>(3 * i + 2)] = static_cast<std::int8_t>(r.l);
  }
  return s;
}

ReflTuple unpack(Kind kind, int length, const PackedState& s) {
  const FiniteRootSystem& rs = root_system(kind);
  std::vector<RootVector> e;
  e.reserve(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) {
    const auto base = static_cast<std::size_t>(3 * i);
    e.push_back(RootVector{rs.root(s.bytes[base]), s.bytes[base + 1], s.bytes[base + 2]});
  }
  return ReflTuple(kind, std::move(e));
}

BraidWord OrbitCensus::word_to(std::size_t i) const {
  BraidWord w;
  std::int64_t cur = static_cast<std::int64_t>(i);
  while (cur > 0) {
    const CensusEntry& e = entries[static_cast<std::size_t>(cur)];
    w.push_back(e.letter);
    cur = e.parent;
  }
  std::reverse(w.begin(), w.end());
  return w;
}

OrbitCensus orbit_explore(const ReflTuple& seed, const OrbitOptions& options) {
  if (options.max_states < 1) throw std::invalid_argument("max_states must be positive");
  if (options.threads < 1) throw std::invalid_argument("threads must be positive");
  if (seed.size() < 2) throw std::invalid_argument("tuple needs at least two entries");
  const FiniteRootSystem& rs = root_system(seed.kind());
  OrbitCensus census{seed.kind(), seed, options, 0, 0, {}, 0, false};
  census.k_limit = checked_limit(options.coeff_bound, max_abs_k(seed));
  census.l_limit = checked_limit(options.coeff_bound, max_abs_l(seed));
  const std::vector<int> letters = all_letters(seed.size());

  std::unordered_set<PackedState, PackedStateHash> seen;
  seen.reserve(std::min<std::size_t>(options.max_states, 1u << 22));
  census.entries.push_back({pack(seed), 0, -1, 0});
  seen.insert(census.entries[0].state);
  if (options.max_states <= 1) {
    census.overflow = true;
    return census;
  }

  struct Candidate {
    PackedState state;
    std::int64_t parent;
    int letter;
  };
  std::size_t level_begin = 0;
  int depth = 0;
  while (level_begin < census.entries.size() && !census.overflow) {
    const std::size_t level_end = census.entries.size();
    const std::size_t count = level_end - level_begin;
    const int workers = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(options.threads), count));
    std::vector<std::vector<Candidate>> found(static_cast<std::size_t>(workers));
    std::vector<std::uint64_t> truncated(static_cast<std::size_t>(workers), 0);
    auto work = [&](int w) {
      const std::size_t lo = level_begin + count * static_cast<std::size_t>(w) / static_cast<std::size_t>(workers);
      const std::size_t hi = level_begin + count * static_cast<std::size_t>(w + 1) / static_cast<std::size_t>(workers);
      PackedState next;
      for (std::size_t j = lo; j < hi; ++j) {
        const PackedState& cur = census.entries[j].state;
        for (int letter : letters) {
          if (!packed_move(rs, cur, letter, census.k_limit, census.l_limit, next)) {
            ++truncated[static_cast<std::size_t>(w)];
            continue;
          }
          if (seen.count(next)) continue;  // read-only during the parallel phase
          found[static_cast<std::size_t>(w)].push_back({next, static_cast<std::int64_t>(j), letter});
        }
      }
    };
    if (workers == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
      for (auto& th : pool) th.join();
    }

    std::vector<Candidate> all;
    for (auto& f : found) {
      all.insert(all.end(), f.begin(), f.end());
      f.clear();
    }
    for (auto t : truncated) census.truncations += t;
    std::sort(all.begin(), all.end(), [](const Candidate& x, const Candidate& y) {
      if (x.state != y.state) return x.state < y.state;
      if (x.parent != y.parent) return x.parent < y.parent;
      return x.letter < y.letter;
    });
    ++depth;
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (j > 0 && all[j].state == all[j - 1].state) continue;
      if (census.entries.size() >= options.max_states) {
        census.overflow = true;
        break;
      }
      seen.insert(all[j].state);
      census.entries.push_back({all[j].state, depth, all[j].parent, all[j].letter});
    }
    level_begin = level_end;
  }
  return census;
}

ConnectResult connect_search(const ReflTuple& from, const ReflTuple& to, int coeff_bound, std::size_t max_states) {
  if (from.kind() != to.kind()) throw std::invalid_argument("connect_search: tuples of different kinds");
  if (from.size() != to.size()) throw std::invalid_argument("connect_search: tuples of different lengths");
  if (!(from.product() == to.product()))
    throw ProductMismatchError("connect_search: the tuples have different products");
  ConnectResult result;
  if (from == to) {
    result.word = BraidWord{};
    result.states = 1;
    return result;
  }
  const FiniteRootSystem& rs = root_system(from.kind());
  const int klim = checked_limit(coeff_bound, std::max(max_abs_k(from), max_abs_k(to)));
  const int llim = checked_limit(coeff_bound, std::max(max_abs_l(from), max_abs_l(to)));
  const std::vector<int> letters = all_letters(from.size());

  struct Node {
    PackedState state;
    std::int64_t parent;
    int letter;
  };
  struct Side {
    std::vector<Node> nodes;
    std::unordered_map<PackedState, std::int64_t, PackedStateHash> index;
    std::size_t level_begin = 0;
  };
  Side sides[2];
  for (int s = 0; s < 2; ++s) {
    const PackedState p = pack(s == 0 ? from : to);
    sides[s].nodes.push_back({p, -1, 0});
    sides[s].index.emplace(p, 0);
  }
  auto path = [&](const Side& side, std::int64_t i) {
    BraidWord w;
    while (i > 0) {
      w.push_back(side.nodes[static_cast<std::size_t>(i)].letter);
      i = side.nodes[static_cast<std::size_t>(i)].parent;
    }
    std::reverse(w.begin(), w.end());
    return w;
  };

  PackedState next;
  while (true) {
    const bool alive0 = sides[0].level_begin < sides[0].nodes.size();
    const bool alive1 = sides[1].level_begin < sides[1].nodes.size();
    if (!alive0 || !alive1) break;
    const std::size_t f0 = sides[0].nodes.size() - sides[0].level_begin;
    const std::size_t f1 = sides[1].nodes.size() - sides[1].level_begin;
    const int s = f0 <= f1 ? 0 : 1;
    Side& me = sides[s];
    const Side& other = sides[1 - s];
    const std::size_t end = me.nodes.size();
    for (std::size_t j = me.level_begin; j < end; ++j) {
      for (int letter : letters) {
        if (!packed_move(rs, me.nodes[j].state, letter, klim, llim, next)) continue;
        if (me.index.count(next)) continue;
        const auto id = static_cast<std::int64_t>(me.nodes.size());
        me.nodes.push_back({next, static_cast<std::int64_t>(j), letter});
        me.index.emplace(next, id);
        auto hit = other.index.find(next);
        if (hit != other.index.end()) {
          const BraidWord fwd = path(sides[0], s == 0 ? id : hit->second);
          const BraidWord bwd = path(sides[1], s == 1 ? id : hit->second);
          BraidWord word = fwd;
          const BraidWord back = inverse_word(bwd);
          word.insert(word.end(), back.begin(), back.end());
          result.states = sides[0].nodes.size() + sides[1].nodes.size();
          if (!(apply_braid(word, from) == to)) throw std::logic_error("connect_search produced a wrong word");
          result.word = std::move(word);
          return result;
        }
        if (sides[0].nodes.size() + sides[1].nodes.size() >= max_states) {
          result.overflow = true;
          result.states = sides[0].nodes.size() + sides[1].nodes.size();
          return result;
        }
      }
    }
    me.level_begin = end;
  }
  result.states = sides[0].nodes.size() + sides[1].nodes.size();
  return result;
}

// ---------------------------------------------------------------------------

GroupMatrix phi_product(Kind kind, const std::vector<RootVector>& roots) {
  GroupMatrix m = GroupMatrix::identity(kind, Ambient::V);
  for (const auto& r : roots) m = m * reflection_matrix(kind, r, Ambient::V);
  return m;
}

TwoOrbitReport d4_two_orbit_witness() {
  const Kind k = Kind::D4;
  RootVector h = highest_root(k);
  h.k = 1;
  h.l = -1;
  ReflTuple t(k, {simple_root(k, 1, -1), simple_root(k, 3, -1), simple_root(k, 4, -1), h, simple_root(k, 2),
                  simple_root(k, 2, -1)});
  const Triple cox = coxeter_triple(k);
  Triple expected = cox;
  expected.mu(finite_type_data(k).n) = -1;  // alpha_2 - b instead of alpha_2
  const GroupMatrix c = coxeter_transformation(k, Realization::W);
  return TwoOrbitReport{t,
                        t.product(),
                        expected,
                        cox,
                        t.product() == expected,
                        !(t.product() == cox),
                        phi_product(k, t.entries()) == c && phi_product(k, coxeter_roots(k)) == c};
}

bool has_normal_shape(const ReflTuple& t) {
  const FiniteTypeData& d = finite_type_data(t.kind());
  if (t.size() != d.n + 2) return false;
  int pos = 0;
  for (int i = 1; i <= d.n; ++i) {
    if (i == d.t) continue;
    const RootVector& r = t[pos++];
    if (r.beta != simple_root(t.kind(), i).beta || r.l != 0) return false;
  }
  const RootVector& h = t[pos++];
  if (h.beta != highest_root(t.kind()).beta || h.l != -1) return false;
  const RootVector& u = t[pos];
  const RootVector& v = t[pos + 1];
  return u.beta == v.beta && u.l == v.l;
}

LambdaCheck lambda_t_check(const ReflTuple& t) {
  if (!has_normal_shape(t)) throw ShapeError("tuple does not have the normalized shape");
  if (!(t.product() == coxeter_triple(t.kind())))
    throw ProductMismatchError("tuple does not multiply to the Coxeter transformation");
  const FiniteTypeData& d = finite_type_data(t.kind());
  const RootVector& u = t[d.n];
  const RootVector& v = t[d.n + 1];
  LambdaCheck c{u.beta[static_cast<std::size_t>(d.t - 1)], u.l, v.k - u.k, false};
  c.valid = (c.lambda_t == 1 && c.ell == 0 && c.x == 1) || (c.lambda_t == d.m_t - 1 && c.ell == -1 && c.x == -1);
  return c;
}

ConjugationOrbit p_conjugation_orbit(Kind kind, int coeff_bound) {
  if (coeff_bound < 0) throw std::invalid_argument("coefficient bound must be non-negative");
  const FiniteTypeData& d = finite_type_data(kind);
  std::vector<RootVector> gens;
  for (int i = 1; i <= d.n; ++i)
    if (i != d.t) gens.push_back(simple_root(kind, i));
  for (int j = -coeff_bound; j <= coeff_bound; ++j) {
    RootVector h = highest_root(kind);
    h.l = -j;
    gens.push_back(h);
  }
  std::set<RootVector> seen{simple_root(kind, d.t)};
  std::deque<RootVector> queue{simple_root(kind, d.t)};
  while (!queue.empty()) {
    const RootVector cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      const RootVector r = reflect_root(kind, g, cur);
      if (std::abs(r.l) > coeff_bound) continue;
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  ConjugationOrbit out{kind, coeff_bound, {seen.begin(), seen.end()}, {}, {}, true, true};
  std::set<std::vector<int>> finite;
  for (const auto& r : out.reached) finite.insert(r.beta);
  for (const auto& b : finite) out.reached_finite.push_back(RootVector{b, 0, 0});
  const FiniteRootSystem& rs = root_system(kind);
  const auto ti = static_cast<std::size_t>(d.t - 1);
  // the node adjacent to the highest root
  int neighbor = 0;
  const RootVector h = highest_root(kind);
  for (int i = 1; i <= d.n; ++i)
    if (pairing(kind, h, simple_root(kind, i)) != 0) neighbor = i;
  for (int p = 0; p < rs.num_positive(); ++p) {
    const std::vector<int>& beta = rs.root(p);
    if (beta[ti] == 1) {
      out.lambda_one.push_back(RootVector{beta, 0, 0});
      if (!finite.count(beta)) out.all_lambda_one_reached = false;
    }
    if (kind != Kind::D4 && beta[ti] == d.m_t - 1 && beta[static_cast<std::size_t>(neighbor - 1)] != 1)
      out.neighbor_condition = false;
  }
  return out;
}

}  // namespace ellweyl
