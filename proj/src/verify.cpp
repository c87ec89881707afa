#include "ellweyl/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <chrono>
#include <random>
#include <set>
#include <sstream>

#include "ellweyl/bilinear.hpp"
#include "ellweyl/group.hpp"
#include "ellweyl/hurwitz.hpp"
#include "ellweyl/interval.hpp"
#include "ellweyl/scherk.hpp"

namespace ellweyl {

namespace {

class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw CheckFailure(what);
}

std::mt19937_64 rng_for(const VerifyOptions& o, Kind kind, std::uint64_t salt) {
  std::seed_seq seq{o.seed, static_cast<std::uint64_t>(kind), salt};
  return std::mt19937_64(seq);
}

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

RootVector random_root(Kind kind, std::mt19937_64& rng, int coeff) {
  const FiniteRootSystem& rs = root_system(kind);
  return RootVector{rs.root(uniform(rng, 0, rs.size() - 1)), uniform(rng, -coeff, coeff), uniform(rng, -coeff, coeff)};
}

Triple random_triple(Kind kind, std::mt19937_64& rng) {
  Triple x = identity_triple(kind);
  const int len = uniform(rng, 1, 6);
  for (int i = 0; i < len; ++i) x = x * reflection_triple(kind, random_root(kind, rng, 2));
  return x;
}

BraidWord random_word(std::mt19937_64& rng, int tuple_len, int min_len, int max_len) {
  BraidWord w(static_cast<std::size_t>(uniform(rng, min_len, max_len)));
  for (int& x : w) x = uniform(rng, 1, tuple_len - 1) * (uniform(rng, 0, 1) ? 1 : -1);
  return w;
}

std::vector<GroupMatrix> v_matrices(const ReflTuple& t) {
  std::vector<GroupMatrix> m;
  for (const auto& r : t.entries()) m.push_back(reflection_matrix(t.kind(), r, Ambient::V));
  return m;
}

// (s_1 .. ^s_t .. s_n s_h, -h, alpha_t), built from finite data only.
Triple expected_coxeter_triple(Kind kind) {
  const FiniteTypeData& d = finite_type_data(kind);
  IntMatrix w = IntMatrix::Identity(d.n, d.n);
  for (int i = 1; i <= d.n; ++i)
    if (i != d.t) w = w * finite_reflection(kind, simple_root(kind, i).beta);
  w = w * finite_reflection(kind, d.marks);
  IntVector lambda(d.n), mu = IntVector::Zero(d.n + 1);
  for (int i = 0; i < d.n; ++i) lambda(i) = -d.marks[static_cast<std::size_t>(i)];
  mu(d.t - 1) = 1;
  return Triple{kind, w, lambda, mu};
}

std::string str(std::ostringstream& s) { return s.str(); }

// ---------------------------------------------------------------------------

std::string check_table(Kind kind, const VerifyOptions&) {
  static const std::map<Kind, std::array<int, 4>> expected = {
      {Kind::D4, {4, 2, 2, 24}}, {Kind::E6, {6, 4, 3, 72}}, {Kind::E7, {7, 4, 4, 126}}, {Kind::E8, {8, 4, 6, 240}}};
  const FiniteTypeData& d = finite_type_data(kind);
  const auto& e = expected.at(kind);
  const int roots = static_cast<int>(finite_roots(kind).size());
  require(d.n == e[0] && d.t == e[1] && d.m_t == e[2], "table values n, t, m_t differ");
  require(roots == e[3], "finite root count " + std::to_string(roots));
  require(std::count(d.marks.begin(), d.marks.end(), d.m_t) == 1, "maximal mark is not unique");
  require(highest_root(kind).beta == d.marks, "highest root differs from the marks");
  std::ostringstream s;
  s << "n=" << d.n << " t=" << d.t << " m_t=" << d.m_t << " roots=" << roots;
  return str(s);
}

std::string check_signature(Kind kind, const VerifyOptions&) {
  const int n = finite_type_data(kind).n;
  const std::array<std::pair<Ambient, Signature>, 3> expected{{{Ambient::V, {n, 0, 2}},
                                                                {Ambient::Vtilde, {n + 1, 1, 1}},
                                                                {Ambient::Vhat, {n + 2, 2, 0}}}};
  std::ostringstream s;
  for (const auto& [amb, sig] : expected) {
    const Signature got = signature(gram_matrix(kind, amb));
    require(got == sig, std::string(to_string(amb)) + " signature (" + std::to_string(got.positive) + "," +
                            std::to_string(got.negative) + "," + std::to_string(got.zero) + ")");
    s << to_string(amb) << "=(" << got.positive << "," << got.negative << "," << got.zero << ") ";
  }
  return str(s);
}

std::string check_reflection_length(Kind kind, const VerifyOptions&) {
  const int n = finite_type_data(kind).n;
  const BasisIndex idx{n};
  const GroupMatrix c = coxeter_transformation(kind, Realization::What);
  const GroupMatrix z = triple_to_matrix(central_z(kind), Ambient::Vhat);
  const int dim = ambient_dim(kind, Ambient::Vhat);
  const RationalSubspace radical = RationalSubspace::span(
      kind, Ambient::Vhat, {IntVector::Unit(dim, idx.a()), IntVector::Unit(dim, idx.b())});
  for (int j = -3; j <= 3; ++j) {
    const GroupMatrix m = c * z.pow(j);
    const LengthCertificate cert = scherk_length(m);
    require(cert.length == n + 2, "Scherk length " + std::to_string(cert.length) + " for j=" + std::to_string(j));
    require(fixed_space(m) == radical, "fixed space is not span(a, b) for j=" + std::to_string(j));
  }
  return "length " + std::to_string(n + 2) + " for c z^j, j=-3..3";
}

std::string check_coxeter_triple(Kind kind, const VerifyOptions&) {
  const Triple expected = expected_coxeter_triple(kind);
  require(coxeter_triple(kind) == expected, "product of the generator triples differs from the display");
  const EllipticBasis basis = elliptic_basis(kind);
  const FiniteTypeData& d = finite_type_data(kind);
  GroupMatrix m = GroupMatrix::identity(kind, Ambient::Vtilde);
  for (int i = 1; i <= d.n; ++i)
    if (i != d.t) m = m * reflection_matrix(kind, basis.alpha[static_cast<std::size_t>(i - 1)], Ambient::Vtilde);
  m = m * reflection_matrix(kind, basis.alpha0(), Ambient::Vtilde);
  m = m * reflection_matrix(kind, basis.alpha[static_cast<std::size_t>(d.t - 1)], Ambient::Vtilde);
  m = m * reflection_matrix(kind, basis.alpha_tstar(), Ambient::Vtilde);
  require(triple_to_matrix(expected) == m, "matrix of the triple differs from the product of reflection matrices");
  return "(s_1..^s_t..s_n s_h, -h, alpha_t) confirmed";
}

std::string check_central(Kind kind, const VerifyOptions& o) {
  const Triple c = coxeter_triple(kind);
  const Triple z = central_z(kind);
  const auto m = order_in_W(projection_phi(c), 1000);
  require(m.has_value(), "order of c in W exceeds 1000");
  require(triple_pow(c, *m) == z, "c^m differs from z");
  require(coxeter_transformation(kind, Realization::Wtilde).pow(*m) == triple_to_matrix(z),
          "matrix c^m differs from E(a (x) b)");
  require(projection_phi(z).is_identity(), "phi(z) is not the identity");
  auto rng = rng_for(o, kind, 3);
  const GroupMatrix zm = triple_to_matrix(z);
  for (int i = 0; i < o.central_samples; ++i) {
    const Triple x = random_triple(kind, rng);
    require(z * x == x * z, "z does not commute with a sampled element");
    if (i % 10 == 0) {
      const GroupMatrix xm = triple_to_matrix(x);
      require(zm * xm == xm * zm, "z matrix does not commute with a sampled element");
    }
  }
  for (int k = 1; k <= o.central_powers; ++k) {
    const Triple zk = triple_pow(z, k);
    require(!(zk == identity_triple(kind)), "z^" + std::to_string(k) + " is the identity");
    require(zk.mu(finite_type_data(kind).n) == k, "z^k does not have mu = k b");
  }
  return "m=" + std::to_string(*m) + ", central on " + std::to_string(o.central_samples) + " samples, z^k != id for k<=" +
         std::to_string(o.central_powers);
}

std::string check_two_orbit(Kind, const VerifyOptions&) {
  const TwoOrbitReport r = d4_two_orbit_witness();
  require(r.product_matches, "product differs from (s1 s3 s4 s_h, -h, a2 - b)");
  require(r.differs_from_coxeter, "product equals the Coxeter transformation");
  require(r.coxeter.mu(1) == 1 && r.coxeter.mu(4) == 0, "Coxeter mu is not alpha_2");
  require(r.phi_product_is_c, "images in W do not multiply to c");
  return "product mu = alpha_2 - b, c mu = alpha_2, both map to c";
}

std::string check_explicit_braid(Kind, const VerifyOptions&) {
  const Kind k = Kind::D4;
  const ReflTuple src = d4_tau_source();
  require(src.product() == coxeter_triple(k), "source tuple does not multiply to c");
  RootVector h_minus_b = highest_root(k);
  h_minus_b.l = -1;
  const ReflTuple middle(k, {simple_root(k, 2, 0, -1), simple_root(k, 2, -1, -1), simple_root(k, 1), simple_root(k, 3),
                             simple_root(k, 4), h_minus_b});
  require(apply_braid(d4_tau_inner_word(), src) == middle, "intermediate tuple differs");
  require(apply_braid(d4_tau_word(), src) == standard_tuple(k), "final tuple differs");
  return "intermediate and final tuples reproduced (rightmost factor first)";
}

std::string check_normal_form(Kind kind, const VerifyOptions& o) {
  auto rng = rng_for(o, kind, 6);
  for (int i = 0; i < o.normal_form_pairs; ++i) {
    const Triple x = random_triple(kind, rng);
    const Triple y = random_triple(kind, rng);
    const GroupMatrix mx = triple_to_matrix(x);
    require(triple_to_matrix(x * y) == mx * triple_to_matrix(y), "triple product disagrees with matrix product");
    require(matrix_to_triple(mx) == x, "round trip through the matrix failed");
  }
  return std::to_string(o.normal_form_pairs) + " pairs";
}

std::string check_hurwitz(Kind kind, const VerifyOptions& o) {
  auto rng = rng_for(o, kind, 7);
  const ReflTuple seed = standard_tuple(kind);
  const int len = seed.size();
  for (int i = 0; i < o.braid_words; ++i) {
    const ReflTuple state = apply_braid(random_word(rng, len, 0, 10), seed);
    const BraidWord w = random_word(rng, len, 1, 12);
    const ReflTuple u = apply_braid(w, state);
    require(product_triple(kind, u.entries()) == seed.product(), "product changed");
    require(apply_braid(inverse_word(w), u) == state, "inverse word does not undo the move");
    for (const auto& r : u.entries()) require(is_root(kind, r), "entry is not a root");
    const int a = uniform(rng, 1, len - 2);
    require(apply_braid({a, a + 1, a}, u) == apply_braid({a + 1, a, a + 1}, u), "braid relation fails");
    const int b = uniform(rng, 1, len - 1);
    const int c = uniform(rng, 1, len - 1);
    if (std::abs(b - c) >= 2) require(apply_braid({b, c}, u) == apply_braid({c, b}, u), "distant generators do not commute");
    require(apply_braid_matrices(w, v_matrices(state)) == v_matrices(u), "action is not compatible with phi");
  }
  return std::to_string(o.braid_words) + " words";
}

std::string check_lambda(Kind kind, const VerifyOptions& o) {
  const OrbitCensus census = orbit_explore(standard_tuple(kind), {o.lambda_bound, o.lambda_census_states, o.threads});
  const FiniteTypeData& d = finite_type_data(kind);
  const FiniteRootSystem& rs = root_system(kind);
  // shape test on the packed bytes first; only candidates are unpacked
  std::vector<int> simple_idx;
  for (int i = 1; i <= d.n; ++i)
    if (i != d.t) simple_idx.push_back(rs.index_of(simple_root(kind, i).beta));
  const int h_idx = rs.highest_root_index();
  std::size_t shaped = 0, first = 0, second = 0;
  for (const auto& e : census.entries) {
    const auto& b = e.state.bytes;
    bool ok = true;
    for (std::size_t p = 0; p < simple_idx.size() && ok; ++p) ok = b[3 * p] == simple_idx[p] && b[3 * p + 2] == 0;
    const std::size_t q = 3 * simple_idx.size();
    ok = ok && b[q] == h_idx && b[q + 2] == -1 && b[q + 3] == b[q + 6] && b[q + 5] == b[q + 8];
    if (!ok) continue;
    const ReflTuple t = unpack(kind, d.n + 2, e.state);
    const LambdaCheck c = lambda_t_check(t);
    require(c.valid, "shaped tuple with (lambda_t, l, x) = (" + std::to_string(c.lambda_t) + "," +
                         std::to_string(c.ell) + "," + std::to_string(c.x) + ")");
    ++shaped;
    (c.ell == 0 ? first : second) += 1;
  }
  require(shaped > 0, "no shaped tuple in the census");
  std::ostringstream s;
  s << census.size() << " states" << (census.overflow ? " (cap reached)" : "") << ", " << shaped
    << " shaped: " << first << " of type (1,0,1), " << second << " of type (m_t-1,-1,-1)";
  return str(s);
}

std::string check_conjugation(Kind kind, const VerifyOptions&) {
  const ConjugationOrbit orbit = p_conjugation_orbit(kind, 1);
  require(orbit.all_lambda_one_reached, "a root with lambda_t = 1 is not in the orbit");
  require(orbit.neighbor_condition, "a root with lambda_t = m_t - 1 has a neighbor coefficient other than 1");
  return std::to_string(orbit.lambda_one.size()) + " roots with lambda_t = 1, all reached";
}

std::string check_connect(Kind kind, const VerifyOptions& o) {
  const ReflTuple target = standard_tuple(kind);
  const OrbitCensus census = orbit_explore(target, {o.connect_bound, o.connect_census_states, o.threads});
  require(census.size() > 1, "census has no states besides the seed");
  auto rng = rng_for(o, kind, 10);
  std::set<std::size_t> picks;
  const std::size_t want = std::min<std::size_t>(static_cast<std::size_t>(o.connect_samples), census.size() - 1);
  while (picks.size() < want)
    picks.insert(std::uniform_int_distribution<std::size_t>(1, census.size() - 1)(rng));
  std::size_t total_len = 0, total_states = 0;
  for (std::size_t i : picks) {
    const ConnectResult r = connect_search(census.state(i), target, o.connect_bound, o.connect_max_states);
    require(r.word.has_value(), "inconclusive search from census state " + std::to_string(i));
    total_len += r.word->size();
    total_states += r.states;
  }
  std::ostringstream s;
  s << want << " of " << census.size() << " states connected, mean word length "
    << (want ? static_cast<double>(total_len) / static_cast<double>(want) : 0.0) << ", mean states searched "
    << (want ? total_states / want : 0);
  return str(s);
}

std::string check_interval(Kind kind, const VerifyOptions& o) {
  const OrbitCensus census = orbit_explore(standard_tuple(kind), {0, 1'000'000, o.threads});
  const IntervalPoset p = build_poset(census);
  const PosetReport r = check_poset(p);
  require(r.unique_bottom, "no unique bottom");
  require(r.unique_top, "no unique top");
  require(r.graded, "a cover edge does not raise length by one");
  require(r.covers_reduced, "covers are not the transitive reduction");
  require(r.scherk_bounded, "Scherk length exceeds node length");
  std::ostringstream s;
  s << p.nodes.size() << " nodes, " << p.covers.size() << " covers, ranks";
  for (auto c : r.rank_sizes) s << ' ' << c;
  s << ", Scherk = length at " << r.scherk_equal << " nodes";
  return str(s);
}

}  // namespace

const std::vector<CheckItem>& check_items() {
  static const std::vector<CheckItem> items = {
      {"S.table", "type table and finite root count", false, check_table},
      {"S.signature", "signatures of the three ambient forms", false, check_signature},
      {"C1.reflection_length", "Scherk length of c z^j equals n+2", false, check_reflection_length},
      {"C2.coxeter_triple", "normal form of the Coxeter transformation", false, check_coxeter_triple},
      {"C3.central_element", "c^m = z, z central and of infinite order", false, check_central},
      {"C4.two_orbit_witness", "D4 tuple multiplying to c in W but not to c in the cover", true, check_two_orbit},
      {"C5.explicit_braid", "explicit D4 braid reproduces both displayed lines", true, check_explicit_braid},
      {"C6.normal_form", "triple law agrees with matrices, round trip", false, check_normal_form},
      {"C7.hurwitz_invariants", "Hurwitz action invariants", false, check_hurwitz},
      {"C8.lambda_t", "normalized tuples satisfy the (lambda_t, l, x) constraint", true, check_lambda},
      {"C9.conjugation", "roots with lambda_t = 1 are P-conjugate to alpha_t", false, check_conjugation},
      {"C10.connectivity", "census states connect back to the standard tuple", true, check_connect},
      {"C11.interval_poset", "interval poset structure", true, check_interval},
  };
  return items;
}

CheckResult run_item(const CheckItem& item, Kind kind, const VerifyOptions& options) {
  CheckResult r{item.id, std::string(to_string(kind)), false, "", 0.0};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = item.run(kind, options);
    r.passed = true;
  } catch (const std::exception& e) {
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<CheckResult> run_paper_suite(const std::vector<Kind>& kinds, const VerifyOptions& options,
                                         const std::function<void(const CheckResult&)>& on_result) {
  struct Sabotage {
    explicit Sabotage(bool on) : on_(on) {
      if (on_) set_gram_sabotage(true);
    }
    ~Sabotage() {
      if (on_) set_gram_sabotage(false);
    }
    bool on_;
  } guard(options.sabotage_gram);
  std::vector<CheckResult> out;
  for (Kind kind : kinds)
    for (const auto& item : check_items()) {
      if (item.d4_only && kind != Kind::D4) continue;
      out.push_back(run_item(item, kind, options));
      if (on_result) on_result(out.back());
    }
  return out;
}

}  // namespace ellweyl
