#ifndef ELLWEYL_HURWITZ_HPP
#define ELLWEYL_HURWITZ_HPP

// Braid group action on reflection tuples, bounded orbit censuses and
// connectivity search.
//
// sigma_i sends (g_i, g_{i+1}) to (g_{i+1}, g_{i+1}^{-1} g_i g_{i+1}); on
// roots this is (gamma_i, gamma_{i+1}) -> (gamma_{i+1}, s_{gamma_{i+1}}(gamma_i)).
// A BraidWord is a list of signed generator indices (+i for sigma_i, -i for
// its inverse) applied first element first.

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ellweyl/group.hpp"
#include "ellweyl/rootsys.hpp"

namespace ellweyl {

using BraidWord = std::vector<int>;

class ProductMismatchError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Ordered tuple of reflections, stored as canonical-sign roots, with the
/// product of the reflections cached as a Triple.
class ReflTuple {
 public:
  /// Canonicalizes each entry; throws NotARootError.
  ReflTuple(Kind kind, std::vector<RootVector> entries);

  Kind kind() const { return kind_; }
  int size() const { return static_cast<int>(entries_.size()); }
  const std::vector<RootVector>& entries() const { return entries_; }
  const RootVector& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const Triple& product() const { return product_; }

  friend bool operator==(const ReflTuple& x, const ReflTuple& y) {
    return x.kind_ == y.kind_ && x.entries_ == y.entries_;
  }

 private:
  friend ReflTuple sigma(int i, const ReflTuple& t, int direction);
  ReflTuple(Kind kind, std::vector<RootVector> entries, Triple product);

  Kind kind_;
  std::vector<RootVector> entries_;
  Triple product_;
};

/// s_delta(gamma) = gamma - (delta|gamma) delta, canonical sign.
RootVector reflect_root(Kind kind, const RootVector& delta, const RootVector& gamma);

/// i is 1-based; direction +1 for sigma_i, -1 for its inverse.
ReflTuple sigma(int i, const ReflTuple& t, int direction = 1);
ReflTuple apply_braid(const BraidWord& word, const ReflTuple& t);
BraidWord inverse_word(const BraidWord& word);

/// The same action on arbitrary group elements given as matrices, by
/// conjugation. Used to test compatibility with phi independently of the
/// root formula.
std::vector<GroupMatrix> apply_braid_matrices(const BraidWord& word, std::vector<GroupMatrix> elements);

/// (s_1, .., ^s_t, .., s_n, s_0, s_t, s_{t*}); product is the Coxeter
/// transformation.
ReflTuple standard_tuple(Kind kind);

/// The D4 braid (s4 s5)(s3 s4)(s2 s3)(s1 s2)(s2 s3 s4 s5)(s1 s2 s3 s4),
/// read as a composition of maps (rightmost factor first), as a BraidWord.
BraidWord d4_tau_word();
/// Only the inner factor (s2 s3 s4 s5)(s1 s2 s3 s4) of the above.
BraidWord d4_tau_inner_word();
/// The D4 tuple the braid acts on:
/// (a1 - a, a3 - a, a4 - a, h - b + a, a2 - b, a2 - b - a), h the highest root.
ReflTuple d4_tau_source();

// ---------------------------------------------------------------------------
// Packed states

inline constexpr int kMaxTupleLength = 10;

/// A tuple as bytes: per entry the positive-root index, k and l.
struct PackedState {
  std::array<std::int8_t, 3 * kMaxTupleLength> bytes{};
  friend auto operator<=>(const PackedState&, const PackedState&) = default;
  friend bool operator==(const PackedState&, const PackedState&) = default;
};

struct PackedStateHash {
  std::size_t operator()(const PackedState& s) const noexcept;
};

PackedState pack(const ReflTuple& t);
/// Entries only; the product is recomputed.
ReflTuple unpack(Kind kind, int length, const PackedState& s);

// ---------------------------------------------------------------------------
// Orbit census

struct OrbitOptions {
  /// Roots may exceed the largest |k| (resp. |l|) of the seed by at most
  /// this much.
  int coeff_bound = 0;
  std::size_t max_states = 1'000'000;
  int threads = 1;
};

struct CensusEntry {
  PackedState state;
  int depth;
  std::int64_t parent;  // -1 for the seed
  int letter;           // move from the parent, 0 for the seed
};

struct OrbitCensus {
  Kind kind;
  ReflTuple seed;
  OrbitOptions options;
  int k_limit = 0;
  int l_limit = 0;
  std::vector<CensusEntry> entries;  // breadth-first, sorted within a level
  std::uint64_t truncations = 0;     // expansions that left the bound
  bool overflow = false;             // max_states reached

  std::size_t size() const { return entries.size(); }
  ReflTuple state(std::size_t i) const { return unpack(kind, seed.size(), entries[i].state); }
  /// Braid word taking the seed to entry i.
  BraidWord word_to(std::size_t i) const;
  bool complete() const { return truncations == 0 && !overflow; }
};

/// Breadth-first closure under all sigma_i^{+-1}. Deterministic for any
/// thread count. Throws std::invalid_argument on bad options.
OrbitCensus orbit_explore(const ReflTuple& seed, const OrbitOptions& options);

struct ConnectResult {
  std::optional<BraidWord> word;  // empty: inconclusive
  std::size_t states = 0;
  bool overflow = false;
};

/// Bidirectional breadth-first search. Throws ProductMismatchError when
/// the products differ, std::invalid_argument when the lengths do.
ConnectResult connect_search(const ReflTuple& from, const ReflTuple& to, int coeff_bound, std::size_t max_states);

// ---------------------------------------------------------------------------
// Checks on specific factorizations

struct TwoOrbitReport {
  ReflTuple tuple;
  Triple product;
  Triple expected;     // (s1 s3 s4 s_h, -h, a2 - b)
  Triple coxeter;
  bool product_matches;
  bool differs_from_coxeter;
  bool phi_product_is_c;  // in W, both tuples multiply to c
};

/// The second D4 representative (s1, s3, s4, s_{h+a-b}, s2, s_{a2-a}) with
/// the roots taken from the normal-form display: a1 - a, a3 - a, a4 - a,
/// h + a - b, a2, a2 - a.
TwoOrbitReport d4_two_orbit_witness();

/// Tuple of reflections of V (k is kept but irrelevant) multiplied in W.
GroupMatrix phi_product(Kind kind, const std::vector<RootVector>& roots);

struct LambdaCheck {
  int lambda_t;
  int ell;
  int x;
  bool valid;
};

/// True iff t has the normalized shape
/// (a_i + k_i a (i != t), h - b + kbar a, beta + k a + l b, beta + k' a + l b).
bool has_normal_shape(const ReflTuple& t);
/// Throws ShapeError on shape mismatch and ProductMismatchError when the
/// product is not the Coxeter transformation.
LambdaCheck lambda_t_check(const ReflTuple& t);

struct ConjugationOrbit {
  Kind kind;
  int coeff_bound;
  /// Reached reflections as canonical roots beta + l b.
  std::vector<RootVector> reached;
  /// Positive finite roots whose reflection (some l) was reached.
  std::vector<RootVector> reached_finite;
  /// Positive finite roots with lambda_t = 1.
  std::vector<RootVector> lambda_one;
  bool all_lambda_one_reached;
  /// For E types: every beta with lambda_t = m_t - 1 has coefficient 1 at
  /// the node adjacent to the highest root. Always true for D4.
  bool neighbor_condition;
};

/// Closes {alpha_t} under conjugation by s_i (i != t) and s_{h - j b},
/// |j| <= coeff_bound, keeping |l| <= coeff_bound.
ConjugationOrbit p_conjugation_orbit(Kind kind, int coeff_bound);

}  // namespace ellweyl

#endif  // ELLWEYL_HURWITZ_HPP
