#ifndef ELLWEYL_INTERVAL_HPP
#define ELLWEYL_INTERVAL_HPP

// The interval [id, c] of the absolute order, restricted to the elements
// met as prefixes of the factorizations in a census.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ellweyl/hurwitz.hpp"
#include "ellweyl/serialize.hpp"

namespace ellweyl {

class NotReducedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntervalElement {
  Triple element;
  int length = 0;
  /// Up to kMaxWitnesses pairs (factorization index, cut).
  std::vector<std::pair<std::size_t, int>> witnesses;
  std::size_t witness_count = 0;
  int scherk_length = -1;  // filled by build_poset

  friend bool operator==(const IntervalElement&, const IntervalElement&) = default;
};

inline constexpr std::size_t kMaxWitnesses = 4;

struct CoverEdge {
  std::size_t from;
  std::size_t to;
  RootVector root;  // from^{-1} to = s_root
  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

struct IntervalPoset {
  Kind kind;
  int coeff_bound = 0;
  std::size_t factorizations = 0;
  bool complete = false;
  std::vector<IntervalElement> nodes;  // sorted by (length, serialized element)
  std::vector<CoverEdge> covers;       // sorted by (from, to)

  std::optional<std::size_t> find(const Triple& x) const;
  std::size_t bottom() const;  // throws if absent
  std::size_t top() const;
  int max_length() const;

  friend bool operator==(const IntervalPoset&, const IntervalPoset&) = default;
};

/// The n+3 partial products. Throws NotReducedError unless the tuple is
/// certified reduced.
std::vector<IntervalElement> prefixes_of(const ReflTuple& t);

/// Nodes are the prefixes of every census state; covers are consecutive
/// prefixes. The seed is certified reduced once; every census state shares
/// its product and length.
IntervalPoset build_poset(const OrbitCensus& census);

/// Edges of the transitive reduction of the relation generated by `edges`
/// on `count` vertices. Requires acyclicity.
std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    std::size_t count, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

struct PosetReport {
  bool unique_bottom = false;
  bool unique_top = false;
  bool graded = false;           // every cover raises length by one
  bool covers_reduced = false;   // covers equal their transitive reduction
  bool scherk_bounded = false;   // Scherk length <= length at every node
  std::size_t scherk_equal = 0;  // nodes where the two agree
  std::vector<std::size_t> rank_sizes;
};

PosetReport check_poset(const IntervalPoset& poset);

enum class Comparison { Yes, NoInCensus, Unknown };

struct LeqResult {
  Comparison answer;
  /// For Yes: roots r_1..r_k with x s_{r_1} .. s_{r_k} = y.
  std::vector<RootVector> chain;
};

/// Three-valued: a negative answer is given only when lengths rule the
/// pair out or the census was complete.
LeqResult leq(const IntervalPoset& poset, std::size_t x, std::size_t y);

/// Stable node id: hash of the serialized element.
std::string node_id(const Triple& x);

enum class PosetFormat { Json, Dot };

std::optional<PosetFormat> parse_poset_format(std::string_view name);
std::string export_poset(const IntervalPoset& poset, PosetFormat format);
IntervalPoset import_poset_json(const std::string& text);

}  // namespace ellweyl

#endif  // ELLWEYL_INTERVAL_HPP
