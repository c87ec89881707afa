#ifndef ELLWEYL_ROOTSYS_HPP
#define ELLWEYL_ROOTSYS_HPP

// Static data for the tubular elliptic root systems D4(1,1), E6(1,1),
// E7(1,1), E8(1,1) and the closure of their finite root systems.
//
// Roots live in simple-root coordinates: gamma = beta + k*a + l*b where
// beta has one integer entry per finite simple root (Bourbaki numbering).
// The Gram matrix carries all metric data; there is no orthonormal model.

#include <array>
#include <compare>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ellweyl/types.hpp"

namespace ellweyl {

enum class Kind { D4, E6, E7, E8 };

inline constexpr std::array<Kind, 4> kAllKinds = {Kind::D4, Kind::E6, Kind::E7, Kind::E8};

std::string_view to_string(Kind kind);
std::optional<Kind> parse_kind(std::string_view name);

/// Table data of one finite simply-laced type. Indices are 1-based as in
/// Bourbaki; `marks[i-1]` is m_i.
struct FiniteTypeData {
  Kind kind;
  int n;
  int t;
  int m_t;
  std::vector<int> marks;
  std::vector<std::pair<int, int>> edges;  // i < j, 1-based
  int affine_attach;                       // the node alpha_0 attaches to

  /// Cartan matrix (= Gram matrix of the finite simple roots).
  IntMatrix cartan() const;
};

/// Static table for `kind`. Cross-validated on first access: the marks must
/// give the highest root and the diagram must be a tree.
const FiniteTypeData& finite_type_data(Kind kind);

struct RootVector {
  std::vector<int> beta;
  int k = 0;
  int l = 0;

  friend auto operator<=>(const RootVector&, const RootVector&) = default;
  friend bool operator==(const RootVector&, const RootVector&) = default;
};

RootVector operator-(const RootVector& r);
RootVector operator+(const RootVector& x, const RootVector& y);

/// First nonzero entry of beta positive. s_gamma = s_{-gamma}, so every
/// reflection is keyed by this representative.
RootVector canonical(const RootVector& r);
bool is_canonical(const RootVector& r);

/// Finite root system with lookup and precomputed pairing/reflection tables.
/// Roots are indexed 0..2N-1: the N positive roots sorted by (height, beta),
/// then their negatives in the same order (index p + N is -root(p)).
class FiniteRootSystem {
 public:
  explicit FiniteRootSystem(Kind kind);

  Kind kind() const { return kind_; }
  int rank() const { return n_; }
  int num_positive() const { return num_positive_; }
  int size() const { return static_cast<int>(roots_.size()); }

  const std::vector<int>& root(int index) const { return roots_[static_cast<std::size_t>(index)]; }
  /// -1 if beta is not a root.
  int index_of(std::span<const int> beta) const;
  int negate(int index) const { return index < num_positive_ ? index + num_positive_ : index - num_positive_; }
  bool is_positive(int index) const { return index < num_positive_; }

  int pairing(int i, int j) const { return pairing_[static_cast<std::size_t>(i * size() + j)]; }
  /// Index of s_{root(i)}(root(j)).
  int reflect(int i, int j) const { return reflect_[static_cast<std::size_t>(i * size() + j)]; }

  int pairing(std::span<const int> x, std::span<const int> y) const;
  const IntMatrix& cartan() const { return cartan_; }
  int highest_root_index() const { return num_positive_ - 1; }

 private:
  Kind kind_;
  int n_;
  int num_positive_ = 0;
  IntMatrix cartan_;
  std::vector<std::vector<int>> roots_;
  std::map<std::vector<int>, int> index_;
  std::vector<int> pairing_;
  std::vector<int> reflect_;
};

const FiniteRootSystem& root_system(Kind kind);

/// Full finite root system as RootVectors with k = l = 0, in index order.
std::vector<RootVector> finite_roots(Kind kind);

RootVector highest_root(Kind kind);

RootVector simple_root(Kind kind, int i, int k = 0, int l = 0);

/// Basis roots in the order [alpha_1..alpha_n, alpha_0, alpha_{t*}].
/// alpha_0 is stored with its true sign (-highest + b); pairings in the
/// elliptic diagram depend on it.
struct EllipticBasis {
  Kind kind;
  std::vector<RootVector> alpha;

  const RootVector& alpha0() const { return alpha[alpha.size() - 2]; }
  const RootVector& alpha_tstar() const { return alpha.back(); }
};

EllipticBasis elliptic_basis(Kind kind);

/// True iff beta is a finite root; k and l are unconstrained.
bool is_root(Kind kind, const RootVector& gamma);

/// Elliptic Gram pairing (only beta contributes: a and b span the radical).
int pairing(Kind kind, const RootVector& x, const RootVector& y);

enum class EdgeStyle { Single, DottedDouble };

/// Vertex ids: 0..n are the affine nodes, n + 1 is t*.
struct DiagramEdge {
  int u;
  int v;
  EdgeStyle style;
  friend bool operator==(const DiagramEdge&, const DiagramEdge&) = default;
};

std::vector<DiagramEdge> elliptic_diagram(Kind kind);
std::string diagram_vertex_label(Kind kind, int vertex);

std::string to_string(const RootVector& r);

}  // namespace ellweyl

#endif  // ELLWEYL_ROOTSYS_HPP
