#ifndef ELLWEYL_BILINEAR_HPP
#define ELLWEYL_BILINEAR_HPP

// Ambient spaces and exact rational linear algebra on them.
//
// Basis order is fixed as (alpha_1..alpha_n, a, b, b', a'):
//   V      = span(alpha_i, a, b)          dim n+2, signature (n, 0, 2)
//   Vtilde = V + span(b')                 dim n+3, signature (n+1, 1, 1)
//   Vhat   = Vtilde + span(a')            dim n+4, signature (n+2, 2, 0)
// with (b|b') = (a|a') = 1 and every other pairing involving a, b, b', a'
// equal to zero.

#include <vector>

#include "ellweyl/rootsys.hpp"
#include "ellweyl/types.hpp"

namespace ellweyl {

enum class Ambient { V, Vtilde, Vhat };

std::string_view to_string(Ambient ambient);

int ambient_dim(Kind kind, Ambient ambient);

/// Coordinate positions of the radical and hyperbolic-partner vectors.
struct BasisIndex {
  int n;
  int a() const { return n; }
  int b() const { return n + 1; }
  int b_prime() const { return n + 2; }
  int a_prime() const { return n + 3; }
};

IntMatrix gram_matrix(Kind kind, Ambient ambient);

/// Test hook: while on, every Gram matrix makes a non-isotropic. Used as a
/// negative control for the verification suite.
void set_gram_sabotage(bool on);

/// Coordinates of a root in the given ambient.
IntVector embed(Kind kind, const RootVector& root, Ambient ambient);

struct Signature {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Exact signature by congruence diagonalization over Q.
/// Throws std::invalid_argument on a non-symmetric matrix.
Signature signature(const RationalMatrix& m);
Signature signature(const IntMatrix& m);

/// Reduced row-echelon form; zero rows removed.
RationalMatrix rref(RationalMatrix m);

/// Basis (as rows) of {x : m x = 0}.
RationalMatrix kernel(const RationalMatrix& m);

int rank(const RationalMatrix& m);

/// A subspace of an ambient space, stored as an RREF row basis so that
/// equality of subspaces is equality of the stored matrices.
class RationalSubspace {
 public:
  RationalSubspace(Kind kind, Ambient ambient, const RationalMatrix& rows);

  static RationalSubspace span(Kind kind, Ambient ambient, const std::vector<IntVector>& vectors);
  static RationalSubspace full(Kind kind, Ambient ambient);

  Kind kind() const { return kind_; }
  Ambient ambient() const { return ambient_; }
  int dim() const { return static_cast<int>(basis_.rows()); }
  const RationalMatrix& basis() const { return basis_; }
  /// `v` is a single row.
  bool contains(const RationalMatrix& v) const;
  bool contains(const IntVector& v) const;

  friend bool operator==(const RationalSubspace& x, const RationalSubspace& y) {
    return x.kind_ == y.kind_ && x.ambient_ == y.ambient_ && x.basis_ == y.basis_;
  }

 private:
  Kind kind_;
  Ambient ambient_;
  RationalMatrix basis_;
};

/// Kernel of (m - I) for a linear map m of the ambient.
RationalSubspace fixed_space(Kind kind, Ambient ambient, const IntMatrix& m);

/// {v : (v | s) = 0 for all s in S}. In a degenerate ambient the result
/// contains the radical, so dim S + dim S^perp may exceed the ambient dim.
RationalSubspace orth_complement(const RationalSubspace& s);

/// True iff the Gram form vanishes identically on S.
bool is_null_space(const RationalSubspace& s);

}  // namespace ellweyl

#endif  // ELLWEYL_BILINEAR_HPP
