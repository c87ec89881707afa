#ifndef ELLWEYL_GROUP_HPP
#define ELLWEYL_GROUP_HPP

// Elements of W (on V), of the hyperbolic cover W~ (on Vtilde) and of W^
// (on Vhat). Products follow (fg)(v) = f(g(v)) everywhere.
//
// An element of W~ has the normal form (w_fin, lambda, mu) and acts as
//   e(w_fin) * TR_b(lambda) * TR_a(mu)
// where e(w) extends w by fixing a, b, b' (and a'), and TR_x(v) is the
// Eichler transformation  u -> u - (u|v) x + (u|x) v - (v|v)/2 (u|x) x.
// On V this reduces to the transvection u -> u - (u|v) x; on Vtilde and
// Vhat it is the genuine product s_alpha s_{alpha + k x} of reflections.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ellweyl/bilinear.hpp"
#include "ellweyl/rootsys.hpp"
#include "ellweyl/types.hpp"

namespace ellweyl {

/// Thrown by matrix_to_triple for matrices outside W~.
class NotInGroupError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

bool is_isometry(Kind kind, Ambient ambient, const IntMatrix& m);

/// Integer matrix certified to preserve the Gram form of its ambient.
class GroupMatrix {
 public:
  /// Throws IsometryError unless m^T G m = G.
  GroupMatrix(Kind kind, Ambient ambient, IntMatrix m);

  static GroupMatrix identity(Kind kind, Ambient ambient);

  Kind kind() const { return kind_; }
  Ambient ambient() const { return ambient_; }
  const IntMatrix& matrix() const { return m_; }
  bool is_identity() const;

  GroupMatrix operator*(const GroupMatrix& other) const;
  GroupMatrix inverse() const;
  GroupMatrix pow(long long e) const;

  friend bool operator==(const GroupMatrix& x, const GroupMatrix& y) {
    return x.kind_ == y.kind_ && x.ambient_ == y.ambient_ && x.m_ == y.m_;
  }

 private:
  struct Unchecked {};
  GroupMatrix(Kind kind, Ambient ambient, IntMatrix m, Unchecked);

  Kind kind_;
  Ambient ambient_;
  IntMatrix m_;
};

RationalSubspace fixed_space(const GroupMatrix& g);

/// s_gamma(v) = v - (gamma|v) gamma. Throws NotARootError.
GroupMatrix reflection_matrix(Kind kind, const RootVector& gamma, Ambient ambient);

enum class Radical { a, b };

/// Eichler transformation TR_x(lambda) for an ambient vector lambda
/// orthogonal to x. `lambda` has n entries (finite part) or, for x = a,
/// optionally n+1 entries where the last is the coefficient of b.
GroupMatrix transvection(Kind kind, Radical x, const IntVector& lambda, Ambient ambient = Ambient::Vtilde);

/// A formal sum of f_i (x) g_i with f_i in Vtilde (n+3 coordinates) and g_i
/// in V (n+2 coordinates, the a-coordinate ignored since g_i is read mod U).
struct TensorWord {
  std::vector<std::pair<IntVector, IntVector>> terms;
};

/// v -> v - sum (g_i | v) f_i on Vtilde, without any certificate.
IntMatrix eichler_endomorphism(Kind kind, const TensorWord& word);

/// Same map, certified; throws IsometryError if the word does not give an
/// isometry.
GroupMatrix eichler(Kind kind, const TensorWord& word);

/// Semigroup law phi1 o phi2 = phi1 + phi2 - (phi1 | phi2).
TensorWord compose(Kind kind, const TensorWord& phi1, const TensorWord& phi2);

/// Normal form of an element of W~. `mu` has n+1 entries, the last being
/// the coefficient of b.
struct Triple {
  Kind kind;
  IntMatrix w_fin;
  IntVector lambda;
  IntVector mu;

  friend bool operator==(const Triple& x, const Triple& y) {
    return x.kind == y.kind && x.w_fin == y.w_fin && x.lambda == y.lambda && x.mu == y.mu;
  }
};

Triple identity_triple(Kind kind);
Triple triple_mul(const Triple& x, const Triple& y);
Triple triple_inverse(const Triple& x);
Triple triple_pow(const Triple& x, long long e);
Triple operator*(const Triple& x, const Triple& y);

/// (s_alpha, l alpha, k alpha + k l b) for gamma = alpha + k a + l b.
Triple reflection_triple(Kind kind, const RootVector& gamma);

/// Product of the reflection triples of `roots` in order.
Triple product_triple(Kind kind, const std::vector<RootVector>& roots);

/// Realize a triple on V (the image under phi), Vtilde, or Vhat (the unique
/// lift to W^).
GroupMatrix triple_to_matrix(const Triple& x, Ambient ambient = Ambient::Vtilde);

/// Inverse of triple_to_matrix on Vtilde. Throws NotInGroupError.
Triple matrix_to_triple(const GroupMatrix& m);

/// Restriction to V (top-left block). Throws std::invalid_argument if V is
/// not invariant.
GroupMatrix projection_phi(const GroupMatrix& m);
GroupMatrix projection_phi(const Triple& x);

/// w(v) for w in W_fin, v in simple-root coordinates.
IntMatrix finite_reflection(Kind kind, const std::vector<int>& beta);
IntMatrix finite_inverse(Kind kind, const IntMatrix& w);
bool in_finite_weyl_group(Kind kind, const IntMatrix& w);

enum class Realization { W, Wtilde, What };

/// Roots of s_1 ... ^s_t ... s_n s_0 s_t s_{t*} in canonical sign.
std::vector<RootVector> coxeter_roots(Kind kind);

Triple coxeter_triple(Kind kind);
GroupMatrix coxeter_transformation(Kind kind, Realization which);

/// Least m <= cap with M^m = I.
std::optional<int> order_in_W(const GroupMatrix& m, int cap = 1000);

/// z = E(a (x) b) = (id, 0, b).
Triple central_z(Kind kind);

}  // namespace ellweyl

#endif  // ELLWEYL_GROUP_HPP
