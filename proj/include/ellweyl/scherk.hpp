#ifndef ELLWEYL_SCHERK_HPP
#define ELLWEYL_SCHERK_HPP

// Reflection length in the non-degenerate space Vhat. For an isometry M
// with fixed space F, the least number of reflections of O(Vhat) with
// product M is dim F^perp, plus 2 when F^perp is totally isotropic.

#include <optional>
#include <vector>

#include "ellweyl/group.hpp"
#include "ellweyl/hurwitz.hpp"

namespace ellweyl {

struct LengthCertificate {
  int dim_fixed = 0;
  int dim_fperp = 0;
  bool is_null = false;
  int length = 0;
  friend bool operator==(const LengthCertificate&, const LengthCertificate&) = default;
};

/// Throws std::invalid_argument unless M acts on Vhat.
LengthCertificate scherk_length(const GroupMatrix& m);

/// Lift of an element of the hyperbolic cover to Vhat.
LengthCertificate scherk_length(const Triple& x);

enum class Reducedness { Reduced, NotReduced, Indeterminate };

struct ReducedVerdict {
  Reducedness status;
  LengthCertificate certificate;
  /// For NotReduced: a strictly shorter tuple of roots with the same product.
  std::optional<std::vector<RootVector>> shorter;
};

/// Reduced when the Scherk bound equals the tuple length. Otherwise looks
/// for a repeated reflection, first in t itself and then along a bounded
/// Hurwitz search of `search_states` states; a repeat cancels to a tuple
/// two entries shorter.
ReducedVerdict verify_reduced(const ReflTuple& t, std::size_t search_states = 10'000);

}  // namespace ellweyl

#endif  // ELLWEYL_SCHERK_HPP
