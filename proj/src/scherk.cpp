#include "ellweyl/scherk.hpp"

#include <map>

namespace ellweyl {

namespace {

// Drops the repeated pair (i, j) and conjugates the entries between them:
// t_i x t_i = prod over m of s_{t_i}(gamma_m).
std::optional<std::vector<RootVector>> cancel_repeat(const ReflTuple& t) {
  std::map<RootVector, int> first;
  for (int j = 0; j < t.size(); ++j) {
    auto [it, fresh] = first.emplace(t[j], j);
    if (fresh) continue;
    const int i = it->second;
    std::vector<RootVector> out;
    for (int m = 0; m < t.size(); ++m) {
      if (m == i || m == j) continue;
      out.push_back(m > i && m < j ? reflect_root(t.kind(), t[i], t[m]) : t[m]);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace

LengthCertificate scherk_length(const GroupMatrix& m) {
  if (m.ambient() != Ambient::Vhat) throw std::invalid_argument("scherk_length: element must act on Vhat");
  LengthCertificate c;
  const RationalSubspace f = fixed_space(m);
  const RationalSubspace fp = orth_complement(f);
  c.dim_fixed = f.dim();
  c.dim_fperp = fp.dim();
  c.is_null = fp.dim() > 0 && is_null_space(fp);
  c.length = c.is_null ? c.dim_fperp + 2 : c.dim_fperp;
  return c;
}

LengthCertificate scherk_length(const Triple& x) { return scherk_length(triple_to_matrix(x, Ambient::Vhat)); }

ReducedVerdict verify_reduced(const ReflTuple& t, std::size_t search_states) {
  ReducedVerdict v{Reducedness::Indeterminate, scherk_length(t.product()), std::nullopt};
  if (v.certificate.length > t.size()) throw std::logic_error("Scherk bound exceeds the tuple length");
  if (v.certificate.length == t.size()) {
    v.status = Reducedness::Reduced;
    return v;
  }
  auto shorter = cancel_repeat(t);
  if (!shorter && t.size() >= 2 && search_states > 1) {
    const OrbitCensus census = orbit_explore(t, {1, search_states, 1});
    for (std::size_t i = 1; i < census.size() && !shorter; ++i) shorter = cancel_repeat(census.state(i));
  }
  if (shorter) {
    if (!(product_triple(t.kind(), *shorter) == t.product())) throw std::logic_error("cancellation changed the product");
    v.status = Reducedness::NotReduced;
    v.shorter = std::move(shorter);
  }
  return v;
}

}  // namespace ellweyl
