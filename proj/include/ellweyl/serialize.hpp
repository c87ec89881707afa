#ifndef ELLWEYL_SERIALIZE_HPP
#define ELLWEYL_SERIALIZE_HPP

// JSON forms: RootVector {beta, k, l}; Triple {kind, w_fin, lambda, mu};
// braid words as signed integer arrays; censuses as JSON lines
// {entries, depth} plus a summary object.

#include <cstdint>
#include <ostream>
#include <string>

#include <json.hpp>

#include "ellweyl/hurwitz.hpp"
#include "ellweyl/scherk.hpp"

namespace ellweyl {

using Json = nlohmann::json;

Json to_json(const RootVector& r);
RootVector root_from_json(const Json& j);

Json to_json(const Triple& x);
Triple triple_from_json(const Json& j);

/// {kind, entries}
Json to_json(const ReflTuple& t);
ReflTuple tuple_from_json(const Json& j);

Json braid_to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

Json to_json(const LengthCertificate& c);

/// One line per state: {"depth": d, "entries": [...]}.
void write_census_lines(std::ostream& out, const OrbitCensus& census);

/// {kind, bound, states, truncations, overflow, max_states, seed, seed_tuple}
Json census_summary(const OrbitCensus& census, std::uint64_t rng_seed);

/// Stable 64-bit FNV-1a hash, rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace ellweyl

#endif  // ELLWEYL_SERIALIZE_HPP
