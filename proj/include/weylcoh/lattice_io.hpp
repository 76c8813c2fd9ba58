#pragma once

// JSON lattice specs:
//   { "group": {"generators": [[[...], ...], ...], "dimension": d},
//     "rank": n, "action_generators": [[[...], ...], ...] }
// "dimension" is optional.  Matrices are lists of rows.  Entries are JSON
// integers or decimal strings (needed beyond 2^53).  The group is closed from
// its generators and the action is extended from the generator images.

#include <string>

#include "weylcoh/glattice.hpp"

namespace weylcoh {

/// Largest group the loader will close.
inline constexpr std::size_t kLatticeSpecGroupCap = 100'000;

/// Throws InvalidInput on malformed JSON (with line and column), schema
/// violations, non-unimodular generators, an oversized closure or a failed
/// homomorphism check.
GLattice parse_lattice_spec(const std::string& text);
GLattice load_lattice_spec(const std::string& path);

/// Integer as a JSON value: a number when |x| < 2^53, a decimal string otherwise.
std::string integer_json(const Integer& x);

}  // namespace weylcoh
