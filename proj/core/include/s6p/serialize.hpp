// JSON and CSV encodings of the exact and float data. All encoders are
// deterministic: re-serializing identical data yields identical bytes.
//
// Form schema: {"degree": k, "terms": [{"indices": [i1 < ...],
//   "coeff": [{"exponents": [7 ints], "value": "p/q"}, ...]}, ...]}
// g2 schema: {"basis": [{"name": "xi_0", "matrix": [["p/q" x7] x7]}, ...],
//   "structure_constants": [[i, j, k, "p/q"], ...]}  (sparse triples)
#pragma once

#include <iosfwd>
#include <string>

#include "s6p/exterior.hpp"
#include "s6p/flows.hpp"
#include "s6p/g2.hpp"

namespace s6p {

std::string form_to_json(const PolyForm& f);
PolyForm form_from_json(const std::string& text);

std::string g2_basis_to_json(const G2Basis& g2);
G2Basis g2_basis_from_json(const std::string& text);

// The 7 x 7 imaginary-basis products regenerated from epsilon, for
// documentation; entries are signed basis labels like "e3", "-e2", "-1".
std::string multiplication_table_json();

// CSV with header t,x1,...,x7 (one parameter) or t1,t2,x1,...,x7 (two),
// 17 significant digits.
void trajectory_to_csv(const Trajectory& traj, std::ostream& out);
// JSON alternative with a meta block {generator, base_point, grid}.
std::string trajectory_to_json(const Trajectory& traj);

}  // namespace s6p
