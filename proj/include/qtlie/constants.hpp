#pragma once

// Structure-constant export of g_{2n,ρ}(R) and the reader used to re-check it.
//
// Ring specs:
//   Q(i) or C              the base field
//   C+Cop                  C ⊕ C^op with the swap
//   M<m>                   M_m with the transpose, e.g. M2
//   Mt2                    M_2 with the symplectic-type involution
//   CK4                    the Klein four group algebra
//   op(<spec>)             S ⊕ S^op
//   quotient(<q,θ1,θ2>;<f>;<g>)   C_q/J(f,g), e.g. quotient(1,1,1;T-2;T-3)
//   torus(<q,θ1,θ2>)       the quantum torus itself (symbolic table only)

#include <optional>
#include <string>

#include <json.hpp>

#include "qtlie/classify.hpp"

namespace qtlie {

struct RingSpec {
  std::string text;
  FinAlgPtr algebra;                   // null for the torus
  std::optional<TorusParams> torus;    // set for torus(...)
};

/// Throws ParseError on an empty or malformed spec.
RingSpec parse_ring_spec(const std::string& text);

/// {n, rho, ring, basis, brackets: [[i, j, [[k, coeff]...]]...]} with i < j,
/// zero brackets omitted. For the torus the table is symbolic: brackets of
/// generator patterns with coefficients a = t1 and b = t2.
nlohmann::json constants_json(int n, int rho, const RingSpec& ring);

/// Rebuilds the bracket table from the export; the FinLie constructor
/// re-checks antisymmetry and Jacobi. Throws std::invalid_argument on a
/// malformed document.
FinLie read_constants(const nlohmann::json& doc);

}  // namespace qtlie
