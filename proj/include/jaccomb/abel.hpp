#pragma once

#include <optional>
#include <vector>

#include "jaccomb/classification.hpp"
#include "jaccomb/curve.hpp"
#include "jaccomb/polarization.hpp"
#include "jaccomb/stability.hpp"

namespace jaccomb {

// Outcome of an Abel-admissibility test.  When admissible, `witness` holds the
// lexicographically smallest twisting multidegree certifying admissibility.
struct AbelResult {
  bool admissible = false;
  std::optional<Multidegree> witness;
};

// Whether the compactified Jacobian selected by the general polarization q
// admits an Abel map: on a curve without separating points this asks for a
// multidegree d with |d| = |q| + 1 and d_y - 1 > q_y - delta_y/2 on every
// biconnected proper subcurve y.  On a curve whose separating points split it
// into blocks, admissibility is decided blockwise via induce_on_blocks, and
// the witness is assembled from per-block witnesses (one extra unit of degree
// per block).  Requires q general and, when gamma >= 2, point records on g.
AbelResult abel_admissible(const CurveGraph& g, const Polarization& q);

// Whether a given twisting multidegree d certifies Abel admissibility for q.
// On a curve without separating points, d must satisfy |d| = |q| + 1 (else
// errc::degree_mismatch) and the strict inequalities above; with separating
// points, the restriction of d to each block must do so.
bool twist_is_admissible(const CurveGraph& g, const Polarization& q, const Multidegree& d);

// A general polarization whose compactified Jacobian receives the Abel map
// twisted by d: blockwise, q'_j = d_j - 1/gamma_B perturbed to general by an
// amount small enough (eps = 1/(2 gamma_B)) to keep d admissible.
Polarization polarization_for_twist(const CurveGraph& g, const Multidegree& d);

// Annotates classes produced by classify() with Abel admissibility, computed
// on each class representative; admissibility is translation-invariant, so
// the flag is well defined on the whole class.
std::vector<JacobianClass> admissible_classes(const CurveGraph& g,
                                              std::vector<JacobianClass> classes);

}  // namespace jaccomb
