#pragma once

#include <optional>
#include <vector>

#include "jaccomb/class_group.hpp"
#include "jaccomb/curve.hpp"
#include "jaccomb/polarization.hpp"
#include "jaccomb/stability.hpp"

namespace jaccomb {

// Translation-normalized stable-multidegree set: subtract the
// lexicographically smallest stable multidegree from every element.  Two
// general polarizations have the same signature exactly when their fine
// compactified Jacobians are equivalent by translation; the zero vector is
// always the first element.
using Signature = std::vector<Multidegree>;

struct JacobianClass {
  Polarization representative;  // general; first grid point exhibiting the signature
  Signature signature;
  std::optional<bool> abel_admissible;       // filled by the abel module
  std::optional<Multidegree> abel_witness;   // twist multidegree when admissible
};

// Requires q general.  Invariant under q -> q + e for integer vectors e.
Signature signature_of(const CurveGraph& g, const Polarization& q);

// Chamber scan: polarizations q_i = k_i / grid_denominator with
// 0 <= k_i < grid_denominator for the first gamma-1 coordinates and the last
// fixed by the total degree.  General grid points are deduplicated by
// signature; the representative is the first grid point (in lexicographic
// k-order) of each class, and the output is sorted by signature.  An empty
// result means the grid met no general polarization — refine and retry.
// The scan honours the JACCOMB_THREADS environment variable (0/unset = one
// thread per hardware core); results do not depend on the thread count.
std::vector<JacobianClass> classify(const CurveGraph& g, long long total_degree,
                                    long long grid_denominator);

// True when denominators d1 and d2 (d1 | d2) produce identical signature
// sets: the empirical certificate that the coarse grid already met every
// chamber class.
bool classification_stabilizes(const CurveGraph& g, long long total_degree, long long d1,
                               long long d2);

// Default scan resolution: 2 * lcm(1..gamma) * max(1, max delta over
// biconnected proper subcurves).  The arrangement's walls have half-integer
// offsets and 0/1 normals, so chambers contain points of this shape; callers
// certify completeness via classification_stabilizes.
long long default_grid_denominator(const CurveGraph& g);

}  // namespace jaccomb
