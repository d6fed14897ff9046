#pragma once

#include <vector>

#include "jaccomb/curve.hpp"
#include "jaccomb/polarization.hpp"
#include "jaccomb/rational.hpp"

namespace jaccomb {

// Line-bundle multidegree: one integer per component, compared and shifted
// componentwise.  Lexicographic vector order is used for all sorted output.
using Multidegree = std::vector<long long>;

long long total_degree(const Multidegree& d);
long long degree_of(const Multidegree& d, Subcurve y);

// Semistability: d_y >= q_y - delta_y/2 on every proper subcurve with y and
// y^c connected; checking those subcurves is equivalent to checking all of
// them.  Requires |d| = |q|.
bool is_semistable(const CurveGraph& g, const Polarization& q, const Multidegree& d);

// Stability: the same inequalities, strict.  For general q the two notions
// coincide on line bundles.
bool is_stable(const CurveGraph& g, const Polarization& q, const Multidegree& d);

// The complete lexicographically sorted list of stable multidegrees of total
// |q|.  Every stable d lies in the box q_i - delta_i/2 < d_i < q_i + delta_i/2
// (the singleton bounds extend from the biconnected inequalities), so a
// box scan with the last coordinate fixed by the total is exhaustive.
// Requires q general; the list size is always the complexity c(X).
std::vector<Multidegree> stable_multidegrees(const CurveGraph& g, const Polarization& q);

}  // namespace jaccomb
