#pragma once

#include <optional>
#include <span>
#include <vector>

#include "jaccomb/curve.hpp"
#include "jaccomb/rational.hpp"

namespace jaccomb {

// A polarization assigns an exact rational weight to every component; the
// total |q| must be an integer.  Values are immutable after construction.
class Polarization {
 public:
  explicit Polarization(std::vector<Rat> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  const Rat& operator[](int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<Rat>& entries() const { return entries_; }
  const Int& total() const { return total_; }  // |q|

 private:
  std::vector<Rat> entries_;
  Int total_;
};

// q_Y: the sum of q over the components of y; additive over disjoint unions.
Rat q_of(const Polarization& q, Subcurve y);

struct GeneralityResult {
  bool general = false;
  std::optional<Subcurve> witness;  // a violating subcurve when not general
};

// q is general when q_Y - delta_Y/2 is never an integer on a proper subcurve
// with both Y and Y^c connected; checking those subcurves suffices for the
// full definition (see is_general_bruteforce).
GeneralityResult check_general(const CurveGraph& g, const Polarization& q);
// Same test against a precomputed biconnected_subcurves list (hot loops).
GeneralityResult check_general(const CurveGraph& g, const Polarization& q,
                               std::span<const Subcurve> biconnected);
inline bool is_general(const CurveGraph& g, const Polarization& q) {
  return check_general(g, q).general;
}

// Oracle form of the definition: q is integral at Y when q_Z - delta_Z/2 is
// an integer for every connected component Z of Y and of Y^c; general means
// integral at no proper subcurve.  Scans all 2^gamma - 2 subsets.
bool is_general_bruteforce(const CurveGraph& g, const Polarization& q);

// Deform q to a general polarization with the same total.  Moves every
// subcurve sum by less than eps and never lowers any ceiling
// ceil(q_y - delta_y/2) on biconnected subcurves, so the stable multidegrees
// of the output are semistable for the input.  Returns q unchanged when it
// is already general.
Polarization perturb_to_general(const CurveGraph& g, const Polarization& q,
                                const Rat& eps = Rat(1));

struct InducedBlocks {
  Polarization q_prime;                     // general, |q'| = |q|, integral on every block
  std::vector<Polarization> block_polarizations;  // induced q^i, aligned with blocks
  SeparatingBlocks decomposition;
};

// The separating-block induction: peel leaf blocks of the block tree, and at
// each bridge shift the unique fractional remainder r in (-1/2, 1/2) of the
// leaf-side total across the bridge (leaf endpoint -r, far endpoint +r).
// The result q' has an integral total on every block, is general, and has
// the same stable multidegrees as q; the per-block restrictions are general
// polarizations on the blocks.  Requires general q and condition (†).
InducedBlocks induce_on_blocks(const CurveGraph& g, const Polarization& q);

}  // namespace jaccomb
