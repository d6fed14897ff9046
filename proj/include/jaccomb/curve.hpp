#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jaccomb/error.hpp"

namespace jaccomb {

// Subcurve enumeration is a 2^gamma bitset scan; beyond this the tool is the
// wrong shape for the problem, so constructions refuse larger curves.
inline constexpr int max_components = 24;

struct Component {
  std::string name;
  int genus = 0;  // geometric genus; metadata only, never enters the combinatorics
};

// Singular-point record: multiset of incident component indices, size >= 2.
// A node joining C_i and C_j is {i,j}; a node on a single component is {i,i}.
// A record contributes 1 to intersection(i,j) for every pair i != j of
// indices it contains (presence, not multiplicity).
struct PointRecord {
  std::vector<int> on;  // kept sorted ascending
};

// A subcurve is a nonempty union of components, stored as a bitmask over
// component indices.  Proper subcurves additionally exclude the full curve.
struct Subcurve {
  std::uint32_t mask = 0;

  bool contains(int i) const { return (mask >> i) & 1u; }
  int count() const { return __builtin_popcount(mask); }

  friend bool operator==(Subcurve a, Subcurve b) { return a.mask == b.mask; }
  friend bool operator<(Subcurve a, Subcurve b) { return a.mask < b.mask; }
};

// Immutable dual multigraph of a reduced connected curve with nodal-type
// singularities: vertices are the irreducible components C_i, the symmetric
// matrix entry (i,j) is the intersection length |C_i ∩ C_j|.  Point records
// are optional: delta-based operations need only the matrix, while
// separating-point queries require the records and error without them.
class CurveGraph {
 public:
  CurveGraph(std::vector<Component> components,
             std::vector<std::vector<long long>> intersection,
             std::optional<std::vector<PointRecord>> points = std::nullopt);

  int gamma() const { return static_cast<int>(components_.size()); }
  const std::vector<Component>& components() const { return components_; }
  const Component& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
  long long intersection(int i, int j) const {
    return intersection_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  bool has_points() const { return points_.has_value(); }
  // Errors with errc::missing_points when no records were supplied.
  const std::vector<PointRecord>& points() const;

  Subcurve full() const { return Subcurve{full_mask_}; }
  Subcurve complement(Subcurve y) const { return Subcurve{full_mask_ & ~y.mask}; }

  // Bitmask of components adjacent to C_i (intersection > 0).
  std::uint32_t adjacency(int i) const { return adjacency_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Component> components_;
  std::vector<std::vector<long long>> intersection_;
  std::optional<std::vector<PointRecord>> points_;
  std::vector<std::uint32_t> adjacency_;
  std::uint32_t full_mask_ = 0;
};

// delta_Y = |Y ∩ Y^c| = sum of intersection(i,j) over i in Y, j outside;
// symmetric in Y and its complement.  Errors on empty or full masks.
long long delta(const CurveGraph& g, Subcurve y);

// Connectivity of the induced multigraph on y (edges where intersection > 0).
// y must be nonempty; the full curve is allowed.
bool is_connected(const CurveGraph& g, Subcurve y);

// All proper subcurves y with y and y^c connected, ascending by mask.  The
// list is closed under complementation and is the index set on which
// generality and stability are decided.
std::vector<Subcurve> biconnected_subcurves(const CurveGraph& g);

// Indices of point records whose removal disconnects the component
// multigraph.  For a node record {i,j} this is the usual bridge test;
// self-records {i,i} are never separating.  Requires point records.
std::vector<int> separating_points(const CurveGraph& g);

// Result of normalizing the curve at all of its separating points: the
// connected pieces Y_1, ..., Y_r as curves of their own (r = number of
// separating points + 1), ordered by smallest original component index.
struct SeparatingBlocks {
  std::vector<CurveGraph> blocks;
  std::vector<std::vector<int>> block_components;  // original indices per block, ascending
  std::vector<int> block_of;                       // component index -> block index
  std::vector<int> separating;                     // record indices of the removed bridges
};

// Requires point records; errors with errc::dagger_violation when some
// separating record is not a plain node (more than two incidences) — such
// curves are outside the supported class.
SeparatingBlocks separating_blocks(const CurveGraph& g);

// The cycle curve I_n: n rational components arranged in a cycle (n = 1 is a
// single component with one self-node, n = 2 a double node).  Point records
// are always populated.
CurveGraph cycle_curve(int n);

}  // namespace jaccomb
