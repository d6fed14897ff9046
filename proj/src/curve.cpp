#include "jaccomb/curve.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace jaccomb {

namespace {

// Connectivity of the vertex set `mask` under caller-supplied adjacency
// bitmasks (one word per vertex).
bool connected_under(const std::vector<std::uint32_t>& adj, std::uint32_t mask) {
  if (mask == 0) return false;
  std::uint32_t reached = mask & (~mask + 1);  // lowest set bit
  for (;;) {
    std::uint32_t next = reached;
    for (std::uint32_t rest = reached; rest;) {
      int i = __builtin_ctz(rest);
      rest &= rest - 1;
      next |= adj[static_cast<std::size_t>(i)] & mask;
    }
    if (next == reached) break;
    reached = next;
  }
  return reached == mask;
}

std::vector<int> distinct_indices(const PointRecord& rec) {
  std::vector<int> d(rec.on);
  d.erase(std::unique(d.begin(), d.end()), d.end());
  return d;
}

// Adjacency masks after removing one point record's contributions (each pair
// of distinct incident components loses one unit of intersection).
std::vector<std::uint32_t> adjacency_without_record(const CurveGraph& g, const PointRecord& rec) {
  int n = g.gamma();
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) adj[static_cast<std::size_t>(i)] = g.adjacency(i);
  std::vector<int> d = distinct_indices(rec);
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      if (g.intersection(d[a], d[b]) == 1) {  // the removed unit was the only one
        adj[static_cast<std::size_t>(d[a])] &= ~(1u << d[b]);
        adj[static_cast<std::size_t>(d[b])] &= ~(1u << d[a]);
      }
    }
  return adj;
}

}  // namespace

CurveGraph::CurveGraph(std::vector<Component> components,
                       std::vector<std::vector<long long>> intersection,
                       std::optional<std::vector<PointRecord>> points)
    : components_(std::move(components)),
      intersection_(std::move(intersection)),
      points_(std::move(points)) {
  int n = gamma();
  if (n < 1) fail(errc::invalid_input, "curve needs at least one component");
  if (n > max_components)
    fail(errc::limit_exceeded, "curve has " + std::to_string(n) + " components; the 2^gamma subcurve scan supports at most " + std::to_string(max_components));
  if (static_cast<int>(intersection_.size()) != n)
    fail(errc::invalid_input, "intersection matrix must be gamma x gamma");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(intersection_[static_cast<std::size_t>(i)].size()) != n)
      fail(errc::invalid_input, "intersection matrix must be gamma x gamma");
    if (components_[static_cast<std::size_t>(i)].genus < 0)
      fail(errc::invalid_input, "component " + std::to_string(i) + " has negative genus");
    for (int j = 0; j < n; ++j) {
      long long v = intersection_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (v < 0)
        fail(errc::invalid_input, "intersection(" + std::to_string(i) + "," + std::to_string(j) + ") is negative");
      if (i == j && v != 0)
        fail(errc::invalid_input, "intersection matrix must have zero diagonal (component " + std::to_string(i) + ")");
      if (intersection_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] != v)
        fail(errc::invalid_input, "intersection matrix must be symmetric at (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }

  full_mask_ = (n == 32) ? ~0u : ((1u << n) - 1u);
  adjacency_.assign(static_cast<std::size_t>(n), 0u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && intersection_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0)
        adjacency_[static_cast<std::size_t>(i)] |= 1u << j;

  if (!connected_under(adjacency_, full_mask_))
    fail(errc::invalid_input, "curve must be connected");

  if (points_) {
    std::vector<std::vector<long long>> counted(
        static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
    for (std::size_t k = 0; k < points_->size(); ++k) {
      PointRecord& rec = (*points_)[k];
      if (rec.on.size() < 2)
        fail(errc::invalid_input, "point record " + std::to_string(k) + " must list at least two incidences");
      for (int idx : rec.on)
        if (idx < 0 || idx >= n)
          fail(errc::invalid_input, "point record " + std::to_string(k) + " references component " + std::to_string(idx));
      std::sort(rec.on.begin(), rec.on.end());
      std::vector<int> d = distinct_indices(rec);
      for (std::size_t a = 0; a < d.size(); ++a)
        for (std::size_t b = a + 1; b < d.size(); ++b) {
          counted[static_cast<std::size_t>(d[a])][static_cast<std::size_t>(d[b])] += 1;
          counted[static_cast<std::size_t>(d[b])][static_cast<std::size_t>(d[a])] += 1;
        }
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (counted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            intersection_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
          fail(errc::invalid_input,
               "point records give " + std::to_string(counted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) +
                   " incidences for pair (" + std::to_string(i) + "," + std::to_string(j) + ") but intersection is " +
                   std::to_string(intersection_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]));
  }
}

const std::vector<PointRecord>& CurveGraph::points() const {
  if (!points_) fail(errc::missing_points, "operation requires singular-point records, none supplied");
  return *points_;
}

namespace {

void require_subset(const CurveGraph& g, Subcurve y) {
  if (y.mask & ~g.full().mask)
    fail(errc::invalid_subcurve, "subcurve mask references components beyond gamma");
}

}  // namespace

long long delta(const CurveGraph& g, Subcurve y) {
  require_subset(g, y);
  if (y.mask == 0 || y.mask == g.full().mask)
    fail(errc::invalid_subcurve, "delta is defined for proper nonempty subcurves only");
  long long total = 0;
  for (int i = 0; i < g.gamma(); ++i) {
    if (!y.contains(i)) continue;
    for (int j = 0; j < g.gamma(); ++j)
      if (!y.contains(j)) total += g.intersection(i, j);
  }
  return total;
}

bool is_connected(const CurveGraph& g, Subcurve y) {
  require_subset(g, y);
  if (y.mask == 0) fail(errc::invalid_subcurve, "connectivity of the empty subcurve is undefined");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.gamma()));
  for (int i = 0; i < g.gamma(); ++i) adj[static_cast<std::size_t>(i)] = g.adjacency(i);
  return connected_under(adj, y.mask);
}

std::vector<Subcurve> biconnected_subcurves(const CurveGraph& g) {
  std::vector<Subcurve> out;
  std::uint32_t full = g.full().mask;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.gamma()));
  for (int i = 0; i < g.gamma(); ++i) adj[static_cast<std::size_t>(i)] = g.adjacency(i);
  for (std::uint32_t m = 1; m < full; ++m)
    if (connected_under(adj, m) && connected_under(adj, full & ~m)) out.push_back(Subcurve{m});
  return out;
}

std::vector<int> separating_points(const CurveGraph& g) {
  const std::vector<PointRecord>& recs = g.points();
  std::vector<int> out;
  for (std::size_t k = 0; k < recs.size(); ++k) {
    if (distinct_indices(recs[k]).size() < 2) continue;  // self-node: both branches on one side
    std::vector<std::uint32_t> adj = adjacency_without_record(g, recs[k]);
    if (!connected_under(adj, g.full().mask)) out.push_back(static_cast<int>(k));
  }
  return out;
}

SeparatingBlocks separating_blocks(const CurveGraph& g) {
  const std::vector<PointRecord>& recs = g.points();
  SeparatingBlocks result;
  result.separating = separating_points(g);

  std::set<int> sep(result.separating.begin(), result.separating.end());
  for (int k : result.separating) {
    const PointRecord& rec = recs[static_cast<std::size_t>(k)];
    if (rec.on.size() != 2 || rec.on[0] == rec.on[1])
      fail(errc::dagger_violation,
           "separating point record " + std::to_string(k) + " is not a node (more than two incidences)");
  }

  // Adjacency with every separating node removed; the connected pieces are
  // the blocks.  Bridges always join two distinct pieces.
  int n = g.gamma();
  std::vector<std::vector<long long>> reduced(
      static_cast<std::size_t>(n), std::vector<long long>(static_cast<std::size_t>(n), 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = g.intersection(i, j);
  for (int k : result.separating) {
    const PointRecord& rec = recs[static_cast<std::size_t>(k)];
    reduced[static_cast<std::size_t>(rec.on[0])][static_cast<std::size_t>(rec.on[1])] -= 1;
    reduced[static_cast<std::size_t>(rec.on[1])][static_cast<std::size_t>(rec.on[0])] -= 1;
  }
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0u);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (j != i && reduced[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] > 0)
        adj[static_cast<std::size_t>(i)] |= 1u << j;

  result.block_of.assign(static_cast<std::size_t>(n), -1);
  for (int seed = 0; seed < n; ++seed) {
    if (result.block_of[static_cast<std::size_t>(seed)] != -1) continue;
    std::uint32_t piece = 1u << seed;
    for (;;) {
      std::uint32_t next = piece;
      for (std::uint32_t rest = piece; rest;) {
        int i = __builtin_ctz(rest);
        rest &= rest - 1;
        next |= adj[static_cast<std::size_t>(i)];
      }
      if (next == piece) break;
      piece = next;
    }
    int b = static_cast<int>(result.block_components.size());
    std::vector<int> comps;
    for (int i = 0; i < n; ++i)
      if ((piece >> i) & 1u) {
        comps.push_back(i);
        result.block_of[static_cast<std::size_t>(i)] = b;
      }
    result.block_components.push_back(std::move(comps));
  }

  for (const std::vector<int>& comps : result.block_components) {
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (std::size_t loc = 0; loc < comps.size(); ++loc) local[static_cast<std::size_t>(comps[loc])] = static_cast<int>(loc);
    std::vector<Component> bc;
    for (int i : comps) bc.push_back(g.component(i));
    std::vector<std::vector<long long>> bm(comps.size(), std::vector<long long>(comps.size(), 0));
    for (std::size_t a = 0; a < comps.size(); ++a)
      for (std::size_t b = 0; b < comps.size(); ++b)
        bm[a][b] = reduced[static_cast<std::size_t>(comps[a])][static_cast<std::size_t>(comps[b])];
    // Non-separating records never straddle two pieces, so membership of the
    // first incidence decides the block.
    std::vector<PointRecord> bp;
    for (std::size_t k = 0; k < recs.size(); ++k) {
      if (sep.count(static_cast<int>(k))) continue;
      if (local[static_cast<std::size_t>(recs[k].on[0])] == -1) continue;
      PointRecord r;
      for (int idx : recs[k].on) r.on.push_back(local[static_cast<std::size_t>(idx)]);
      bp.push_back(std::move(r));
    }
    result.blocks.emplace_back(std::move(bc), std::move(bm), std::move(bp));
  }
  return result;
}

CurveGraph cycle_curve(int n) {
  if (n < 1) fail(errc::invalid_input, "cycle_curve needs n >= 1");
  std::vector<Component> comps;
  for (int i = 0; i < n; ++i) comps.push_back(Component{"C" + std::to_string(i + 1), 0});
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  std::vector<PointRecord> pts;
  if (n == 1) {
    pts.push_back(PointRecord{{0, 0}});
  } else {
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += 1;
      pts.push_back(PointRecord{{std::min(i, j), std::max(i, j)}});
    }
  }
  return CurveGraph(std::move(comps), std::move(m), std::move(pts));
}

}  // namespace jaccomb
