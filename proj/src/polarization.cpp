#include "jaccomb/polarization.hpp"

#include <algorithm>
#include <utility>

namespace jaccomb {

Polarization::Polarization(std::vector<Rat> entries) : entries_(std::move(entries)) {
  if (entries_.empty()) fail(errc::invalid_input, "polarization must have at least one entry");
  Rat sum(0);
  for (const Rat& x : entries_) sum += x;
  if (!is_integer(sum))
    fail(errc::invalid_input, "polarization total " + format_rational(sum) + " is not an integer");
  total_ = sum.get_num();
}

Rat q_of(const Polarization& q, Subcurve y) {
  Rat sum(0);
  for (std::uint32_t rest = y.mask; rest;) {
    int i = __builtin_ctz(rest);
    rest &= rest - 1;
    if (i >= q.size()) fail(errc::invalid_subcurve, "subcurve mask exceeds polarization length");
    sum += q[i];
  }
  return sum;
}

namespace {

// Is q_y - delta_y/2 an integer?  Evaluated exactly.
bool on_integrality_wall(const CurveGraph& g, const Polarization& q, Subcurve y) {
  Rat v = q_of(q, y) - make_rat(delta(g, y), 2);
  return is_integer(v);
}

}  // namespace

GeneralityResult check_general(const CurveGraph& g, const Polarization& q,
                               std::span<const Subcurve> biconnected) {
  for (Subcurve y : biconnected)
    if (on_integrality_wall(g, q, y)) return GeneralityResult{false, y};
  return GeneralityResult{true, std::nullopt};
}

GeneralityResult check_general(const CurveGraph& g, const Polarization& q) {
  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  return check_general(g, q, biconn);
}

bool is_general_bruteforce(const CurveGraph& g, const Polarization& q) {
  std::uint32_t full = g.full().mask;
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.gamma()));
  for (int i = 0; i < g.gamma(); ++i) adj[static_cast<std::size_t>(i)] = g.adjacency(i);

  // Connected components of a vertex subset, as masks.
  auto pieces_of = [&](std::uint32_t mask) {
    std::vector<std::uint32_t> pieces;
    std::uint32_t left = mask;
    while (left) {
      std::uint32_t piece = left & (~left + 1);
      for (;;) {
        std::uint32_t next = piece;
        for (std::uint32_t rest = piece; rest;) {
          int i = __builtin_ctz(rest);
          rest &= rest - 1;
          next |= adj[static_cast<std::size_t>(i)] & mask;
        }
        if (next == piece) break;
        piece = next;
      }
      pieces.push_back(piece);
      left &= ~piece;
    }
    return pieces;
  };

  for (std::uint32_t m = 1; m < full; ++m) {
    bool integral_at_m = true;
    for (std::uint32_t side : {m, full & ~m}) {
      for (std::uint32_t piece : pieces_of(side))
        if (!on_integrality_wall(g, q, Subcurve{piece})) {
          integral_at_m = false;
          break;
        }
      if (!integral_at_m) break;
    }
    if (integral_at_m) return false;  // q is integral at the subcurve m
  }
  return true;
}

Polarization perturb_to_general(const CurveGraph& g, const Polarization& q, const Rat& eps) {
  if (eps <= 0) fail(errc::invalid_input, "perturbation bound must be positive");
  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  if (check_general(g, q, biconn).general) return q;

  // Direction with distinct powers of 1/(gamma+1): every proper subcurve sum
  // of v is nonzero (a nonempty partial sum of the powers is positive and
  // less than the full sum plus one), and |v_y| < 2 throughout, so a step of
  // t <= eps/2 moves every subcurve sum by less than eps.
  int n = q.size();
  std::vector<Rat> v(static_cast<std::size_t>(n));
  Rat sum(0);
  Rat power(1);
  Rat base = make_rat(1, n + 1);
  for (int i = 0; i + 1 < n; ++i) {
    v[static_cast<std::size_t>(i)] = power;
    sum += power;
    power *= base;
  }
  v[static_cast<std::size_t>(n - 1)] = -sum;

  Rat t = eps / 2;
  for (;;) {
    std::vector<Rat> moved(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) moved[static_cast<std::size_t>(i)] = q[i] + t * v[static_cast<std::size_t>(i)];
    Polarization candidate(std::move(moved));
    if (check_general(g, candidate, biconn).general) return candidate;
    t /= 2;  // the walls cut the t-axis in a discrete set, so this terminates
  }
}

InducedBlocks induce_on_blocks(const CurveGraph& g, const Polarization& q) {
  if (q.size() != g.gamma()) fail(errc::degree_mismatch, "polarization length differs from gamma");
  if (!is_general(g, q)) fail(errc::not_general, "induce_on_blocks requires a general polarization");
  SeparatingBlocks sb = separating_blocks(g);

  std::vector<Rat> work(q.entries());
  const std::vector<PointRecord>& recs = g.points();

  if (sb.blocks.size() > 1) {
    // Block tree: vertices = blocks, edges = bridges.  Peel leaves; the
    // remaining tree stays connected and each processed block's total is
    // integral and untouched afterwards.
    std::size_t r = sb.blocks.size();
    std::vector<std::vector<std::pair<int, int>>> incident(r);  // (bridge record, other block)
    for (int k : sb.separating) {
      int a = recs[static_cast<std::size_t>(k)].on[0];
      int b = recs[static_cast<std::size_t>(k)].on[1];
      int ba = sb.block_of[static_cast<std::size_t>(a)];
      int bb = sb.block_of[static_cast<std::size_t>(b)];
      incident[static_cast<std::size_t>(ba)].push_back({k, bb});
      incident[static_cast<std::size_t>(bb)].push_back({k, ba});
    }
    std::vector<bool> peeled(r, false);
    std::vector<int> live_degree(r);
    for (std::size_t b = 0; b < r; ++b) live_degree[b] = static_cast<int>(incident[b].size());
    std::vector<bool> bridge_done;
    bridge_done.assign(recs.size(), false);

    for (std::size_t step = 0; step + 1 < r; ++step) {
      // Deterministic choice: leaf block with the smallest first component.
      int leaf = -1;
      for (std::size_t b = 0; b < r; ++b)
        if (!peeled[b] && live_degree[b] == 1) {
          leaf = static_cast<int>(b);
          break;
        }
      int bridge = -1, far_block = -1;
      for (auto [k, other] : incident[static_cast<std::size_t>(leaf)])
        if (!bridge_done[static_cast<std::size_t>(k)]) {
          bridge = k;
          far_block = other;
        }
      int a = recs[static_cast<std::size_t>(bridge)].on[0];
      int b = recs[static_cast<std::size_t>(bridge)].on[1];
      if (sb.block_of[static_cast<std::size_t>(a)] != leaf) std::swap(a, b);

      Rat leaf_total(0);
      for (int i : sb.block_components[static_cast<std::size_t>(leaf)]) leaf_total += work[static_cast<std::size_t>(i)];
      // q_{Y_leaf} = m + r with r in (-1/2, 1/2); generality keeps the total
      // off the half-integers because delta of the leaf side is 1.
      Rat rem = leaf_total - Rat(round_nearest(leaf_total));
      work[static_cast<std::size_t>(a)] -= rem;
      work[static_cast<std::size_t>(b)] += rem;

      peeled[static_cast<std::size_t>(leaf)] = true;
      bridge_done[static_cast<std::size_t>(bridge)] = true;
      live_degree[static_cast<std::size_t>(leaf)] = 0;
      live_degree[static_cast<std::size_t>(far_block)] -= 1;
    }
  }

  InducedBlocks out{Polarization(work), {}, std::move(sb)};
  for (const std::vector<int>& comps : out.decomposition.block_components) {
    std::vector<Rat> sub;
    for (int i : comps) sub.push_back(work[static_cast<std::size_t>(i)]);
    out.block_polarizations.emplace_back(std::move(sub));
  }
  return out;
}

}  // namespace jaccomb
