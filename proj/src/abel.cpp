#include "jaccomb/abel.hpp"

#include <span>
#include <utility>

namespace jaccomb {

namespace {

// d certifies admissibility on a curve without separating points when
// d_y - 1 > q_y - delta_y/2 on every biconnected proper subcurve y (the
// worst case over points p on y of the stability of m_p (x) L).  Evaluated
// strictly even for non-general q.
bool certifies(const CurveGraph& g, const Polarization& q, const Multidegree& d,
               std::span<const Subcurve> biconnected) {
  for (Subcurve y : biconnected) {
    Rat lhs(static_cast<long>(degree_of(d, y) - 1));
    if (!(lhs > q_of(q, y) - make_rat(delta(g, y), 2))) return false;
  }
  return true;
}

// Lexicographically smallest witness d with |d| = |q| + 1 on a curve with no
// separating points, or nullopt.  The search box is complete: every witness
// has d_i >= ceil(q_i - delta_i/2) + 1 (summing the strict inequalities over
// the connected pieces of the complement of component i, whose deltas add up
// to delta_i), and the total then caps each coordinate from above.
std::optional<Multidegree> bridgeless_witness(const CurveGraph& g, const Polarization& q) {
  int n = g.gamma();
  long long target = to_longlong(q.total()) + 1;
  if (n == 1) return Multidegree{target};

  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  std::vector<long long> lo(static_cast<std::size_t>(n));
  long long lo_sum = 0;
  for (int i = 0; i < n; ++i) {
    long long di = delta(g, Subcurve{1u << i});
    lo[static_cast<std::size_t>(i)] = to_longlong(ceil_rat(q[i] - make_rat(di, 2))) + 1;
    lo_sum += lo[static_cast<std::size_t>(i)];
  }
  if (lo_sum > target) return std::nullopt;

  // Minimum total still owed by coordinates i..n-1.
  std::vector<long long> owed(static_cast<std::size_t>(n) + 1, 0);
  for (int i = n - 1; i >= 0; --i)
    owed[static_cast<std::size_t>(i)] = owed[static_cast<std::size_t>(i) + 1] + lo[static_cast<std::size_t>(i)];

  Multidegree d(static_cast<std::size_t>(n));
  auto scan = [&](auto&& self, int i, long long remaining) -> bool {
    if (i == n - 1) {
      if (remaining < lo[static_cast<std::size_t>(i)]) return false;
      d[static_cast<std::size_t>(i)] = remaining;
      return certifies(g, q, d, biconn);
    }
    long long hi = remaining - owed[static_cast<std::size_t>(i) + 1];
    for (long long v = lo[static_cast<std::size_t>(i)]; v <= hi; ++v) {
      d[static_cast<std::size_t>(i)] = v;
      if (self(self, i + 1, remaining - v)) return true;
    }
    return false;
  };
  if (scan(scan, 0, target)) return d;
  return std::nullopt;
}

void require_length(const CurveGraph& g, const Polarization& q) {
  if (q.size() != g.gamma()) fail(errc::invalid_input, "polarization length differs from gamma");
}

}  // namespace

AbelResult abel_admissible(const CurveGraph& g, const Polarization& q) {
  require_length(g, q);
  if (!is_general(g, q)) fail(errc::not_general, "abel_admissible requires a general polarization");
  if (g.gamma() == 1) return AbelResult{true, Multidegree{to_longlong(q.total()) + 1}};

  if (separating_points(g).empty()) {
    std::optional<Multidegree> w = bridgeless_witness(g, q);
    return AbelResult{w.has_value(), std::move(w)};
  }

  // Admissible iff every block is; the assembled witness spends one extra
  // unit of degree per block.
  InducedBlocks ib = induce_on_blocks(g, q);
  Multidegree d(static_cast<std::size_t>(g.gamma()));
  for (std::size_t b = 0; b < ib.decomposition.blocks.size(); ++b) {
    std::optional<Multidegree> w =
        bridgeless_witness(ib.decomposition.blocks[b], ib.block_polarizations[b]);
    if (!w) return AbelResult{false, std::nullopt};
    const std::vector<int>& comps = ib.decomposition.block_components[b];
    for (std::size_t j = 0; j < comps.size(); ++j)
      d[static_cast<std::size_t>(comps[j])] = (*w)[j];
  }
  return AbelResult{true, std::move(d)};
}

bool twist_is_admissible(const CurveGraph& g, const Polarization& q, const Multidegree& d) {
  require_length(g, q);
  if (static_cast<int>(d.size()) != g.gamma())
    fail(errc::invalid_input, "twist degree length differs from gamma");

  auto require_total = [](long long have, const Int& q_total) {
    if (make_int(have) != q_total + 1)
      fail(errc::degree_mismatch, "twist degree total " + std::to_string(have) +
                                      " does not exceed the polarization total by one");
  };

  if (g.gamma() == 1 || separating_points(g).empty()) {
    require_total(total_degree(d), q.total());
    if (g.gamma() == 1) return true;
    std::vector<Subcurve> biconn = biconnected_subcurves(g);
    return certifies(g, q, d, biconn);
  }

  InducedBlocks ib = induce_on_blocks(g, q);
  for (std::size_t b = 0; b < ib.decomposition.blocks.size(); ++b) {
    const std::vector<int>& comps = ib.decomposition.block_components[b];
    Multidegree db;
    for (int i : comps) db.push_back(d[static_cast<std::size_t>(i)]);
    require_total(total_degree(db), ib.block_polarizations[b].total());
    const CurveGraph& bg = ib.decomposition.blocks[b];
    if (bg.gamma() == 1) continue;
    std::vector<Subcurve> biconn = biconnected_subcurves(bg);
    if (!certifies(bg, ib.block_polarizations[b], db, biconn)) return false;
  }
  return true;
}

Polarization polarization_for_twist(const CurveGraph& g, const Multidegree& d) {
  if (static_cast<int>(d.size()) != g.gamma())
    fail(errc::invalid_input, "twist degree length differs from gamma");
  if (g.gamma() == 1) return Polarization({Rat(static_cast<long>(d[0] - 1))});

  SeparatingBlocks sb = separating_blocks(g);
  std::vector<Rat> q(static_cast<std::size_t>(g.gamma()));
  for (std::size_t b = 0; b < sb.blocks.size(); ++b) {
    const CurveGraph& bg = sb.blocks[b];
    const std::vector<int>& comps = sb.block_components[b];
    long gb = bg.gamma();

    // Base point q0_j = d_j - 1/gamma_B: for biconnected proper y in the
    // block, d_y - 1 - (q0_y - delta_y/2) = |y|/gamma_B - 1 + delta_y/2 >=
    // 1/gamma_B since delta_y >= 2 in a block, so a perturbation moving every
    // subcurve sum by less than 1/(2 gamma_B) keeps d strictly admissible.
    std::vector<Rat> base;
    for (int i : comps)
      base.push_back(Rat(static_cast<long>(d[static_cast<std::size_t>(i)])) - make_rat(1, gb));
    Polarization qb = perturb_to_general(bg, Polarization(std::move(base)), make_rat(1, 2 * gb));
    for (std::size_t j = 0; j < comps.size(); ++j)
      q[static_cast<std::size_t>(comps[j])] = qb[static_cast<int>(j)];
  }
  return Polarization(std::move(q));
}

std::vector<JacobianClass> admissible_classes(const CurveGraph& g,
                                              std::vector<JacobianClass> classes) {
  for (JacobianClass& c : classes) {
    AbelResult r = abel_admissible(g, c.representative);
    c.abel_admissible = r.admissible;
    c.abel_witness = std::move(r.witness);
  }
  return classes;
}

}  // namespace jaccomb
