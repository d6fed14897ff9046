#pragma once

#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jaccomb/curve.hpp"
#include "jaccomb/polarization.hpp"
#include "jaccomb/stability.hpp"

namespace jaccomb::testing {

// Runs f and returns the errc it failed with; throws if f does not fail.
template <typename F>
inline errc error_code_of(F&& f) {
  try {
    std::forward<F>(f)();
  } catch (const Error& e) {
    return e.code();
  }
  throw std::logic_error("expected the operation to fail");
}

struct RandomCurveOptions {
  int min_gamma = 2;
  int max_gamma = 6;
  int max_mult = 3;
  int max_extra_pairs = 4;
  bool bridgeless = false;  // base the graph on a Hamiltonian cycle instead of a tree
};

namespace detail {

inline CurveGraph from_matrix(std::vector<std::vector<long long>> m) {
  int n = static_cast<int>(m.size());
  std::vector<Component> comps;
  for (int i = 0; i < n; ++i) comps.push_back({"C" + std::to_string(i + 1), 0});
  std::vector<PointRecord> recs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long long k = 0; k < m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; ++k)
        recs.push_back(PointRecord{{i, j}});
  return CurveGraph(std::move(comps), std::move(m), std::move(recs));
}

}  // namespace detail

// Random connected multigraph curve with one point record per intersection
// unit.  Bridgeless variants sit on a Hamiltonian cycle (gamma = 2 gets a
// double node), so every record lies on a cycle.
inline CurveGraph random_curve(std::mt19937_64& rng, const RandomCurveOptions& opt = {}) {
  std::uniform_int_distribution<int> gamma_dist(opt.min_gamma, opt.max_gamma);
  int n = gamma_dist(rng);
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  auto set_edge = [&](int i, int j, long long v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
  };
  std::uniform_int_distribution<long long> mult(1, opt.max_mult);

  if (opt.bridgeless) {
    if (n == 2) {
      std::uniform_int_distribution<long long> m2(2, std::max(2, opt.max_mult));
      set_edge(0, 1, m2(rng));
    } else {
      for (int i = 0; i < n; ++i) {
        int j = (i + 1) % n;
        long long v = mult(rng);
        set_edge(std::min(i, j), std::max(i, j), v);
      }
    }
  } else {
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> parent(0, i - 1);
      set_edge(parent(rng), i, mult(rng));
    }
  }

  if (n > 2) {
    std::uniform_int_distribution<int> extras(0, opt.max_extra_pairs);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    int count = extras(rng);
    for (int k = 0; k < count; ++k) {
      int i = vertex(rng), j = vertex(rng);
      if (i == j) continue;
      long long cur = m[static_cast<std::size_t>(std::min(i, j))][static_cast<std::size_t>(std::max(i, j))];
      std::uniform_int_distribution<long long> boosted(std::max(1ll, cur), opt.max_mult);
      set_edge(std::min(i, j), std::max(i, j), boosted(rng));
    }
  }
  return detail::from_matrix(std::move(m));
}

// Random tree of cycle blocks joined by bridge nodes: a curve satisfying the
// separating-condition with a prescribed block structure.  Block sizes 1..4
// (1 = single component, 2 = double node, >= 3 = cycle).
inline CurveGraph random_block_tree(std::mt19937_64& rng, int max_blocks = 4,
                                    int max_block_size = 4) {
  std::uniform_int_distribution<int> blocks_dist(2, max_blocks);
  std::uniform_int_distribution<int> size_dist(1, max_block_size);
  int r = blocks_dist(rng);
  std::vector<std::pair<int, int>> range;  // [first component, size] per block
  int n = 0;
  for (int b = 0; b < r; ++b) {
    int s = size_dist(rng);
    range.push_back({n, s});
    n += s;
  }
  std::vector<std::vector<long long>> m(static_cast<std::size_t>(n),
                                        std::vector<long long>(static_cast<std::size_t>(n), 0));
  auto add_edge = [&](int i, int j, long long v) {
    m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += v;
    m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] += v;
  };
  for (auto [first, s] : range) {
    if (s == 2) add_edge(first, first + 1, 2);
    if (s >= 3)
      for (int i = 0; i < s; ++i) add_edge(first + i, first + (i + 1) % s, 1);
  }
  for (int b = 1; b < r; ++b) {
    std::uniform_int_distribution<int> parent_dist(0, b - 1);
    int p = parent_dist(rng);
    std::uniform_int_distribution<int> pu(range[static_cast<std::size_t>(b)].first,
                                          range[static_cast<std::size_t>(b)].first +
                                              range[static_cast<std::size_t>(b)].second - 1);
    std::uniform_int_distribution<int> pv(range[static_cast<std::size_t>(p)].first,
                                          range[static_cast<std::size_t>(p)].first +
                                              range[static_cast<std::size_t>(p)].second - 1);
    add_edge(pu(rng), pv(rng), 1);
  }
  return detail::from_matrix(std::move(m));
}

// Random general polarization: random integer base point pushed off the
// integrality walls.  Exact by construction.
inline Polarization random_general(std::mt19937_64& rng, const CurveGraph& g) {
  std::uniform_int_distribution<long> base(-2, 2);
  std::vector<Rat> q;
  for (int i = 0; i < g.gamma(); ++i) q.push_back(Rat(base(rng)));
  return perturb_to_general(g, Polarization(std::move(q)), make_rat(1, 2));
}

// Random polarization rich in half-integer walls (for generality oracles).
inline Polarization random_wall_rich(std::mt19937_64& rng, const CurveGraph& g) {
  std::uniform_int_distribution<long> halves(-6, 6);
  std::vector<Rat> q;
  Rat sum(0);
  for (int i = 0; i + 1 < g.gamma(); ++i) {
    q.push_back(make_rat(halves(rng), 2));
    sum += q.back();
  }
  std::uniform_int_distribution<long> total(-2, 2);
  q.push_back(Rat(total(rng)) - sum);
  return Polarization(std::move(q));
}

inline Multidegree random_multidegree(std::mt19937_64& rng, int gamma, long long lo = -3,
                                      long long hi = 3) {
  std::uniform_int_distribution<long long> entry(lo, hi);
  Multidegree d;
  for (int i = 0; i < gamma; ++i) d.push_back(entry(rng));
  return d;
}

// Oracle for the complexity: expand the multigraph into individual edges and
// count spanning trees by enumerating (gamma-1)-subsets with union-find.
inline Int brute_force_trees(const CurveGraph& g) {
  int n = g.gamma();
  if (n == 1) return Int(1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (long long k = 0; k < g.intersection(i, j); ++k) edges.push_back({i, j});
  int m = static_cast<int>(edges.size());
  int need = n - 1;
  Int count(0);
  std::vector<int> pick(static_cast<std::size_t>(need));
  std::vector<int> parent(static_cast<std::size_t>(n));
  auto root = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  auto rec = [&](auto&& self, int slot, int from) -> void {
    if (slot == need) {
      std::iota(parent.begin(), parent.end(), 0);
      for (int s = 0; s < need; ++s) {
        auto [a, b] = edges[static_cast<std::size_t>(pick[static_cast<std::size_t>(s)])];
        int ra = root(a), rb = root(b);
        if (ra == rb) return;  // cycle
        parent[static_cast<std::size_t>(ra)] = rb;
      }
      count += 1;
      return;
    }
    for (int e = from; e < m; ++e) {
      pick[static_cast<std::size_t>(slot)] = e;
      self(self, slot + 1, e + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

inline Multidegree shifted(const Multidegree& d, const Multidegree& e) {
  Multidegree out(d);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += e[i];
  return out;
}

inline Polarization shifted(const Polarization& q, const Multidegree& e) {
  std::vector<Rat> out;
  for (int i = 0; i < q.size(); ++i) out.push_back(q[i] + Rat(static_cast<long>(e[static_cast<std::size_t>(i)])));
  return Polarization(std::move(out));
}

}  // namespace jaccomb::testing
