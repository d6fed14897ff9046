#include "jaccomb/stability.hpp"

#include <algorithm>
#include <string>

namespace jaccomb {

long long total_degree(const Multidegree& d) {
  long long t = 0;
  for (long long x : d) t += x;
  return t;
}

long long degree_of(const Multidegree& d, Subcurve y) {
  long long t = 0;
  for (std::uint32_t rest = y.mask; rest;) {
    int i = __builtin_ctz(rest);
    rest &= rest - 1;
    if (i >= static_cast<int>(d.size()))
      fail(errc::invalid_subcurve, "subcurve mask exceeds multidegree length");
    t += d[static_cast<std::size_t>(i)];
  }
  return t;
}

namespace {

void require_matching_degree(const CurveGraph& g, const Polarization& q, const Multidegree& d) {
  if (static_cast<int>(d.size()) != g.gamma() || q.size() != g.gamma())
    fail(errc::degree_mismatch, "multidegree/polarization length differs from gamma");
  if (make_int(total_degree(d)) != q.total())
    fail(errc::degree_mismatch, "total degree " + std::to_string(total_degree(d)) +
                                    " differs from |q| = " + q.total().get_str());
}

enum class Strictness { weak, strict };

bool satisfies(const CurveGraph& g, const Polarization& q, const Multidegree& d,
               std::span<const Subcurve> biconn, Strictness s) {
  for (Subcurve y : biconn) {
    Rat bound = q_of(q, y) - make_rat(delta(g, y), 2);
    Rat dy(static_cast<long>(degree_of(d, y)));
    if (s == Strictness::strict ? !(dy > bound) : !(dy >= bound)) return false;
  }
  return true;
}

}  // namespace

bool is_semistable(const CurveGraph& g, const Polarization& q, const Multidegree& d) {
  require_matching_degree(g, q, d);
  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  return satisfies(g, q, d, biconn, Strictness::weak);
}

bool is_stable(const CurveGraph& g, const Polarization& q, const Multidegree& d) {
  require_matching_degree(g, q, d);
  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  return satisfies(g, q, d, biconn, Strictness::strict);
}

std::vector<Multidegree> stable_multidegrees(const CurveGraph& g, const Polarization& q) {
  if (q.size() != g.gamma()) fail(errc::degree_mismatch, "polarization length differs from gamma");
  std::vector<Subcurve> biconn = biconnected_subcurves(g);
  if (!check_general(g, q, biconn).general)
    fail(errc::not_general, "stable_multidegrees requires a general polarization");

  int n = g.gamma();
  long long total = to_longlong(q.total());
  if (n == 1) return {Multidegree{total}};

  // Per-coordinate box: floor(q_i - delta_i/2) + 1 .. ceil(q_i + delta_i/2) - 1.
  std::vector<long long> lo(static_cast<std::size_t>(n)), hi(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    long long di = delta(g, Subcurve{1u << i});
    Rat half = make_rat(di, 2);
    lo[static_cast<std::size_t>(i)] = to_longlong(floor_rat(q[i] - half)) + 1;
    hi[static_cast<std::size_t>(i)] = to_longlong(ceil_rat(q[i] + half)) - 1;
  }

  std::vector<Multidegree> out;
  Multidegree d(static_cast<std::size_t>(n), 0);
  // Lexicographic scan of the first n-1 coordinates; the last is forced.
  auto scan = [&](auto&& self, int i, long long partial) -> void {
    if (i == n - 1) {
      long long last = total - partial;
      if (last < lo[static_cast<std::size_t>(i)] || last > hi[static_cast<std::size_t>(i)]) return;
      d[static_cast<std::size_t>(i)] = last;
      if (satisfies(g, q, d, biconn, Strictness::strict)) out.push_back(d);
      return;
    }
    for (long long v = lo[static_cast<std::size_t>(i)]; v <= hi[static_cast<std::size_t>(i)]; ++v) {
      d[static_cast<std::size_t>(i)] = v;
      self(self, i + 1, partial + v);
    }
  };
  scan(scan, 0, 0);
  return out;  // already lexicographically sorted by construction
}

}  // namespace jaccomb
