#include "jaccomb/classification.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <string>
#include <thread>
#include <utility>

namespace jaccomb {

Signature signature_of(const CurveGraph& g, const Polarization& q) {
  std::vector<Multidegree> stable = stable_multidegrees(g, q);  // sorted; rejects non-general q
  Signature sig;
  sig.reserve(stable.size());
  const Multidegree& base = stable.front();
  for (const Multidegree& d : stable) {
    Multidegree shifted(d);
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] -= base[i];
    sig.push_back(std::move(shifted));
  }
  return sig;
}

namespace {

int thread_budget() {
  if (const char* env = std::getenv("JACCOMB_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<int>(v);
    // 0, empty or junk falls through to auto
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

struct ClassCandidate {
  unsigned long long first_index;  // flat grid index of the first occurrence
  std::vector<Rat> representative;
};

}  // namespace

std::vector<JacobianClass> classify(const CurveGraph& g, long long total_degree,
                                    long long grid_denominator) {
  if (grid_denominator < 1) fail(errc::invalid_input, "grid denominator must be positive");
  int n = g.gamma();
  std::vector<Subcurve> biconn = biconnected_subcurves(g);

  unsigned long long points = 1;
  for (int i = 0; i + 1 < n; ++i) {
    if (points > (1ull << 62) / static_cast<unsigned long long>(grid_denominator))
      fail(errc::limit_exceeded, "grid of denominator " + std::to_string(grid_denominator) +
                                     " is too large to scan at gamma = " + std::to_string(n));
    points *= static_cast<unsigned long long>(grid_denominator);
  }

  // Decode a flat index into the polarization (k_0/D, ..., k_{n-2}/D, rest).
  auto grid_point = [&](unsigned long long flat) {
    std::vector<Rat> entries(static_cast<std::size_t>(n));
    Rat partial(0);
    for (int i = n - 2; i >= 0; --i) {
      long long k = static_cast<long long>(flat % static_cast<unsigned long long>(grid_denominator));
      flat /= static_cast<unsigned long long>(grid_denominator);
      entries[static_cast<std::size_t>(i)] = make_rat(k, grid_denominator);
      partial += entries[static_cast<std::size_t>(i)];
    }
    entries[static_cast<std::size_t>(n - 1)] = Rat(static_cast<long>(total_degree)) - partial;
    return entries;
  };

  auto scan_range = [&](unsigned long long begin, unsigned long long end,
                        std::map<Signature, ClassCandidate>& found) {
    for (unsigned long long flat = begin; flat < end; ++flat) {
      Polarization q(grid_point(flat));
      if (!check_general(g, q, biconn).general) continue;
      Signature sig = signature_of(g, q);
      auto it = found.find(sig);
      if (it == found.end())
        found.emplace(std::move(sig), ClassCandidate{flat, q.entries()});
      else if (flat < it->second.first_index)
        it->second = ClassCandidate{flat, q.entries()};
    }
  };

  std::map<Signature, ClassCandidate> merged;
  int threads = std::min<long long>(thread_budget(), static_cast<long long>(points));
  if (threads <= 1 || points < 2) {
    scan_range(0, points, merged);
  } else {
    std::vector<std::map<Signature, ClassCandidate>> partial(static_cast<std::size_t>(threads));
    std::vector<std::thread> workers;
    unsigned long long chunk = points / static_cast<unsigned long long>(threads);
    for (int t = 0; t < threads; ++t) {
      unsigned long long begin = chunk * static_cast<unsigned long long>(t);
      unsigned long long end = (t + 1 == threads) ? points : begin + chunk;
      workers.emplace_back([&, begin, end, t] { scan_range(begin, end, partial[static_cast<std::size_t>(t)]); });
    }
    for (std::thread& w : workers) w.join();
    for (std::map<Signature, ClassCandidate>& part : partial)
      for (auto& [sig, cand] : part) {
        auto it = merged.find(sig);
        if (it == merged.end())
          merged.emplace(sig, std::move(cand));
        else if (cand.first_index < it->second.first_index)
          it->second = std::move(cand);
      }
  }

  std::vector<JacobianClass> out;
  out.reserve(merged.size());
  for (auto& [sig, cand] : merged)
    out.push_back(JacobianClass{Polarization(std::move(cand.representative)), sig, std::nullopt, std::nullopt});
  return out;  // map iteration is already lexicographic in the signature
}

bool classification_stabilizes(const CurveGraph& g, long long total_degree, long long d1,
                               long long d2) {
  if (d1 < 1 || d2 < 1 || d2 % d1 != 0)
    fail(errc::invalid_input, "stabilization check expects denominators with d1 | d2");
  std::vector<JacobianClass> coarse = classify(g, total_degree, d1);
  std::vector<JacobianClass> fine = classify(g, total_degree, d2);
  if (coarse.size() != fine.size()) return false;
  for (std::size_t i = 0; i < coarse.size(); ++i)
    if (coarse[i].signature != fine[i].signature) return false;
  return true;
}

long long default_grid_denominator(const CurveGraph& g) {
  long long l = 1;
  for (long long k = 2; k <= g.gamma(); ++k) l = std::lcm(l, k);
  long long max_delta = 0;
  for (Subcurve y : biconnected_subcurves(g)) max_delta = std::max(max_delta, delta(g, y));
  return 2 * l * std::max<long long>(1, max_delta);
}

}  // namespace jaccomb
