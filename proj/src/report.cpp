#include "jaccomb/report.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

#include "jaccomb/abel.hpp"
#include "jaccomb/class_group.hpp"
#include "jaccomb/classification.hpp"
#include "jaccomb/io.hpp"

namespace jaccomb {

namespace {

using nlohmann::json;

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string tuple_str(const Multidegree& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(d[i]);
  }
  return s + ")";
}

std::string q_str(const Polarization& q) {
  std::string s = "(";
  for (int i = 0; i < q.size(); ++i) {
    if (i) s += ", ";
    s += format_rational(q[i]);
  }
  return s + ")";
}

std::string signature_str(const Signature& sig) {
  std::string s = "{";
  for (std::size_t i = 0; i < sig.size(); ++i) {
    if (i) s += ", ";
    s += tuple_str(sig[i]);
  }
  return s + "}";
}

std::string subcurve_names(const CurveGraph& g, Subcurve y) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < g.gamma(); ++i)
    if (y.contains(i)) {
      if (!first) s += ", ";
      s += g.component(i).name;
      first = false;
    }
  return s + "}";
}

Polarization parse_q(const CurveGraph& g, const std::string& q_text) {
  json jq;
  try {
    jq = json::parse(q_text);
  } catch (const json::parse_error& e) {
    fail(errc::invalid_input, std::string("--q: ") + e.what());
  }
  Polarization q = polarization_from_json(jq);
  if (q.size() != g.gamma()) fail(errc::invalid_input, "polarization length differs from gamma");
  return q;
}

json classes_to_json(const std::vector<JacobianClass>& classes, bool with_abel) {
  json out = json::array();
  for (const JacobianClass& c : classes) {
    json sig = json::array();
    for (const Multidegree& d : c.signature) sig.push_back(multidegree_to_json(d));
    json jc{{"representative", polarization_to_json(c.representative)}, {"signature", std::move(sig)}};
    if (with_abel) {
      jc["abel_admissible"] = c.abel_admissible.value();
      jc["abel_witness"] = c.abel_witness ? multidegree_to_json(*c.abel_witness) : json(nullptr);
    }
    out.push_back(std::move(jc));
  }
  return out;
}

bool same_signatures(const std::vector<JacobianClass>& a, const std::vector<JacobianClass>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].signature != b[i].signature) return false;
  return true;
}

}  // namespace

CmdResult cmd_analyze(const std::string& path) {
  CurveGraph g = curve_from_file(path);
  ClassGroup cg = build_class_group(g);
  Int trees = spanning_tree_count(g);

  long long nodes = 0;
  for (int i = 0; i < g.gamma(); ++i)
    for (int j = i + 1; j < g.gamma(); ++j) nodes += g.intersection(i, j);

  std::size_t name_width = 4;
  for (int i = 0; i < g.gamma(); ++i)
    name_width = std::max(name_width, g.component(i).name.size());

  json jcomps = json::array();
  std::ostringstream t;
  t << "gamma: " << g.gamma() << "\n";
  t << "nodes between distinct components: " << nodes << "\n";
  t << "components:\n";
  t << "  idx  " << pad("name", name_width) << "  genus  delta\n";
  for (int i = 0; i < g.gamma(); ++i) {
    long long di = g.gamma() == 1 ? 0 : delta(g, Subcurve{1u << static_cast<unsigned>(i)});
    const Component& c = g.component(i);
    jcomps.push_back({{"name", c.name}, {"genus", c.genus}, {"delta", di}});
    t << "  " << pad(std::to_string(i), 3) << "  " << pad(c.name, name_width) << "  "
      << pad(std::to_string(c.genus), 5) << "  " << di << "\n";
  }
  json jcurve{{"gamma", g.gamma()}, {"nodes", nodes}, {"components", std::move(jcomps)}};

  if (g.has_points()) {
    std::vector<int> sep = separating_points(g);
    jcurve["separating_points"] = sep;
    t << "separating points: ";
    if (sep.empty()) {
      t << "none\n";
    } else {
      for (std::size_t k = 0; k < sep.size(); ++k) {
        if (k) t << ", ";
        const PointRecord& rec = g.points()[static_cast<std::size_t>(sep[k])];
        Subcurve on{0};
        for (int i : rec.on) on.mask |= 1u << static_cast<unsigned>(i);
        t << sep[k] << " " << subcurve_names(g, on);
      }
      t << "\n";
    }
  } else {
    t << "separating points: (no point records supplied)\n";
  }

  json factors = json::array();
  std::string factors_text;
  for (const Int& f : cg.invariant_factors) {
    factors.push_back(f.get_str());
    if (!factors_text.empty()) factors_text += ", ";
    factors_text += f.get_str();
  }
  json jcg{{"order", cg.order.get_str()},
           {"invariant_factors", std::move(factors)},
           {"spanning_trees", trees.get_str()}};
  t << "degree class group order: " << cg.order.get_str() << "\n";
  t << "invariant factors: [" << factors_text << "]\n";
  t << "spanning trees: " << trees.get_str() << "\n";

  CmdResult r;
  r.report = json{{"schema", report_schema}, {"curve", std::move(jcurve)}, {"class_group", std::move(jcg)}};
  r.table = t.str();
  return r;
}

CmdResult cmd_check_general(const std::string& path, const std::string& q_text) {
  CurveGraph g = curve_from_file(path);
  Polarization q = parse_q(g, q_text);
  GeneralityResult res = check_general(g, q);

  CmdResult r;
  r.report = json{{"schema", report_schema}, {"q", polarization_to_json(q)}, {"general", res.general}};
  std::ostringstream t;
  if (res.general) {
    r.report["witness"] = nullptr;
    t << "GENERAL\n";
  } else {
    json names = json::array();
    for (int i = 0; i < g.gamma(); ++i)
      if (res.witness->contains(i)) names.push_back(g.component(i).name);
    r.report["witness"] = std::move(names);
    t << "NOT GENERAL\nwitness subcurve: " << subcurve_names(g, *res.witness) << "\n";
    r.exit_code = 1;
  }
  r.table = t.str();
  return r;
}

CmdResult cmd_stable_degrees(const std::string& path, const std::string& q_text) {
  CurveGraph g = curve_from_file(path);
  Polarization q = parse_q(g, q_text);
  std::vector<Multidegree> stable = stable_multidegrees(g, q);
  Int trees = spanning_tree_count(g);
  bool count_ok = Int(static_cast<long>(stable.size())) == trees;

  json jstable = json::array();
  for (const Multidegree& d : stable) jstable.push_back(multidegree_to_json(d));

  std::ostringstream t;
  t << "stable multidegrees for q = " << q_str(q) << ": " << stable.size() << "\n";
  for (const Multidegree& d : stable) t << "  " << tuple_str(d) << "\n";
  t << "count = c(X) = " << trees.get_str() << ": " << (count_ok ? "yes" : "NO") << "\n";

  CmdResult r;
  r.exit_code = count_ok ? 0 : 1;
  r.report = json{{"schema", report_schema},
                  {"q", polarization_to_json(q)},
                  {"count", stable.size()},
                  {"complexity", trees.get_str()},
                  {"count_equals_complexity", count_ok},
                  {"stable", std::move(jstable)}};
  r.table = t.str();
  return r;
}

CmdResult cmd_classify(const std::string& path, const ClassifyOptions& opt) {
  CurveGraph g = curve_from_file(path);
  long long grid;
  std::vector<JacobianClass> classes;
  if (opt.grid > 0) {
    grid = opt.grid;
    classes = classify(g, opt.degree, grid);
  } else {
    // Default denominator, then doubling until the class list stops changing;
    // the result is the list at the first confirmed denominator.
    grid = default_grid_denominator(g);
    classes = classify(g, opt.degree, grid);
    bool settled = false;
    for (int round = 0; round < 6; ++round) {
      std::vector<JacobianClass> finer = classify(g, opt.degree, grid * 2);
      if (same_signatures(classes, finer)) {
        settled = true;
        break;
      }
      classes = std::move(finer);
      grid *= 2;
    }
    if (!settled)
      fail(errc::limit_exceeded,
           "classification did not stabilize under grid doubling; rerun with an explicit --grid");
  }
  if (opt.abel) classes = admissible_classes(g, std::move(classes));

  std::ostringstream t;
  t << "classes: " << classes.size() << "  (total degree " << opt.degree << ", grid denominator "
    << grid << ")\n";
  for (std::size_t k = 0; k < classes.size(); ++k) {
    const JacobianClass& c = classes[k];
    t << "#" << k << "\n";
    t << "  representative: " << q_str(c.representative) << "\n";
    t << "  signature: " << signature_str(c.signature) << "\n";
    if (opt.abel) {
      if (c.abel_admissible.value())
        t << "  abel: admissible, witness " << tuple_str(*c.abel_witness) << "\n";
      else
        t << "  abel: not admissible\n";
    }
  }

  CmdResult r;
  r.report = json{{"schema", report_schema},
                  {"degree", opt.degree},
                  {"grid", grid},
                  {"abel", opt.abel},
                  {"count", classes.size()},
                  {"classes", classes_to_json(classes, opt.abel)}};
  r.table = t.str();
  return r;
}

CmdResult cmd_kodaira(int n_max) {
  if (n_max < 2 || n_max > 6)
    fail(errc::invalid_input, "kodaira suite supports 2 <= n-max <= 6");

  json cases = json::array();
  std::ostringstream t;
  t << "Kodaira cycle suite I_2 .. I_" << n_max << "\n";
  bool all_ok = true;
  for (int n = 2; n <= n_max; ++n) {
    CurveGraph g = cycle_curve(n);
    std::vector<JacobianClass> classes = admissible_classes(g, classify(g, 0, n));
    long long expected = 1;
    for (int k = 2; k < n; ++k) expected *= k;
    bool count_ok = static_cast<long long>(classes.size()) == expected;

    Int trees = spanning_tree_count(g);
    ClassGroup cg = build_class_group(g);
    bool c_ok = trees == n && cg.order == n;

    const JacobianClass* adm = nullptr;
    int adm_count = 0;
    for (const JacobianClass& c : classes)
      if (c.abel_admissible.value_or(false)) {
        ++adm_count;
        adm = &c;
      }

    // Canonical admissible polarization ((n-1)/n, ..., (n-1)/n, -(n-1)^2/n);
    // the representative must differ from it by an integer vector and carry
    // the same signature.
    std::vector<Rat> canon;
    for (int i = 0; i + 1 < n; ++i) canon.push_back(make_rat(n - 1, n));
    canon.push_back(-make_rat(static_cast<long>(n - 1) * (n - 1), n));
    Polarization qstar(std::move(canon));
    bool canonical_ok = false;
    if (adm_count == 1) {
      canonical_ok = true;
      for (int i = 0; i < n; ++i)
        if (!is_integer(adm->representative[i] - qstar[i])) canonical_ok = false;
      if (canonical_ok) canonical_ok = adm->signature == signature_of(g, qstar);
    }

    bool ok = count_ok && c_ok && adm_count == 1 && canonical_ok;
    all_ok = all_ok && ok;
    cases.push_back({{"n", n},
                     {"classes", classes.size()},
                     {"expected_classes", expected},
                     {"complexity_ok", c_ok},
                     {"admissible_count", adm_count},
                     {"canonical_ok", canonical_ok},
                     {"ok", ok}});
    t << "I_" << n << ": classes " << classes.size() << "/" << expected << ", c(X) "
      << (c_ok ? "ok" : "MISMATCH") << ", admissible " << adm_count << ", canonical "
      << (canonical_ok ? "ok" : "MISMATCH") << (ok ? "  => OK" : "  => FAIL") << "\n";
  }
  t << (all_ok ? "all cases OK\n" : "FAILURES present\n");

  CmdResult r;
  r.exit_code = all_ok ? 0 : 1;
  r.report = json{{"schema", report_schema}, {"n_max", n_max}, {"cases", std::move(cases)}, {"ok", all_ok}};
  r.table = t.str();
  return r;
}

}  // namespace jaccomb
