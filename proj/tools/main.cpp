#include <exception>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "jaccomb/error.hpp"
#include "jaccomb/report.hpp"

namespace {

int emit(const jaccomb::CmdResult& r, const std::string& format) {
  if (format == "json")
    std::cout << r.report.dump(2) << "\n";
  else
    std::cout << r.table;
  return r.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"jaccomb: combinatorial invariants of fine compactified Jacobians"};
  app.footer("Exit codes: 0 success/affirmative, 1 negative verdict, 2 invalid input.\n"
             "Environment: JACCOMB_THREADS caps parallelism (0 or unset = auto).");
  app.require_subcommand(1);

  std::string format = "table";
  std::string path, q_text;
  long long degree = 0, grid = 0;
  bool abel = false;
  int n_max = 2;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format: table or json (default table)")
        ->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "Curve summary, class group, complexity");
  analyze->add_option("file", path, "Curve JSON file")->required();
  add_format(analyze);

  CLI::App* checkg =
      app.add_subcommand("check-general", "Decide whether a polarization is general");
  checkg->add_option("file", path, "Curve JSON file")->required();
  checkg->add_option("--q", q_text, "Polarization as a JSON array of rationals")->required();
  add_format(checkg);

  CLI::App* stable =
      app.add_subcommand("stable-degrees", "Stable multidegrees of a general polarization");
  stable->add_option("file", path, "Curve JSON file")->required();
  stable->add_option("--q", q_text, "Polarization as a JSON array of rationals")->required();
  add_format(stable);

  CLI::App* classify =
      app.add_subcommand("classify", "Translation classes of fine compactified Jacobians");
  classify->add_option("file", path, "Curve JSON file")->required();
  classify->add_option("--degree", degree, "Total degree of the polarizations")->required();
  classify->add_flag("--abel", abel, "Annotate classes with Abel admissibility");
  classify->add_option("--grid", grid,
                       "Grid denominator override (default: automatic with stabilization)");
  add_format(classify);

  CLI::App* kodaira = app.add_subcommand("kodaira", "Built-in Kodaira cycle acceptance suite");
  kodaira->add_option("--n-max", n_max, "Largest cycle length, between 2 and 6")->required();
  add_format(kodaira);

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return emit(jaccomb::cmd_analyze(path), format);
    if (app.got_subcommand(checkg)) return emit(jaccomb::cmd_check_general(path, q_text), format);
    if (app.got_subcommand(stable)) return emit(jaccomb::cmd_stable_degrees(path, q_text), format);
    if (app.got_subcommand(classify))
      return emit(jaccomb::cmd_classify(path, jaccomb::ClassifyOptions{degree, abel, grid}), format);
    if (app.got_subcommand(kodaira)) return emit(jaccomb::cmd_kodaira(n_max), format);
  } catch (const jaccomb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == jaccomb::errc::not_general ? 1 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
