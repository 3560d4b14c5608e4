// nrgit: stability of binary forms under the Borel subgroup of SL(2).

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "nrgit/report.hpp"

int main(int argc, char** argv) {
  using namespace nrgit;
  CLI::App app{"Stability, walls and flips for points on P^1 under the Borel subgroup of SL(2)"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  int n = 0;
  std::int64_t m = 1;
  std::int64_t r = 0;
  std::string profile;
  std::string tau;
  std::string n_display = "10";
  std::string out_path;

  auto* classify = app.add_subcommand("classify", "Classify one divisor profile");
  classify->add_option("--n", n, "Degree")->required();
  classify->add_option("--m", m, "Linearisation m > 0")->required();
  classify->add_option("--r", r, "Character twist r")->required();
  classify->add_option("--profile", profile, "inf=<k>,zero=<k>,roots=<k1+k2+...>")->required();

  auto* table = app.add_subcommand("table1", "Fixed-point weights on the envelope");
  table->add_option("--n", n)->required();
  table->add_option("--m", m)->required();
  table->add_option("--r", r)->required();

  auto* walls = app.add_subcommand("walls", "Walls and chambers in tau = r/m");
  walls->add_option("--n", n)->required();

  auto* flips = app.add_subcommand("flips", "Flip data at an interior wall");
  flips->add_option("--n", n)->required();
  flips->add_option("--tau", tau, "Wall value, p/q or integer")->required();

  auto* census = app.add_subcommand("census", "Verify every classifier against brute force");
  census->add_option("--n", n)->required();
  census->add_option("--m", m)->required();
  census->add_option("--r", r)->required();

  auto* unipotent = app.add_subcommand("unipotent", "Check the unipotent baseline against its envelope");
  unipotent->add_option("--n", n)->required();

  auto* diagram = app.add_subcommand("diagram", "SVG weight diagram");
  diagram->add_option("--n", n)->required();
  diagram->add_option("--m", m)->required();
  diagram->add_option("--r", r)->required();
  diagram->add_option("--N", n_display, "Display value of N");
  diagram->add_option("--out", out_path, "Output file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  try {
    if (*diagram) {
      const std::string svg = cmd_diagram(n, m, r, n_display);
      if (out_path.empty()) {
        std::cout << svg;
      } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + out_path);
        f << svg;
      }
      return exit_code::kOk;
    }
    Report rep;
    if (*classify) rep = cmd_classify(n, m, r, profile);
    if (*table) rep = cmd_table1(n, m, r);
    if (*walls) rep = cmd_walls(n);
    if (*flips) rep = cmd_flips(n, tau);
    if (*census) rep = cmd_census(n, m, r);
    if (*unipotent) rep = cmd_unipotent(n);
    std::cout << render(rep, format);
    return rep.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return exit_code::kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_code::kInternal;
  }
}
