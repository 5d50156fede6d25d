#include "orbchar/census.hpp"
#include "orbchar/export.hpp"
#include "orbchar/groups.hpp"
#include "orbchar/verify.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

std::vector<double> parse_y_list(const std::string& s) {
  std::vector<double> ys;
  std::stringstream in(s);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    double y = std::stod(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad y value: " + item);
    ys.push_back(y);
  }
  if (ys.empty()) throw std::invalid_argument("empty y list");
  return ys;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Characters, quantum dimensions and module censuses of the A4, S4, A5 orbifolds of V_{L_2}"};
  app.require_subcommand(1);

  std::string algebra, format = "csv", out;
  auto* tables = app.add_subcommand("tables", "render the module tables of an orbifold");
  tables->add_option("algebra", algebra, "A4, S4 or A5")->required();
  tables->add_option("--format", format, "csv, json or markdown")->capture_default_str();
  tables->add_option("--out", out, "output file (default stdout)");

  std::string spec;
  long trunc = 10;
  auto* character = app.add_subcommand(
      "character",
      "dump a character as exponent:coefficient lines\n"
      "specs: P | VL2 | VL2+alpha/2 | L<k>[+][:label] | VZalpha|VZbeta|VZgamma|VZzeta|VZmu[+][:label]\n"
      "       | A4|S4|A5[:label] | group:<name>[:irrep]\n"
      "lattice labels: <j> (coset), +, -, half+, half-, T1+, T1-, T2+, T2-");
  character->add_option("spec", spec, "module spec")->required();
  character->add_option("--trunc", trunc, "known through q^{trunc-1/24}")->capture_default_str();

  orbchar::VerifyOptions vopt;
  std::string ys, vformat = "text", vout, config;
  auto* verify = app.add_subcommand("verify", "run every check; exit 1 on any failure");
  auto* o_trunc = verify->add_option("--trunc", vopt.order, "exact truncation")->capture_default_str();
  auto* o_ntrunc =
      verify->add_option("--numeric-trunc", vopt.numeric_order, "truncation for numeric qdims")->capture_default_str();
  auto* o_y = verify->add_option("--y", ys, "comma-separated y schedule; the last value is judged (default 0.02,0.01,0.005)");
  auto* o_tol = verify->add_option("--tol", vopt.tolerance, "numeric qdim tolerance")->capture_default_str();
  auto* o_fmt = verify->add_option("--format", vformat, "text or json")->capture_default_str();
  auto* o_out = verify->add_option("--out", vout, "output file (default stdout)");
  verify->add_option("--config", config, "JSON file with trunc, numeric_trunc, y, tol, format, out; flags win");

  std::string group;
  auto* groups = app.add_subcommand("groups", "export a stored character table as JSON");
  groups->add_option("name", group, "group name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (*tables) {
      emit(orbchar::render_tables(orbchar::parse_algebra(algebra), orbchar::parse_table_format(format)), out);
      return 0;
    }
    if (*character) {
      std::cout << orbchar::character_dump(orbchar::resolve_module_spec(spec, trunc));
      return 0;
    }
    if (*groups) {
      std::cout << orbchar::to_json(orbchar::group_data(group)).dump(2) << "\n";
      return 0;
    }
    if (*verify) {
      if (!config.empty()) {
        std::ifstream f(config);
        if (!f) throw std::runtime_error("cannot read " + config);
        const auto j = nlohmann::json::parse(f);
        if (!*o_trunc && j.contains("trunc")) vopt.order = j["trunc"].get<long>();
        if (!*o_ntrunc && j.contains("numeric_trunc")) vopt.numeric_order = j["numeric_trunc"].get<long>();
        if (!*o_y && j.contains("y")) vopt.y_schedule = j["y"].get<std::vector<double>>();
        if (!*o_tol && j.contains("tol")) vopt.tolerance = j["tol"].get<double>();
        if (!*o_fmt && j.contains("format")) vformat = j["format"].get<std::string>();
        if (!*o_out && j.contains("out")) vout = j["out"].get<std::string>();
      }
      if (*o_y) vopt.y_schedule = parse_y_list(ys);
      if (vformat != "text" && vformat != "json") throw std::invalid_argument("unknown format: " + vformat);
      const auto report = orbchar::run_verify(vopt);
      emit(vformat == "json" ? report.to_json().dump(2) + "\n" : report.to_text(), vout);
      return report.exit_code();
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
