#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "tzeig/harness.hpp"

namespace {

// "1..4" or "1,3,4"
std::vector<int> parse_levels(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = std::stoi(text.substr(0, dots));
    const int hi = std::stoi(text.substr(dots + 2));
    if (lo < 1 || hi < lo) throw std::invalid_argument("bad level range '" + text + "'");
    for (int l = lo; l <= hi; ++l) out.push_back(l);
    return out;
  }
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(std::stoi(text.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty level list");
  return out;
}

void write_out(const std::vector<tzeig::ErrorReport>& reports, tzeig::OutputFormat format,
               const std::string& out_path) {
  if (out_path.empty())
    tzeig::emit(reports, format, std::cout);
  else
    tzeig::emit(reports, format, out_path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix-less eigenvalue approximation for symmetric Toeplitz matrices"};
  app.set_config("--config", "", "Flat key=value config file; command-line flags override");
  app.require_subcommand(1);

  // precompute
  std::string pre_symbol, pre_out;
  int pre_n1 = 100, pre_alpha = 5;
  CLI::App* pre = app.add_subcommand("precompute", "Extrapolate a coefficient table");
  pre->add_option("--symbol", pre_symbol, "kms:rho=<r> | rctp:l=<int> | fdep:a0=<r>,a1=<r>")
      ->required();
  pre->add_option("--n1", pre_n1, "Base grid size");
  pre->add_option("--alpha", pre_alpha, "Number of nested grids");
  pre->add_option("--out", pre_out, "Output table path")->required();

  // approximate
  std::string ap_symbol, ap_levels = "1..4", ap_coeffs, ap_ref = "auto", ap_format = "csv",
              ap_out;
  long ap_n = 0, ap_ceiling = 2048;
  CLI::App* ap = app.add_subcommand("approximate", "Approximate all eigenvalues at order n");
  ap->add_option("--symbol", ap_symbol, "Symbol spec; must match the table")->required();
  ap->add_option("--n", ap_n, "Target matrix order")->required();
  ap->add_option("--levels", ap_levels, "Levels, e.g. 1..4 or 1,2,4");
  ap->add_option("--coeffs", ap_coeffs, "Coefficient table from `precompute`")->required();
  ap->add_option("--ref", ap_ref, "auto (dense solve) or a file of eigenvalues");
  ap->add_option("--format", ap_format, "csv | table | plotdata");
  ap->add_option("--out", ap_out, "Output path (stdout when omitted)");
  ap->add_option("--ceiling", ap_ceiling, "Dense-solve ceiling for --ref auto");

  // reproduce
  int rep_table = 0;
  bool rep_heavy = false;
  std::string rep_out;
  CLI::App* rep = app.add_subcommand("reproduce", "Reproduce a built-in benchmark table");
  rep->add_option("--paper-table", rep_table, "Table id, 1..4")->required();
  rep->add_flag("--heavy", rep_heavy, "Include the n=4096 column");
  rep->add_option("--out", rep_out, "Output path (stdout when omitted)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (pre->parsed()) {
      const tzeig::SymbolSpec spec = tzeig::parse_symbol(pre_symbol);
      const tzeig::CoefficientTable<double> table =
          tzeig::precompute_table(spec, pre_n1, pre_alpha);
      tzeig::save_table(table, pre_out);
      std::cerr << "wrote " << pre_out << "\n";
    } else if (ap->parsed()) {
      const tzeig::CoefficientTable<double> table = tzeig::load_table(ap_coeffs);
      if (tzeig::format_symbol(table.symbol) != tzeig::format_symbol(tzeig::parse_symbol(ap_symbol)))
        throw tzeig::Error("approximate: --symbol does not match the coefficient table");
      const std::string ref_file = (ap_ref == "auto") ? std::string{} : ap_ref;
      const auto reports =
          tzeig::evaluate_with_table(table, parse_levels(ap_levels), ap_n, ref_file, ap_ceiling);
      write_out(reports, tzeig::parse_format(ap_format), ap_out);
    } else if (rep->parsed()) {
      const auto reports = tzeig::run_experiment(tzeig::table_preset(rep_table, rep_heavy));
      write_out(reports, tzeig::OutputFormat::Table, rep_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
