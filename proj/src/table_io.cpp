#include <cstdio>
#include <fstream>
#include <sstream>

#include "tzeig/matrixless.hpp"

namespace tzeig {

void save_table(const CoefficientTable<double>& table, std::ostream& out) {
  const Index n1 = table.grid.base_size;
  out << n1 << ' ' << table.grid.levels << ' ' << format_symbol(table.symbol) << '\n';
  char buf[32];
  for (Index j = 0; j < table.grid.node_count(); ++j) {
    out << j;
    std::snprintf(buf, sizeof(buf), " %.16e", theta_node<double>(j, n1));
    out << buf;
    for (int k = 1; k <= table.grid.levels; ++k) {
      std::snprintf(buf, sizeof(buf), " %.16e", table.value(j, k));
      out << buf;
    }
    out << '\n';
  }
  if (!out) throw Error("save_table: write failed");
}

void save_table(const CoefficientTable<double>& table, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("save_table: cannot open '" + path + "'");
  save_table(table, out);
}

CoefficientTable<double> load_table(std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw Error("load_table: missing header");
  std::istringstream hs(header);
  Index n1 = 0;
  int alpha = 0;
  std::string spec_text;
  if (!(hs >> n1 >> alpha >> spec_text)) throw Error("load_table: malformed header");

  CoefficientTable<double> table;
  table.grid = build_grid(n1, alpha);
  table.symbol = parse_symbol(spec_text);
  table.values.setZero(table.grid.node_count(), alpha);
  for (Index j = 0; j < table.grid.node_count(); ++j) {
    std::string line;
    if (!std::getline(in, line)) throw Error("load_table: truncated table");
    std::istringstream ls(line);
    Index jj = 0;
    double theta = 0;
    if (!(ls >> jj >> theta) || jj != j) throw Error("load_table: bad row index");
    for (int k = 0; k < alpha; ++k)
      if (!(ls >> table.values(j, k))) throw Error("load_table: bad row data");
  }
  return table;
}

CoefficientTable<double> load_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("load_table: cannot open '" + path + "'");
  return load_table(in);
}

}  // namespace tzeig
