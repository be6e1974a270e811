#include "tzeig/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "tzeig/baselines.hpp"
#include "tzeig/toeplitz.hpp"

namespace tzeig {

namespace {

// Precompute and reference solves run in extended precision; everything
// reported to the user is double.
using Wide = long double;

std::string fmt(const char* f, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

struct Pipeline {
  Symbol<Wide> sym;
  ExtrapolationGrid grid;
  std::vector<SpectrumVector<Wide>> spectra;
  CoefficientTable<Wide> table_s;
  CoefficientTable<Wide> table_lambda;  // only when NA is requested
  bool has_lambda = false;
};

Pipeline build_pipeline(const SymbolSpec& spec, int n1, int alpha, bool with_lambda) {
  Pipeline p{Symbol<Wide>::from_spec(spec), build_grid(n1, alpha), {}, {}, {}, with_lambda};
  for (int k = 1; k <= alpha; ++k)
    p.spectra.push_back(eigenvalues_sorted(build_matrix(p.sym, p.grid.size(k))));
  p.table_s = extrapolate_coefficients(p.sym, p.grid, p.spectra);
  if (with_lambda) p.table_lambda = extrapolate_lambda_coefficients(p.sym, p.grid, p.spectra);
  return p;
}

ErrorReport make_report(const ExperimentConfig& cfg, Method method, Index n, int level,
                        const Eigen::VectorXd& ref, const Eigen::VectorXd& approx) {
  ErrorReport r;
  r.method = method;
  r.symbol = format_symbol(cfg.symbol);
  r.n = n;
  r.n1 = cfg.n1;
  r.alpha = cfg.alpha;
  r.level = level;
  r.lambda_ref = ref;
  r.lambda_approx = approx;
  r.abs_err = (ref - approx).cwiseAbs();
  r.max_err = r.abs_err.maxCoeff();
  r.normalized = r.max_err * std::pow(static_cast<double>(n + 1), level);
  return r;
}

void validate(const ExperimentConfig& cfg) {
  if (cfg.sizes.empty()) throw std::invalid_argument("experiment: no target sizes");
  if (cfg.levels.empty()) throw std::invalid_argument("experiment: no levels");
  if (cfg.methods.empty()) throw std::invalid_argument("experiment: no methods");
  for (int level : cfg.levels)
    if (level < 1 || level > cfg.alpha)
      throw std::invalid_argument("experiment: level out of range");
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::Nas:
      return "NAS";
    case Method::Na:
      return "NA";
    case Method::Sl:
    default:
      return "SL";
  }
}

Method parse_method(const std::string& text) {
  if (text == "NAS" || text == "nas") return Method::Nas;
  if (text == "NA" || text == "na") return Method::Na;
  if (text == "SL" || text == "sl") return Method::Sl;
  throw std::invalid_argument("unknown method '" + text + "'");
}

Eigen::VectorXd load_reference(const std::string& path, Index n) {
  std::ifstream in(path);
  if (!in) throw Error("load_reference: cannot open '" + path + "'");
  std::vector<double> values;
  double v = 0;
  while (in >> v) values.push_back(v);
  if (static_cast<Index>(values.size()) != n)
    throw Error("load_reference: expected " + std::to_string(n) + " values, got " +
                std::to_string(values.size()));
  Eigen::VectorXd out = Eigen::Map<Eigen::VectorXd>(values.data(), n);
  std::sort(out.begin(), out.end());
  return out;
}

Eigen::VectorXd reference_spectrum(const SymbolSpec& symbol, Index n, Index dense_ceiling) {
  if (n > dense_ceiling)
    throw InfeasibleReference("reference_spectrum: order " + std::to_string(n) +
                              " exceeds the dense-solve ceiling " + std::to_string(dense_ceiling));
  const Symbol<Wide> sym = Symbol<Wide>::from_spec(symbol);
  return eigenvalues_sorted(build_matrix(sym, n)).cast<double>();
}

CoefficientTable<double> precompute_table(const SymbolSpec& symbol, int n1, int alpha) {
  return build_pipeline(symbol, n1, alpha, false).table_s.cast<double>();
}

std::vector<ErrorReport> run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const bool wants_na = std::count(cfg.methods.begin(), cfg.methods.end(), Method::Na) > 0;
  const bool wants_sl = std::count(cfg.methods.begin(), cfg.methods.end(), Method::Sl) > 0;
  if (wants_sl && cfg.symbol.family != SymbolFamily::Kms)
    throw UnsupportedSymbol("experiment: SL baseline requires a kms symbol");

  const Pipeline p = build_pipeline(cfg.symbol, cfg.n1, cfg.alpha, wants_na);

  std::vector<ErrorReport> reports;
  for (Index n : cfg.sizes) {
    Eigen::VectorXd ref_d;
    if (!cfg.reference_file.empty())
      ref_d = load_reference(cfg.reference_file, n);
    else
      ref_d = reference_spectrum(cfg.symbol, n, cfg.dense_ceiling);

    for (Method method : cfg.methods) {
      for (int level : cfg.levels) {
        Eigen::VectorXd approx;
        switch (method) {
          case Method::Nas:
            approx = approximate_all(p.sym, n, p.table_s, level).lambda_hat.cast<double>();
            break;
          case Method::Na:
            approx = na_approximation(p.sym, n, p.table_lambda, level).cast<double>();
            break;
          case Method::Sl:
            approx = sl_approximate_all(p.sym, n, level).cast<double>();
            break;
        }
        reports.push_back(make_report(cfg, method, n, level, ref_d, approx));
      }
    }
  }
  return reports;
}

std::vector<ErrorReport> evaluate_with_table(const CoefficientTable<double>& table,
                                             const std::vector<int>& levels, Index n,
                                             const std::string& reference_file,
                                             Index dense_ceiling) {
  if (levels.empty()) throw std::invalid_argument("evaluate_with_table: no levels");
  ExperimentConfig cfg;
  cfg.symbol = table.symbol;
  cfg.n1 = static_cast<int>(table.grid.base_size);
  cfg.alpha = table.grid.levels;
  cfg.sizes = {n};
  cfg.levels = levels;

  Eigen::VectorXd ref = reference_file.empty()
                            ? reference_spectrum(table.symbol, n, dense_ceiling)
                            : load_reference(reference_file, n);
  const Symbol<double> sym = Symbol<double>::from_spec(table.symbol);
  std::vector<ErrorReport> reports;
  for (int level : levels) {
    const Eigen::VectorXd approx = approximate_all(sym, n, table, level).lambda_hat;
    reports.push_back(make_report(cfg, Method::Nas, n, level, ref, approx));
  }
  return reports;
}

OutputFormat parse_format(const std::string& text) {
  if (text == "csv") return OutputFormat::Csv;
  if (text == "table") return OutputFormat::Table;
  if (text == "plotdata") return OutputFormat::Plotdata;
  throw std::invalid_argument("unknown format '" + text + "'");
}

namespace {

void emit_csv(const std::vector<ErrorReport>& reports, std::ostream& out) {
  out << "method,n,n1,alpha,level,j,theta,lambda_ref,lambda_approx,abs_err\n";
  for (const ErrorReport& r : reports) {
    const std::string prefix = to_string(r.method) + "," + std::to_string(r.n) + "," +
                               std::to_string(r.n1) + "," + std::to_string(r.alpha) + "," +
                               std::to_string(r.level) + ",";
    for (Index j = 1; j <= r.n; ++j) {
      out << prefix << j << ',' << fmt("%.16e", theta_node<double>(j, r.n)) << ','
          << fmt("%.16e", r.lambda_ref[j - 1]) << ',' << fmt("%.16e", r.lambda_approx[j - 1])
          << ',' << fmt("%.16e", r.abs_err[j - 1]) << '\n';
    }
  }
}

void emit_table(const std::vector<ErrorReport>& reports, std::ostream& out) {
  // group rows by (symbol, method); columns are the distinct n in first-seen order
  std::vector<std::pair<std::string, Method>> groups;
  for (const ErrorReport& r : reports) {
    const auto key = std::make_pair(r.symbol, r.method);
    if (std::find(groups.begin(), groups.end(), key) == groups.end()) groups.push_back(key);
  }
  for (const auto& [symbol, method] : groups) {
    std::vector<Index> sizes;
    std::vector<int> levels;
    const ErrorReport* first = nullptr;
    for (const ErrorReport& r : reports) {
      if (r.symbol != symbol || r.method != method) continue;
      if (!first) first = &r;
      if (std::find(sizes.begin(), sizes.end(), r.n) == sizes.end()) sizes.push_back(r.n);
      if (std::find(levels.begin(), levels.end(), r.level) == levels.end())
        levels.push_back(r.level);
    }
    std::sort(levels.begin(), levels.end());

    out << "# symbol=" << symbol << " n1=" << first->n1 << " alpha=" << first->alpha
        << " method=" << to_string(method) << '\n';
    out << "level  metric";
    for (Index n : sizes) out << fmt("%13.0f", static_cast<double>(n));
    out << '\n';
    for (int level : levels) {
      out << "    " << level << "  eps   ";
      for (Index n : sizes)
        for (const ErrorReport& r : reports)
          if (r.symbol == symbol && r.method == method && r.n == n && r.level == level)
            out << "   " << fmt("%.4e", r.max_err);
      out << '\n';
      out << "    " << level << "  norm  ";
      for (Index n : sizes)
        for (const ErrorReport& r : reports)
          if (r.symbol == symbol && r.method == method && r.n == n && r.level == level)
            out << "   " << fmt("%.4e", r.normalized);
      out << '\n';
    }
  }
}

void emit_plotdata(const std::vector<ErrorReport>& reports, std::ostream& out) {
  bool first = true;
  for (const ErrorReport& r : reports) {
    if (!first) out << '\n';
    first = false;
    out << "# method=" << to_string(r.method) << " symbol=" << r.symbol << " n=" << r.n
        << " n1=" << r.n1 << " alpha=" << r.alpha << " level=" << r.level << '\n';
    for (Index j = 1; j <= r.n; ++j)
      out << j << ' ' << fmt("%.6f", std::log10(r.abs_err[j - 1])) << '\n';
  }
}

}  // namespace

void emit(const std::vector<ErrorReport>& reports, OutputFormat format, std::ostream& out) {
  if (reports.empty()) throw std::invalid_argument("emit: empty report set");
  switch (format) {
    case OutputFormat::Csv:
      emit_csv(reports, out);
      break;
    case OutputFormat::Table:
      emit_table(reports, out);
      break;
    case OutputFormat::Plotdata:
      emit_plotdata(reports, out);
      break;
  }
  if (!out) throw Error("emit: write failed");
}

void emit(const std::vector<ErrorReport>& reports, OutputFormat format, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("emit: cannot open '" + path + "'");
  emit(reports, format, out);
}

ExperimentConfig table_preset(int table_id, bool heavy) {
  ExperimentConfig cfg;
  switch (table_id) {
    case 1:
      cfg.symbol = parse_symbol("kms:rho=0.5");
      break;
    case 2:
      cfg.symbol = parse_symbol("rctp:l=2");
      break;
    case 3:
      cfg.symbol = parse_symbol("rctp:l=3");
      break;
    case 4:
      cfg.symbol = parse_symbol("fdep:a0=3,a1=2");
      break;
    default:
      throw std::invalid_argument("table_preset: id must lie in [1, 4]");
  }
  cfg.n1 = 100;
  cfg.alpha = 5;
  cfg.sizes = {256, 512, 1024, 2048};
  cfg.levels = {1, 2, 3, 4};
  cfg.methods = {Method::Nas};
  cfg.dense_ceiling = 2048;
  if (heavy) {
    cfg.sizes.push_back(4096);
    cfg.dense_ceiling = 4096;
  }
  return cfg;
}

}  // namespace tzeig
