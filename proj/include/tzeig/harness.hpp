#pragma once

#include <Eigen/Core>

#include <iosfwd>
#include <string>
#include <vector>

#include "tzeig/matrixless.hpp"
#include "tzeig/symbol.hpp"

namespace tzeig {

enum class Method { Nas, Na, Sl };

std::string to_string(Method m);
Method parse_method(const std::string& text);

/// One experiment: a symbol, the extrapolation setup, the target orders and
/// levels to evaluate, and the comparison methods to run.
struct ExperimentConfig {
  SymbolSpec symbol;
  int n1 = 100;
  int alpha = 5;
  std::vector<Index> sizes;          // target matrix orders
  std::vector<int> levels;           // e.g. 1..4
  std::vector<Method> methods{Method::Nas};
  Index dense_ceiling = 2048;        // largest order solved for reference spectra
  std::string reference_file;        // optional: eigenvalues, one per line, ascending
};

/// Errors of one (method, n, level) run against the reference spectrum.
struct ErrorReport {
  Method method = Method::Nas;
  std::string symbol;  // formatted spec
  Index n = 0;
  int n1 = 0;
  int alpha = 0;
  int level = 0;
  Eigen::VectorXd lambda_ref;
  Eigen::VectorXd lambda_approx;
  Eigen::VectorXd abs_err;
  double max_err = 0.0;     // max_j abs_err[j]
  double normalized = 0.0;  // (n+1)^level * max_err
};

/// Runs the precompute-extrapolate-approximate-compare pipeline for every
/// (size, method, level) in the config.  Deterministic for a fixed config.
std::vector<ErrorReport> run_experiment(const ExperimentConfig& config);

/// Extrapolated s-variable coefficient table for a symbol, computed with the
/// extended-precision precompute backend and returned in double.
CoefficientTable<double> precompute_table(const SymbolSpec& symbol, int n1, int alpha);

/// Reference spectrum for order n, subject to the dense-solve ceiling.
Eigen::VectorXd reference_spectrum(const SymbolSpec& symbol, Index n, Index dense_ceiling);

/// Eigenvalues from a text file, one per line; must contain exactly n values.
Eigen::VectorXd load_reference(const std::string& path, Index n);

/// Evaluates a previously computed table at one target order (the
/// `approximate` CLI path).  Reference comes from `reference_file` when
/// non-empty, otherwise from a dense solve.
std::vector<ErrorReport> evaluate_with_table(const CoefficientTable<double>& table,
                                             const std::vector<int>& levels, Index n,
                                             const std::string& reference_file = {},
                                             Index dense_ceiling = 2048);

enum class OutputFormat { Csv, Table, Plotdata };

OutputFormat parse_format(const std::string& text);

/// csv: one row per (report, j) under a fixed header.
/// table: max and normalized errors, one column per n.
/// plotdata: `j log10(eps_j)` blocks, one per report.
void emit(const std::vector<ErrorReport>& reports, OutputFormat format, std::ostream& out);
void emit(const std::vector<ErrorReport>& reports, OutputFormat format, const std::string& path);

/// Built-in configs reproducing the four benchmark error tables.
/// `heavy` adds the n = 4096 column and raises the dense ceiling.
ExperimentConfig table_preset(int table_id, bool heavy = false);

}  // namespace tzeig
