#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mvsf::cli {

/// One verification line: a closed form against an independent numeric
/// evaluation. pass <=> |closed_form - numeric| <= 3 std_error + tail_bound + 1e-9.
/// Deterministic rows (quadrature, series, finite differences) carry their
/// allowed error in tail_bound and report std_error = 0.
struct ResultRow {
  std::string case_id;
  double closed_form = 0.0;
  double numeric = 0.0;
  double std_error = 0.0;
  double tail_bound = 0.0;
  double rel_diff = 0.0;
  bool pass = false;
};

ResultRow make_row(std::string case_id, double closed_form, double numeric, double std_error, double tail_bound);

struct Options {
  std::string format = "csv";
  std::uint64_t seed = 0;
  std::uint64_t samples = 200'000;
  int p = 2;
  std::optional<double> alpha, beta, gamma, delta;
  /// Kober anchor and default hyp argument scale: U = u I.
  std::optional<double> u;
  std::optional<int> kind;
  std::optional<std::string> kober_case;
  int kmax = 25;
  std::vector<double> a, b;
  /// Eigenvalues of the hyp argument.
  std::vector<double> x;
  int nodes = 64;
  int instances = 200;
};

/// Rows plus messages for rows whose numeric side raised an error.
struct Report {
  std::vector<ResultRow> rows;
  std::vector<std::string> errors;

  void append(Report other);
  /// Sorts rows by case_id.
  void finalize();
  bool all_pass() const;
};

Report gamma_rows(const Options& o);
Report beta_rows(const Options& o);
Report kober_rows(const Options& o);
Report hyp_rows(const Options& o);
Report sample_rows(const Options& o);
Report jacobian_rows(const Options& o);
/// Every module check at fixed parameters, with o.seed and o.samples.
Report verify_all_rows(const Options& o);

/// 12 significant digits, locale independent.
std::string format_number(double v);

void write_csv(std::ostream& out, const std::vector<ResultRow>& rows);
void write_json(std::ostream& out, const std::vector<ResultRow>& rows);

/// Parses argv and runs one verb. Returns 0 if every row passes, 1 if any
/// fails, 2 on invalid flags or parameters outside a function's domain.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace mvsf::cli
