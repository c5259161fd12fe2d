#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fhankel/ensembles.hpp"
#include "fhankel/log_signed.hpp"

namespace fhankel {

// One row of a convergence study. The spec fields (weight, alpha, m, q, mu,
// N, precision_bits) round-trip exactly through the CSV text; logs are
// written with enough digits for the working precision.
struct ConvergenceRecord {
  std::string weight_kind;  // "hermite" | "laguerre"
  double alpha = 0;
  long m = 0;
  std::vector<double> q;
  std::vector<double> mu;
  long N = 0;
  long precision_bits = 0;
  Real log_calH_exact = Real(0);
  Real log_calH_ff = Real(0);
  Real rel_error = Real(0);  // |exp(log_exact - log_ff) - 1|
};

// Significant digits carried by CSV numbers: max(bits / 3.3, 17).
int csv_significant_digits(long precision_bits);

extern const char* const kConvergenceCsvHeader;

std::string to_csv_row(const ConvergenceRecord& r);
ConvergenceRecord parse_csv_row(const std::string& line);

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& rows);
std::vector<ConvergenceRecord> read_convergence_csv(std::istream& is);

// Helpers shared with the CLI.
std::string format_double(double v);                      // round-trip exact
std::string join_semicolon(const std::vector<double>& v);
std::vector<double> split_list(const std::string& s, char sep);

}  // namespace fhankel
