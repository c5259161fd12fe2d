#include "fhankel/report.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fhankel {

const char* const kConvergenceCsvHeader =
    "weight_kind,alpha,m,q,mu,N,precision_bits,log_calH_exact,log_calH_ff,rel_error";

int csv_significant_digits(long precision_bits) {
  double d = static_cast<double>(precision_bits) / 3.3;
  return d > 17.0 ? static_cast<int>(std::ceil(d)) : 17;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.16e", v);
  return buf;
}

std::string join_semicolon(const std::vector<double>& v) {
  std::string out;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ';';
    out += format_double(v[i]);
  }
  return out;
}

std::vector<double> split_list(const std::string& s, char sep) {
  std::vector<double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    size_t pos = 0;
    double v = std::stod(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("unparsable number '" + item + "'");
    out.push_back(v);
  }
  return out;
}

std::string to_csv_row(const ConvergenceRecord& r) {
  int digits = csv_significant_digits(r.precision_bits);
  std::string out = r.weight_kind;
  out += ',';
  out += format_double(r.alpha);
  out += ',';
  out += std::to_string(r.m);
  out += ',';
  out += join_semicolon(r.q);
  out += ',';
  out += join_semicolon(r.mu);
  out += ',';
  out += std::to_string(r.N);
  out += ',';
  out += std::to_string(r.precision_bits);
  out += ',';
  out += r.log_calH_exact.to_string(digits);
  out += ',';
  out += r.log_calH_ff.to_string(digits);
  out += ',';
  out += r.rel_error.to_string(digits);
  return out;
}

ConvergenceRecord parse_csv_row(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) fields.push_back(f);
  if (fields.size() != 10) throw std::invalid_argument("CSV row must have 10 fields");
  ConvergenceRecord r;
  r.weight_kind = fields[0];
  r.alpha = std::stod(fields[1]);
  r.m = std::stol(fields[2]);
  r.q = split_list(fields[3], ';');
  r.mu = split_list(fields[4], ';');
  r.N = std::stol(fields[5]);
  r.precision_bits = std::stol(fields[6]);
  {
    ScopedPrecision guard(r.precision_bits);
    r.log_calH_exact = Real::from_string(fields[7]);
    r.log_calH_ff = Real::from_string(fields[8]);
    r.rel_error = Real::from_string(fields[9]);
  }
  return r;
}

void write_convergence_csv(std::ostream& os, const std::vector<ConvergenceRecord>& rows) {
  os << kConvergenceCsvHeader << '\n';
  for (const auto& r : rows) os << to_csv_row(r) << '\n';
}

std::vector<ConvergenceRecord> read_convergence_csv(std::istream& is) {
  std::vector<ConvergenceRecord> rows;
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("empty CSV");
  if (line != kConvergenceCsvHeader) throw std::invalid_argument("unexpected CSV header");
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    rows.push_back(parse_csv_row(line));
  }
  return rows;
}

}  // namespace fhankel
