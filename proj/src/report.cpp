#include "wass1d/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>

namespace wass1d {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void VerificationReport::record(int trial, std::string quantity, double expected,
                                double measured, Comparison cmp) {
  double violation = 0.0;
  switch (cmp) {
    case Comparison::AbsDiff: violation = std::abs(measured - expected); break;
    case Comparison::AtMost: violation = std::max(0.0, measured - expected); break;
    case Comparison::AtLeast: violation = std::max(0.0, expected - measured); break;
  }
  if (std::isnan(violation)) violation = std::numeric_limits<double>::infinity();
  const bool ok = violation <= tolerance_;
  max_violation_ = std::max(max_violation_, violation);
  trials_ = std::max(trials_, trial + 1);
  rows_.push_back({trial, std::move(quantity), expected, measured, violation, ok});
}

void VerificationReport::record_flag(int trial, std::string quantity, bool ok) {
  const double violation = ok ? 0.0 : std::numeric_limits<double>::infinity();
  max_violation_ = std::max(max_violation_, violation);
  trials_ = std::max(trials_, trial + 1);
  rows_.push_back({trial, std::move(quantity), 1.0, ok ? 1.0 : 0.0, violation, ok});
}

std::string VerificationReport::summary() const {
  return claim_id_ + ": " + (passed() ? "PASS" : "FAIL") + " rows=" +
         std::to_string(rows_.size()) + " max_violation=" + format_double(max_violation_) +
         " tolerance=" + format_double(tolerance_);
}

std::string csv_header() { return "claim_id,trial,quantity,expected,measured,abs_err,passed\n"; }

std::string to_csv(const std::vector<VerificationReport>& reports) {
  std::string out = csv_header();
  for (const auto& r : reports) {
    for (const auto& row : r.rows()) {
      out += r.claim_id();
      out += ',' + std::to_string(row.trial);
      out += ',' + row.quantity;
      out += ',' + format_double(row.expected);
      out += ',' + format_double(row.measured);
      out += ',' + format_double(row.abs_err);
      out += row.passed ? ",true\n" : ",false\n";
    }
  }
  return out;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const VerificationReport& r) { return r.passed(); });
}

}  // namespace wass1d
