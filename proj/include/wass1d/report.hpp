#pragma once

#include <string>
#include <utility>
#include <vector>

namespace wass1d {

// How a measured quantity is held against the expected one.
enum class Comparison {
  AbsDiff,  // |measured - expected| <= tolerance
  AtMost,   // measured <= expected + tolerance
  AtLeast,  // measured >= expected - tolerance
};

struct ReportRow {
  int trial = 0;
  std::string quantity;
  double expected = 0.0;
  double measured = 0.0;
  double abs_err = 0.0;  // the violation measured by the comparison
  bool passed = true;
};

// Records for one claim. passed() holds iff max_violation() <= tolerance().
class VerificationReport {
 public:
  VerificationReport(std::string claim_id, double tolerance)
      : claim_id_(std::move(claim_id)), tolerance_(tolerance) {}

  void record(int trial, std::string quantity, double expected, double measured,
              Comparison cmp = Comparison::AbsDiff);
  // A yes/no check, stored as expected 1 and measured 0 or 1.
  void record_flag(int trial, std::string quantity, bool ok);

  const std::string& claim_id() const { return claim_id_; }
  double tolerance() const { return tolerance_; }
  double max_violation() const { return max_violation_; }
  bool passed() const { return max_violation_ <= tolerance_; }
  int trials() const { return trials_; }
  const std::vector<ReportRow>& rows() const { return rows_; }

  std::string summary() const;

 private:
  std::string claim_id_;
  double tolerance_;
  double max_violation_ = 0.0;
  int trials_ = 0;
  std::vector<ReportRow> rows_;
};

std::string csv_header();
// Rows of every report, in order, preceded by the header.
std::string to_csv(const std::vector<VerificationReport>& reports);

bool all_passed(const std::vector<VerificationReport>& reports);

// Shortest decimal text that reads back to the same double.
std::string format_double(double x);

}  // namespace wass1d
