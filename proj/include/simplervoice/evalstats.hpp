#pragma once

#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace simplervoice {

inline constexpr double kMinScore = 1.0;
inline constexpr double kMaxScore = 5.0;

// Opinion scores keyed by (product, rater).
class ScoreTable {
 public:
  // Throws ScoreOutOfRange outside [1, 5] and InvalidConfig for a repeated
  // (product, rater) pair.
  void add(std::string product, std::string rater, double score);

  // Tab-separated "product\trater\tscore" lines; '#' comments and blank
  // lines skipped. Errors carry the line number.
  static ScoreTable parse(std::istream& in, std::string_view source = "scores");

  const std::map<std::pair<std::string, std::string>, double>& scores() const noexcept { return scores_; }
  bool empty() const noexcept { return scores_.empty(); }

 private:
  std::map<std::pair<std::string, std::string>, double> scores_;
};

struct MOSSummary {
  std::map<std::string, double> product_means;
  double grand_mean = 0.0;
  double stdev = 0.0;  // sample stdev of the per-product means
  double min = 0.0;
  double max = 0.0;
};

// Throws EmptyTable.
MOSSummary mos_summary(const ScoreTable& table);

struct TTestResult {
  double t = 0.0;
  double p = 0.0;  // two-tailed
  int df = 0;
};

// All paired differences identical: t is undefined.
struct DegenerateVariance {
  double mean_difference = 0.0;
  int df = 0;
};

using PairedTTest = std::variant<TTestResult, DegenerateVariance>;

// Paired-samples t-test on d = a - b. Throws LengthMismatch when the sizes
// differ or fewer than two pairs are given.
PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b);

// Per-product means of two summaries, paired by product id. Throws
// LengthMismatch when the product sets differ.
std::pair<std::vector<double>, std::vector<double>> paired_means(const MOSSummary& a, const MOSSummary& b);

// Regularized incomplete beta I_x(a, b) by continued fraction.
double regularized_incomplete_beta(double a, double b, double x);

// Student-t CDF with `df` degrees of freedom.
double student_t_cdf(double t, double df);

}  // namespace simplervoice
