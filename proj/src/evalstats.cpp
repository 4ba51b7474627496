#include "simplervoice/evalstats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>

#include "simplervoice/error.hpp"
#include "simplervoice/text.hpp"

namespace simplervoice {

namespace {

double sample_stdev(std::span<const double> xs, double mean) {
  if (xs.size() < 2) return 0.0;
  double ss = 0.0;
  for (const double x : xs) ss += (x - mean) * (x - mean);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double mean_of(std::span<const double> xs) {
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr int kMaxIterations = 10000;
  constexpr double kEps = 1e-16;
  constexpr double kTiny = 1e-300;

  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIterations; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

void ScoreTable::add(std::string product, std::string rater, double score) {
  if (!std::isfinite(score) || score < kMinScore || score > kMaxScore) {
    throw Error(Errc::ScoreOutOfRange, "score " + std::to_string(score) + " for " + product + "/" + rater +
                                           " is outside [1, 5]");
  }
  if (!scores_.emplace(std::pair{std::move(product), std::move(rater)}, score).second) {
    throw Error(Errc::InvalidConfig, "repeated (product, rater) pair");
  }
}

ScoreTable ScoreTable::parse(std::istream& in, std::string_view source) {
  ScoreTable table;
  std::string raw;
  std::size_t line_no = 0;
  auto where = [&] { return std::string(source) + ":" + std::to_string(line_no) + ": "; };
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = text::trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto fields = text::split(line, '\t');
    if (fields.size() != 3) throw Error(Errc::MalformedLine, where() + "expected product<TAB>rater<TAB>score");
    const auto product = text::trim(fields[0]);
    const auto rater = text::trim(fields[1]);
    const auto score_text = text::trim(fields[2]);
    double score = 0.0;
    const auto [ptr, ec] = std::from_chars(score_text.data(), score_text.data() + score_text.size(), score);
    if (product.empty() || rater.empty() || ec != std::errc{} || ptr != score_text.data() + score_text.size()) {
      throw Error(Errc::MalformedLine, where() + "unreadable score line");
    }
    try {
      table.add(std::string(product), std::string(rater), score);
    } catch (const Error& e) {
      throw Error(e.code(), where() + e.what());
    }
  }
  return table;
}

MOSSummary mos_summary(const ScoreTable& table) {
  if (table.empty()) throw Error(Errc::EmptyTable, "score table is empty");
  std::map<std::string, std::pair<double, std::size_t>> sums;
  for (const auto& [key, score] : table.scores()) {
    auto& [sum, n] = sums[key.first];
    sum += score;
    ++n;
  }
  MOSSummary s;
  std::vector<double> means;
  for (const auto& [product, acc] : sums) {
    const double m = acc.first / static_cast<double>(acc.second);
    s.product_means.emplace(product, m);
    means.push_back(m);
  }
  s.grand_mean = mean_of(means);
  s.stdev = sample_stdev(means, s.grand_mean);
  const auto [lo, hi] = std::minmax_element(means.begin(), means.end());
  s.min = *lo;
  s.max = *hi;
  return s;
}

std::pair<std::vector<double>, std::vector<double>> paired_means(const MOSSummary& a, const MOSSummary& b) {
  if (a.product_means.size() != b.product_means.size()) {
    throw Error(Errc::LengthMismatch, "score files rate " + std::to_string(a.product_means.size()) + " and " +
                                          std::to_string(b.product_means.size()) + " products");
  }
  std::vector<double> xs, ys;
  for (const auto& [product, mean] : a.product_means) {
    const auto it = b.product_means.find(product);
    if (it == b.product_means.end()) {
      throw Error(Errc::LengthMismatch, "product '" + product + "' is missing from the second score file");
    }
    xs.push_back(mean);
    ys.push_back(it->second);
  }
  return {std::move(xs), std::move(ys)};
}

PairedTTest paired_t_test(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw Error(Errc::LengthMismatch, "paired samples differ in length (" + std::to_string(a.size()) + " vs " +
                                          std::to_string(b.size()) + ")");
  }
  if (a.size() < 2) throw Error(Errc::LengthMismatch, "a paired t-test needs at least two pairs");

  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  const double mean = mean_of(d);
  const int df = static_cast<int>(d.size()) - 1;
  const bool constant = std::all_of(d.begin(), d.end(), [&](double x) { return x == d.front(); });
  const double sd = sample_stdev(d, mean);
  if (constant || sd == 0.0) return DegenerateVariance{mean, df};

  const double t = mean / (sd / std::sqrt(static_cast<double>(d.size())));
  const double x = df / (df + t * t);
  const double p = regularized_incomplete_beta(0.5 * df, 0.5, x);
  return TTestResult{t, std::clamp(p, 0.0, 1.0), df};
}

double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0) || std::isnan(x)) return std::numeric_limits<double>::quiet_NaN();
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front =
      std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) + a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double student_t_cdf(double t, double df) {
  if (std::isinf(t)) return t > 0 ? 1.0 : 0.0;
  const double tail = 0.5 * regularized_incomplete_beta(0.5 * df, 0.5, df / (df + t * t));
  return t > 0 ? 1.0 - tail : tail;
}

}  // namespace simplervoice
