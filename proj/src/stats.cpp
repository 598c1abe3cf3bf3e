#include "eegdec/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace eegdec::stats {

namespace {

constexpr double kPi = 3.14159265358979323846;

double poly(const double* c, int n, double x) {
  // ascending powers, c[0] constant
  double r = 0.0;
  for (int i = n - 1; i >= 0; --i) r = r * x + c[i];
  return r;
}

}  // namespace

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw Error(ErrorCategory::invalid_argument, "quantile requires p in (0, 1)");
  }
  // asymptotic start, then Newton on the CDF
  const double q = std::min(p, 1.0 - p);
  double x = std::sqrt(-2.0 * std::log(q));
  // Moro-style correction gets within ~1e-2; Newton does the rest.
  x = x - (2.515517 + 0.802853 * x + 0.010328 * x * x) /
              (1.0 + 1.432788 * x + 0.189269 * x * x + 0.001308 * x * x * x);
  if (p < 0.5) x = -x;
  for (int it = 0; it < 6; ++it) {
    const double err = normal_cdf(x) - p;
    const double pdf = std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi);
    if (pdf <= 0.0) break;
    const double step = err / pdf;
    x -= step;
    if (std::abs(step) < 1e-14 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

namespace {

// continued fraction for the incomplete beta (Lentz)
double betacf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kFpMin = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kFpMin) d = kFpMin;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kFpMin) d = kFpMin;
    c = 1.0 + aa / c;
    if (std::abs(c) < kFpMin) c = kFpMin;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) return h;
  }
  throw Error(ErrorCategory::numeric, "incomplete beta did not converge");
}

}  // namespace

double incomplete_beta(double a, double b, double x) {
  if (x < 0.0 || x > 1.0) {
    throw Error(ErrorCategory::invalid_argument, "incomplete beta requires x in [0, 1]");
  }
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                          a * std::log(x) + b * std::log(1.0 - x);
  const double front = std::exp(ln_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * betacf(a, b, x) / a;
  }
  return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

double student_t_two_tailed_p(double t, double df) {
  if (df <= 0.0) throw Error(ErrorCategory::invalid_argument, "df must be positive");
  const double x = df / (df + t * t);
  return incomplete_beta(df / 2.0, 0.5, x);
}

double f_upper_tail_p(double f, double df1, double df2) {
  if (df1 <= 0.0 || df2 <= 0.0) {
    throw Error(ErrorCategory::invalid_argument, "df must be positive");
  }
  if (f <= 0.0) return 1.0;
  return incomplete_beta(df2 / 2.0, df1 / 2.0, df2 / (df2 + df1 * f));
}

TestResult shapiro_wilk(const Sample& sample) {
  const std::string who = sample.label.empty() ? "" : "[" + sample.label + "] ";
  const int n = static_cast<int>(sample.values.size());
  if (n < 3 || n > 5000) {
    throw Error(ErrorCategory::invalid_argument,
                who + "Shapiro-Wilk requires 3 <= n <= 5000, got " + std::to_string(n));
  }
  std::vector<double> x = sample.values;
  std::sort(x.begin(), x.end());
  if (x.front() == x.back()) {
    throw Error(ErrorCategory::numeric, who + "W undefined: all values identical");
  }

  // expected normal order statistics (Blom scores) and Royston coefficients
  std::vector<double> m(n);
  double ssq_m = 0.0;
  for (int i = 0; i < n; ++i) {
    m[i] = normal_quantile((i + 1 - 0.375) / (n + 0.25));
    ssq_m += m[i] * m[i];
  }

  std::vector<double> a(n);
  if (n == 3) {
    a[0] = -std::sqrt(0.5);
    a[1] = 0.0;
    a[2] = std::sqrt(0.5);
  } else {
    const double u = 1.0 / std::sqrt(static_cast<double>(n));
    const double rsqrt_ssq = 1.0 / std::sqrt(ssq_m);
    static const double c1[6] = {0.0, 0.221157, -0.147981, -2.071190, 4.434685, -2.706056};
    static const double c2[6] = {0.0, 0.042981, -0.293762, -1.752461, 5.682633, -3.582633};
    const double an = m[n - 1] * rsqrt_ssq + poly(c1, 6, u);
    if (n > 5) {
      const double an1 = m[n - 2] * rsqrt_ssq + poly(c2, 6, u);
      const double phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1] - 2.0 * m[n - 2] * m[n - 2]) /
                         (1.0 - 2.0 * an * an - 2.0 * an1 * an1);
      const double rphi = 1.0 / std::sqrt(phi);
      a[n - 1] = an;
      a[n - 2] = an1;
      a[0] = -an;
      a[1] = -an1;
      for (int i = 2; i < n - 2; ++i) a[i] = m[i] * rphi;
    } else {
      const double phi = (ssq_m - 2.0 * m[n - 1] * m[n - 1]) / (1.0 - 2.0 * an * an);
      const double rphi = 1.0 / std::sqrt(phi);
      a[n - 1] = an;
      a[0] = -an;
      for (int i = 1; i < n - 1; ++i) a[i] = m[i] * rphi;
    }
  }

  double mean = 0.0;
  for (double v : x) mean += v;
  mean /= n;
  double num = 0.0, den = 0.0;
  for (int i = 0; i < n; ++i) {
    num += a[i] * x[i];
    den += (x[i] - mean) * (x[i] - mean);
  }
  const double w = std::min(1.0, num * num / den);

  // p-value transform
  double p;
  if (n == 3) {
    p = 6.0 / kPi * (std::asin(std::sqrt(w)) - std::asin(std::sqrt(0.75)));
    p = std::clamp(p, 0.0, 1.0);
  } else if (n <= 11) {
    const double g = -2.273 + 0.459 * n;
    const double wt = -std::log(g - std::log1p(-w));
    static const double c3[4] = {0.5440, -0.39978, 0.025054, -6.714e-4};
    static const double c4[4] = {1.3822, -0.77857, 0.062767, -0.0020322};
    const double mu = poly(c3, 4, static_cast<double>(n));
    const double sigma = std::exp(poly(c4, 4, static_cast<double>(n)));
    p = 1.0 - normal_cdf((wt - mu) / sigma);
  } else {
    const double wt = std::log1p(-w);
    const double u = std::log(static_cast<double>(n));
    static const double c5[4] = {-1.5861, -0.31082, -0.083751, 0.0038915};
    static const double c6[3] = {-0.4803, -0.082676, 0.0030302};
    const double mu = poly(c5, 4, u);
    const double sigma = std::exp(poly(c6, 3, u));
    p = 1.0 - normal_cdf((wt - mu) / sigma);
  }
  return {w, p};
}

TestResult levene(const std::vector<Sample>& groups) {
  const int k = static_cast<int>(groups.size());
  if (k < 2) throw Error(ErrorCategory::invalid_argument, "Levene needs >= 2 groups");
  long n_total = 0;
  for (const Sample& g : groups) {
    if (g.values.size() < 2) {
      throw Error(ErrorCategory::invalid_argument, "every Levene group needs n >= 2");
    }
    n_total += static_cast<long>(g.values.size());
  }

  // absolute deviations from group means
  std::vector<std::vector<double>> z(k);
  std::vector<double> z_mean(k, 0.0);
  double z_grand = 0.0;
  for (int i = 0; i < k; ++i) {
    double m = 0.0;
    for (double v : groups[i].values) m += v;
    m /= static_cast<double>(groups[i].values.size());
    z[i].reserve(groups[i].values.size());
    for (double v : groups[i].values) {
      z[i].push_back(std::abs(v - m));
      z_mean[i] += z[i].back();
    }
    z_grand += z_mean[i];
    z_mean[i] /= static_cast<double>(groups[i].values.size());
  }
  z_grand /= static_cast<double>(n_total);

  double between = 0.0, within = 0.0;
  for (int i = 0; i < k; ++i) {
    between += static_cast<double>(z[i].size()) * (z_mean[i] - z_grand) * (z_mean[i] - z_grand);
    for (double v : z[i]) within += (v - z_mean[i]) * (v - z_mean[i]);
  }
  if (within == 0.0) {
    throw Error(ErrorCategory::numeric, "Levene undefined: no within-group deviation");
  }
  const double df1 = k - 1.0;
  const double df2 = static_cast<double>(n_total - k);
  const double w = (df2 / df1) * (between / within);
  return {w, f_upper_tail_p(w, df1, df2)};
}

PairedTResult paired_ttest(const Sample& a, const Sample& b) {
  const std::size_t n = a.values.size();
  if (n != b.values.size()) {
    throw Error(ErrorCategory::invalid_argument, "paired t-test needs equal-length samples");
  }
  if (n < 2) throw Error(ErrorCategory::invalid_argument, "paired t-test needs n >= 2");

  double mean_d = 0.0;
  for (std::size_t i = 0; i < n; ++i) mean_d += a.values[i] - b.values[i];
  mean_d /= static_cast<double>(n);
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a.values[i] - b.values[i] - mean_d;
    ss += d * d;
  }
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  if (sd == 0.0) {
    throw Error(ErrorCategory::numeric, "paired t undefined: zero variance of differences");
  }
  PairedTResult r;
  r.t = mean_d * std::sqrt(static_cast<double>(n)) / sd;
  r.df = static_cast<double>(n - 1);
  r.p = student_t_two_tailed_p(r.t, r.df);
  return r;
}

std::vector<double> bonferroni(const std::vector<double>& p_values, int k) {
  if (k <= 0) k = static_cast<int>(p_values.size());
  std::vector<double> out;
  out.reserve(p_values.size());
  for (double p : p_values) {
    if (p < 0.0 || p > 1.0) {
      throw Error(ErrorCategory::invalid_argument, "p values must lie in [0, 1]");
    }
    out.push_back(std::min(1.0, k * p));
  }
  return out;
}

const std::vector<FixturePair>& benchmark_fixtures() {
  static const std::vector<FixturePair> fixtures = {
      {"deep",
       {0.67, 0.70, 0.67, 0.58, 0.70, 0.72, 0.68, 0.69, 0.66, 0.64},
       {0.71, 0.75, 0.76, 0.61, 0.75, 0.77, 0.73, 0.73, 0.69, 0.69}},
      {"shallow",
       {0.64, 0.68, 0.66, 0.56, 0.69, 0.74, 0.65, 0.69, 0.57, 0.58},
       {0.67, 0.71, 0.65, 0.67, 0.75, 0.75, 0.71, 0.68, 0.65, 0.63}},
      {"eegnet",
       {0.66, 0.69, 0.64, 0.57, 0.69, 0.72, 0.64, 0.67, 0.58, 0.58},
       {0.70, 0.72, 0.70, 0.62, 0.74, 0.78, 0.68, 0.70, 0.61, 0.63}},
  };
  return fixtures;
}

FixturePair load_fixture_csv(const std::string& csv_text, const std::string& backbone) {
  FixturePair pair;
  pair.backbone = backbone;
  std::istringstream in(csv_text);
  std::string line;
  bool saw_header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!saw_header) {  // subject,without_sefe,with_sefe
      saw_header = true;
      continue;
    }
    std::istringstream ls(line);
    std::string subject, wo, w;
    if (!std::getline(ls, subject, ',') || !std::getline(ls, wo, ',') || !std::getline(ls, w)) {
      throw Error(ErrorCategory::format, "malformed fixture line: " + line);
    }
    pair.without_sefe.push_back(std::stod(wo));
    pair.with_sefe.push_back(std::stod(w));
  }
  if (pair.without_sefe.empty()) {
    throw Error(ErrorCategory::format, "fixture csv has no data rows");
  }
  return pair;
}

StatReport run_pipeline(const std::vector<FixturePair>& pairs, double alpha) {
  if (pairs.empty()) {
    throw Error(ErrorCategory::invalid_argument, "no sample pairs supplied");
  }
  StatReport report;
  report.alpha = alpha;
  report.correction_k = static_cast<int>(pairs.size());

  std::vector<double> raw_p;
  for (const FixturePair& pair : pairs) {
    Comparison c;
    c.label = pair.backbone;
    c.shapiro_without = shapiro_wilk({pair.without_sefe, pair.backbone + " without"});
    c.shapiro_with = shapiro_wilk({pair.with_sefe, pair.backbone + " with"});
    std::vector<double> diff(pair.with_sefe.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = pair.with_sefe[i] - pair.without_sefe[i];
    c.shapiro_diff = shapiro_wilk({diff, pair.backbone + " diff"});
    c.levene_pair = levene({{pair.without_sefe, "without"}, {pair.with_sefe, "with"}});
    try {
      c.paired_t = paired_ttest({pair.with_sefe, "with"}, {pair.without_sefe, "without"});
    } catch (const Error& e) {
      throw Error(e.category(),
                  "[" + pair.backbone + "] " + e.what() +
                      " (the paired samples are identical; compare reports from distinct "
                      "models or seeds)");
    }
    raw_p.push_back(c.paired_t.p);
    report.comparisons.push_back(std::move(c));
  }

  const std::vector<double> adjusted = bonferroni(raw_p, report.correction_k);
  report.all_significant = true;
  for (std::size_t i = 0; i < adjusted.size(); ++i) {
    report.comparisons[i].p_bonferroni = adjusted[i];
    report.comparisons[i].significant = adjusted[i] < alpha;
    if (!report.comparisons[i].significant) report.all_significant = false;
  }
  return report;
}

StatReport reproduce_benchmark_stats() { return run_pipeline(benchmark_fixtures()); }

std::string StatReport::to_text() const {
  std::ostringstream ss;
  auto num = [](double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  ss << "alpha = " << num(alpha) << "\n";
  ss << "bonferroni_k = " << correction_k << "\n";
  for (const Comparison& c : comparisons) {
    ss << "[" << c.label << "]\n";
    ss << "  shapiro_without: W = " << num(c.shapiro_without.statistic)
       << ", p = " << num(c.shapiro_without.p) << "\n";
    ss << "  shapiro_with: W = " << num(c.shapiro_with.statistic)
       << ", p = " << num(c.shapiro_with.p) << "\n";
    ss << "  shapiro_diff: W = " << num(c.shapiro_diff.statistic)
       << ", p = " << num(c.shapiro_diff.p) << "\n";
    ss << "  levene: W = " << num(c.levene_pair.statistic) << ", p = " << num(c.levene_pair.p)
       << "\n";
    ss << "  paired_t: t = " << num(c.paired_t.t) << ", df = " << num(c.paired_t.df)
       << ", p_raw = " << num(c.paired_t.p) << ", p_bonferroni = " << num(c.p_bonferroni)
       << "\n";
    ss << "  significant_at_alpha = " << (c.significant ? "yes" : "no") << "\n";
  }
  ss << "all_significant = " << (all_significant ? "yes" : "no") << "\n";
  return ss.str();
}

}  // namespace eegdec::stats
