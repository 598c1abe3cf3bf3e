#pragma once

#include <array>
#include <string>
#include <vector>

#include "eegdec/common.hpp"

namespace eegdec::stats {

// --- distribution helpers (regularized incomplete beta based) ---

double normal_cdf(double z);
double normal_quantile(double p);  // inverse of normal_cdf
double incomplete_beta(double a, double b, double x);
double student_t_two_tailed_p(double t, double df);
double f_upper_tail_p(double f, double df1, double df2);

// --- tests ---

struct Sample {
  std::vector<double> values;
  std::string label;
};

struct TestResult {
  double statistic = 0.0;
  double p = 0.0;
};

// W statistic against expected normal order statistics, coefficients and
// p-value transform per Royston's approximation. Valid for 3 <= n <= 5000.
TestResult shapiro_wilk(const Sample& sample);

// Classic mean-centered Levene: one-way F on absolute deviations from the
// group means.
TestResult levene(const std::vector<Sample>& groups);

struct PairedTResult {
  double t = 0.0;
  double df = 0.0;
  double p = 0.0;  // two-tailed
};

PairedTResult paired_ttest(const Sample& a, const Sample& b);

// p' = min(1, k * p) per value; k defaults to the list size.
std::vector<double> bonferroni(const std::vector<double>& p_values, int k = 0);

// --- benchmark reproduction ---

// Per-subject average accuracies of the published subject-independent
// visual-imagery benchmark: one pair (without/with the subepoch-wise feature
// encoder) per backbone, 10 subjects each.
struct FixturePair {
  std::string backbone;
  std::vector<double> without_sefe;
  std::vector<double> with_sefe;
};

const std::vector<FixturePair>& benchmark_fixtures();

// Parses the bundled fixture CSV (columns: subject, without_sefe, with_sefe).
FixturePair load_fixture_csv(const std::string& csv_text, const std::string& backbone);

struct Comparison {
  std::string label;
  TestResult shapiro_without;
  TestResult shapiro_with;
  TestResult shapiro_diff;  // normality of the paired differences, also reported
  TestResult levene_pair;
  PairedTResult paired_t;
  double p_bonferroni = 0.0;
  bool significant = false;  // at alpha
};

struct StatReport {
  double alpha = 0.001;
  int correction_k = 3;
  std::vector<Comparison> comparisons;
  bool all_significant = false;

  std::string to_text() const;
};

// Full verification pipeline over a set of paired samples: Shapiro-Wilk per
// sample, Levene per pair, paired t per pair, Bonferroni over the family.
StatReport run_pipeline(const std::vector<FixturePair>& pairs, double alpha = 0.001);

// The pipeline applied to the bundled benchmark fixtures.
StatReport reproduce_benchmark_stats();

}  // namespace eegdec::stats
