#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace pih {

/// (model, condition) cell label, e.g. ("4o", "HIPc").
struct GroupLabel {
    std::string model;
    std::string condition;

    bool operator<(const GroupLabel& o) const {
        return model < o.model || (model == o.model && condition < o.condition);
    }
    bool operator==(const GroupLabel& o) const {
        return model == o.model && condition == o.condition;
    }
    std::string str() const { return model + ":" + condition; }
};

struct SampleSet {
    GroupLabel label;
    std::vector<int> scores;  // each within the 0..10 scale

    size_t n() const { return scores.size(); }
};

struct DescriptiveStats {
    size_t n = 0;
    double mean = 0;
    double median = 0;
    double q1 = 0;
    double q3 = 0;
    double iqr = 0;
    double whisker_low = 0;
    double whisker_high = 0;
};

enum class Direction { FirstGreater, SecondGreater, Tied };
enum class Stars { NS, One, Two, Three };

const char* stars_label(Stars s);  // "n.s.", "*", "**", "***"

struct WelchResult {
    GroupLabel label_a;
    GroupLabel label_b;
    double t = 0;
    double df = 0;  // Welch–Satterthwaite, fractional
    double p_one_tailed = 0.5;
    Direction direction = Direction::Tied;
    Stars stars = Stars::NS;
};

struct DegenerateVariance : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InsufficientSamples : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownLabel : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mean, quartiles by linear interpolation at position p*(n-1) over sorted
/// data, and Tukey whiskers clipped to the most extreme data points within
/// 1.5*IQR of the quartiles.
DescriptiveStats descriptive(const SampleSet& samples);

/// One-tailed Welch's t-test in the direction of the observed difference.
/// The reported df is the fractional Welch–Satterthwaite value; the p-value
/// evaluates the t distribution at the nearest-integer df, the spreadsheet
/// convention the reference tables were produced with.
WelchResult welch_one_tailed(const SampleSet& a, const SampleSet& b);

/// P(T_df <= t) via the regularized incomplete beta function.
double t_cdf(double t, double df);

/// Significance stars: p < 0.001 -> ***, < 0.01 -> **, < 0.05 -> *, else n.s.
Stars stars_for(double p);

/// Scores grouped by (model, condition), in insertion order.
struct ScoreMatrix {
    std::map<GroupLabel, SampleSet> cells;
    std::vector<GroupLabel> order;             // insertion order of labels
    std::map<GroupLabel, int> parse_failures;  // excluded evaluations per cell

    /// (replicate, judge_rep) per score, aligned with each cell's scores;
    /// populated by collect_scores for row-labeled exports.
    std::map<GroupLabel, std::vector<std::pair<int, int>>> row_keys;

    SampleSet& cell(const GroupLabel& label);
    const SampleSet& at(const GroupLabel& label) const;  // throws UnknownLabel
    bool empty() const { return cells.empty(); }
};

std::vector<WelchResult> pairwise_compare(
    const ScoreMatrix& matrix, const std::vector<std::pair<GroupLabel, GroupLabel>>& pairs);

}  // namespace pih
