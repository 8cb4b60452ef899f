#include "pih/stats.hpp"

#include <algorithm>
#include <cmath>

namespace pih {

const char* stars_label(Stars s) {
    switch (s) {
        case Stars::NS: return "n.s.";
        case Stars::One: return "*";
        case Stars::Two: return "**";
        case Stars::Three: return "***";
    }
    return "?";
}

namespace {

// Quantile by linear interpolation at position p*(n-1) over sorted data.
double quantile(const std::vector<double>& sorted, double p) {
    const size_t n = sorted.size();
    if (n == 1) return sorted[0];
    const double pos = p * static_cast<double>(n - 1);
    const size_t lo = static_cast<size_t>(pos);
    const size_t hi = std::min(lo + 1, n - 1);
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double sample_mean(const std::vector<int>& v) {
    double sum = 0;
    for (int x : v) sum += x;
    return sum / static_cast<double>(v.size());
}

// Unbiased (n-1 denominator) sample variance.
double sample_variance(const std::vector<int>& v, double mean) {
    double ss = 0;
    for (int x : v) {
        const double d = x - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(v.size() - 1);
}

// Continued fraction for the regularized incomplete beta function.
double betacf(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-16;
    constexpr int kMaxIter = 500;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny) d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= kMaxIter; ++m) {
        const int m2 = 2 * m;
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

// Regularized incomplete beta I_x(a, b).
double reg_inc_beta(double a, double b, double x) {
    if (x <= 0.0) return 0.0;
    if (x >= 1.0) return 1.0;
    const double ln_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                            a * std::log(x) + b * std::log(1.0 - x);
    const double front = std::exp(ln_front);
    if (x < (a + 1.0) / (a + b + 2.0)) return front * betacf(a, b, x) / a;
    return 1.0 - front * betacf(b, a, 1.0 - x) / b;
}

// Upper tail P(T_df > |t|), computed directly to keep full relative
// precision for tiny tails.
double t_tail(double abs_t, double df) {
    const double x = df / (df + abs_t * abs_t);
    return 0.5 * reg_inc_beta(0.5 * df, 0.5, x);
}

}  // namespace

double t_cdf(double t, double df) {
    if (!(df > 0.0)) throw DomainError("t_cdf: df must be > 0");
    if (!std::isfinite(t)) throw DomainError("t_cdf: t must be finite");
    if (t == 0.0) return 0.5;
    const double tail = t_tail(std::fabs(t), df);
    return t > 0.0 ? 1.0 - tail : tail;
}

Stars stars_for(double p) {
    if (p < 0.001) return Stars::Three;
    if (p < 0.01) return Stars::Two;
    if (p < 0.05) return Stars::One;
    return Stars::NS;
}

DescriptiveStats descriptive(const SampleSet& samples) {
    if (samples.scores.empty()) throw InsufficientSamples("descriptive: empty sample set");
    std::vector<double> sorted(samples.scores.begin(), samples.scores.end());
    std::sort(sorted.begin(), sorted.end());

    DescriptiveStats s;
    s.n = sorted.size();
    s.mean = sample_mean(samples.scores);
    s.median = quantile(sorted, 0.5);
    s.q1 = quantile(sorted, 0.25);
    s.q3 = quantile(sorted, 0.75);
    s.iqr = s.q3 - s.q1;

    const double fence_low = s.q1 - 1.5 * s.iqr;
    const double fence_high = s.q3 + 1.5 * s.iqr;
    s.whisker_low = sorted.back();
    s.whisker_high = sorted.front();
    for (double x : sorted) {
        if (x >= fence_low) {
            s.whisker_low = x;  // smallest point inside the lower fence
            break;
        }
    }
    for (auto it = sorted.rbegin(); it != sorted.rend(); ++it) {
        if (*it <= fence_high) {
            s.whisker_high = *it;
            break;
        }
    }
    return s;
}

WelchResult welch_one_tailed(const SampleSet& a, const SampleSet& b) {
    if (a.n() < 2 || b.n() < 2)
        throw InsufficientSamples("welch_one_tailed: both groups need n >= 2");

    const double na = static_cast<double>(a.n());
    const double nb = static_cast<double>(b.n());
    const double mean_a = sample_mean(a.scores);
    const double mean_b = sample_mean(b.scores);
    const double var_a = sample_variance(a.scores, mean_a);
    const double var_b = sample_variance(b.scores, mean_b);
    if (var_a == 0.0 && var_b == 0.0)
        throw DegenerateVariance("welch_one_tailed: both sample variances are zero");

    const double sa = var_a / na;
    const double sb = var_b / nb;
    const double se2 = sa + sb;

    WelchResult r;
    r.label_a = a.label;
    r.label_b = b.label;
    r.t = (mean_a - mean_b) / std::sqrt(se2);

    // Welch–Satterthwaite; a zero variance on one side degenerates to
    // n_other - 1 naturally.
    double denom = 0.0;
    if (sa > 0.0) denom += sa * sa / (na - 1.0);
    if (sb > 0.0) denom += sb * sb / (nb - 1.0);
    r.df = se2 * se2 / denom;

    const double rounded_df = std::max(1.0, std::round(r.df));
    r.p_one_tailed = t_tail(std::fabs(r.t), rounded_df);
    if (r.t > 0.0)
        r.direction = Direction::FirstGreater;
    else if (r.t < 0.0)
        r.direction = Direction::SecondGreater;
    else
        r.direction = Direction::Tied;
    r.stars = stars_for(r.p_one_tailed);
    return r;
}

SampleSet& ScoreMatrix::cell(const GroupLabel& label) {
    auto it = cells.find(label);
    if (it == cells.end()) {
        order.push_back(label);
        it = cells.emplace(label, SampleSet{label, {}}).first;
    }
    return it->second;
}

const SampleSet& ScoreMatrix::at(const GroupLabel& label) const {
    auto it = cells.find(label);
    if (it == cells.end()) throw UnknownLabel("no sample set for " + label.str());
    return it->second;
}

std::vector<WelchResult> pairwise_compare(
    const ScoreMatrix& matrix, const std::vector<std::pair<GroupLabel, GroupLabel>>& pairs) {
    std::vector<WelchResult> results;
    results.reserve(pairs.size());
    for (const auto& [la, lb] : pairs)
        results.push_back(welch_one_tailed(matrix.at(la), matrix.at(lb)));
    return results;
}

}  // namespace pih
