#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "pih/fixtures.hpp"
#include "pih/stats.hpp"

using namespace pih;

namespace {

SampleSet set(const std::string& model, const std::string& condition, std::vector<int> v) {
    return {{model, condition}, std::move(v)};
}

const SampleSet& cell(const char* model, const char* condition) {
    static const ScoreMatrix matrix = fixtures::table_matrix();
    return matrix.at({model, condition});
}

}  // namespace

TEST_CASE("descriptive statistics on a published column") {
    const DescriptiveStats s = descriptive(cell("GemP", "HIPc"));
    CHECK(s.n == 15);
    CHECK(s.mean == doctest::Approx(3.0667).epsilon(1e-4));
    CHECK(s.median == 3.0);
    CHECK(s.q1 <= s.median);
    CHECK(s.median <= s.q3);
    CHECK(s.iqr == s.q3 - s.q1);
}

TEST_CASE("descriptive statistics on a single sample") {
    const DescriptiveStats s = descriptive(set("x", "c", {5}));
    CHECK(s.mean == 5.0);
    CHECK(s.median == 5.0);
    CHECK(s.iqr == 0.0);
    CHECK(s.whisker_low == 5.0);
    CHECK(s.whisker_high == 5.0);
}

TEST_CASE("whiskers clip to data inside the Tukey fences") {
    // 100 is an outlier beyond q3 + 1.5*iqr; the whisker stops at 4.
    const DescriptiveStats s = descriptive(set("x", "c", {1, 2, 2, 3, 3, 4, 100}));
    CHECK(s.whisker_high == 4.0);
    CHECK(s.whisker_low == 1.0);
}

TEST_CASE("Welch test reproduces the published 4o/o3 comparison") {
    const WelchResult r = welch_one_tailed(cell("4o", "HIPc"), cell("o3", "HIPc"));
    CHECK(r.t == doctest::Approx(1.3308).epsilon(1e-4));
    CHECK(r.df == doctest::Approx(25.739).epsilon(1e-4));
    CHECK(r.p_one_tailed == doctest::Approx(0.09741).epsilon(1e-4));
    CHECK(r.direction == Direction::FirstGreater);
    CHECK(r.stars == Stars::NS);
}

TEST_CASE("Welch test reproduces the published GemF/GemP comparison") {
    const WelchResult r = welch_one_tailed(cell("GemF", "HIPc"), cell("GemP", "HIPc"));
    CHECK(r.p_one_tailed == doctest::Approx(1.4928e-08).epsilon(1e-3));
    CHECK(r.stars == Stars::Three);
}

TEST_CASE("a zero-variance group degenerates to df = n_other - 1") {
    const WelchResult r = welch_one_tailed(cell("DSR", "HIPn"), cell("DSR", "TIPcs"));
    CHECK(r.df == 9.0);
    CHECK(r.p_one_tailed == doctest::Approx(0.00066).epsilon(5e-3));
}

TEST_CASE("identical groups are tied at p = 0.5") {
    const SampleSet a = set("a", "c", {1, 2, 3, 4});
    const SampleSet b = set("b", "c", {1, 2, 3, 4});
    const WelchResult r = welch_one_tailed(a, b);
    CHECK(r.t == 0.0);
    CHECK(r.p_one_tailed == 0.5);
    CHECK(r.direction == Direction::Tied);
}

TEST_CASE("Welch preconditions") {
    CHECK_THROWS_AS(welch_one_tailed(set("a", "c", {3, 3}), set("b", "c", {2, 2})),
                    DegenerateVariance);
    CHECK_THROWS_AS(welch_one_tailed(set("a", "c", {3}), set("b", "c", {1, 2})),
                    InsufficientSamples);
}

TEST_CASE("t_cdf matches closed forms and symmetry points") {
    CHECK(t_cdf(1.0, 1.0) == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(t_cdf(std::sqrt(2.0), 2.0) ==
          doctest::Approx(0.5 + std::sqrt(2.0) / (2.0 * 2.0)).epsilon(1e-12));
    CHECK(t_cdf(0.0, 7.0) == 0.5);
    CHECK_THROWS_AS(t_cdf(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(t_cdf(std::nan(""), 5.0), DomainError);
}

TEST_CASE("star thresholds") {
    CHECK(stars_for(0.04779) == Stars::One);
    CHECK(stars_for(0.09741) == Stars::NS);
    CHECK(stars_for(0.0005) == Stars::Three);
    CHECK(stars_for(0.005) == Stars::Two);
    CHECK(std::string(stars_label(Stars::NS)) == "n.s.");
    CHECK(std::string(stars_label(Stars::Three)) == "***");
}

TEST_CASE("pairwise_compare preserves order and validates labels") {
    const ScoreMatrix matrix = fixtures::table_matrix();
    CHECK(pairwise_compare(matrix, {}).empty());
    const auto results = pairwise_compare(
        matrix, {{{"4o", "HIPc"}, {"o3", "HIPc"}}, {{"DS", "HIPc"}, {"DSR", "HIPc"}}});
    REQUIRE(results.size() == 2);
    CHECK(results[0].label_a.model == "4o");
    CHECK(results[1].label_b.model == "DSR");
    CHECK_THROWS_AS(pairwise_compare(matrix, {{{"nope", "HIPc"}, {"o3", "HIPc"}}}),
                    UnknownLabel);
}

TEST_CASE("randomized Welch properties hold") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> score(0, 10);
    std::uniform_int_distribution<size_t> size(2, 20);
    int tested = 0;
    for (int i = 0; i < 300 && tested < 200; ++i) {
        SampleSet a = set("a", "c", {});
        SampleSet b = set("b", "c", {});
        for (size_t k = 0; k < size(rng); ++k) a.scores.push_back(score(rng));
        for (size_t k = 0; k < size(rng); ++k) b.scores.push_back(score(rng));
        WelchResult fwd, rev;
        try {
            fwd = welch_one_tailed(a, b);
            rev = welch_one_tailed(b, a);
        } catch (const DegenerateVariance&) {
            continue;
        }
        ++tested;
        CHECK(fwd.t == doctest::Approx(-rev.t).epsilon(1e-12));
        CHECK(fwd.df == doctest::Approx(rev.df).epsilon(1e-12));
        CHECK(fwd.p_one_tailed == doctest::Approx(rev.p_one_tailed).epsilon(1e-12));

        // Shift invariance (shift within the scale bounds is enough here).
        SampleSet a2 = a, b2 = b;
        for (int& x : a2.scores) x += 2;
        for (int& x : b2.scores) x += 2;
        const WelchResult shifted = welch_one_tailed(a2, b2);
        CHECK(shifted.t == doctest::Approx(fwd.t).epsilon(1e-9));
        CHECK(shifted.df == doctest::Approx(fwd.df).epsilon(1e-9));

        // df bounds when both variances are nonzero.
        const double n1 = static_cast<double>(a.n()), n2 = static_cast<double>(b.n());
        CHECK(fwd.df >= std::min(n1, n2) - 1 - 1e-9);
        CHECK(fwd.df <= n1 + n2 - 2 + 1e-9);
    }
    CHECK(tested >= 100);
}

TEST_CASE("t_cdf is symmetric and monotone") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> t_dist(-8.0, 8.0);
    std::uniform_real_distribution<double> df_dist(1.0, 200.0);
    for (int i = 0; i < 200; ++i) {
        const double t = t_dist(rng);
        const double df = df_dist(rng);
        CHECK(t_cdf(t, df) + t_cdf(-t, df) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(t_cdf(t, df) <= t_cdf(t + 0.25, df));
    }
}
