#include <doctest.h>

#include <cmath>
#include <vector>

#include "mcorr/approximation.hpp"
#include "mcorr/rng.hpp"
#include "mcorr/time.hpp"

using namespace mcorr;

namespace {

Date day(int offset) { return parse_date("2014-07-01") + offset; }

}  // namespace

TEST_SUITE("approximation") {
    TEST_CASE("interpolant passes exactly through every knot") {
        std::vector<Knot> knots{{day(0), 3.0}, {day(31), 7.0}, {day(62), 5.0}, {day(93), 5.0}};
        PiecewiseLinear f = spline_interpolate(knots);
        for (const Knot& k : knots) CHECK(f.evaluate(k.date) == doctest::Approx(k.score).epsilon(1e-12));
        CHECK(f.segments().size() == 3);
        CHECK(f.domain_begin() == day(0));
        CHECK(f.domain_end() == day(93));  // closed right endpoint
    }

    TEST_CASE("interior days are linear blends of the bracketing knots") {
        std::vector<Knot> knots{{day(0), 4.0}, {day(10), 14.0}};
        PiecewiseLinear f = spline_interpolate(knots);
        CHECK(f.evaluate(day(1)) == doctest::Approx(5.0).epsilon(1e-12));
        CHECK(f.evaluate(day(5)) == doctest::Approx(9.0).epsilon(1e-12));
        CHECK(f.evaluate(day(9)) == doctest::Approx(13.0).epsilon(1e-12));
        // flat pair stays flat
        std::vector<Knot> level{{day(0), 2.0}, {day(30), 2.0}};
        PiecewiseLinear g = spline_interpolate(level);
        CHECK(g.evaluate(day(17)) == doctest::Approx(2.0).epsilon(1e-12));
    }

    TEST_CASE("adjacent segments agree at the shared knot") {
        SplitMix64 rng(3);
        std::vector<Knot> knots;
        for (int k = 0; k < 12; ++k)
            knots.push_back({day(k * 31), static_cast<double>(rng.next_below(13))});
        PiecewiseLinear f = spline_interpolate(knots);
        const auto& segs = f.segments();
        for (size_t i = 1; i < segs.size(); ++i) {
            const double x = segs[i].start - f.origin();
            const double left = segs[i - 1].slope * x + segs[i - 1].intercept;
            const double right = segs[i].slope * x + segs[i].intercept;
            CHECK(std::abs(left - right) <= 1e-9);
        }
    }

    TEST_CASE("interpolation rejects degenerate knot sets") {
        std::vector<Knot> one{{day(0), 3.0}};
        CHECK_THROWS_AS(spline_interpolate(one), std::invalid_argument);
        std::vector<Knot> dup{{day(0), 3.0}, {day(0), 5.0}};
        CHECK_THROWS_AS(spline_interpolate(dup), std::invalid_argument);
        std::vector<Knot> unordered{{day(5), 3.0}, {day(2), 5.0}};
        CHECK_THROWS_AS(spline_interpolate(unordered), std::invalid_argument);
    }

    TEST_CASE("evaluation outside the domain is reported, not extrapolated") {
        std::vector<Knot> knots{{day(0), 1.0}, {day(10), 2.0}};
        PiecewiseLinear f = spline_interpolate(knots);
        CHECK_THROWS_AS(f.evaluate(day(-1)), std::domain_error);
        CHECK_THROWS_AS(f.evaluate(day(11)), std::domain_error);
        CHECK(f.evaluate(day(10)) == doctest::Approx(2.0));  // last segment closed at its end
        CHECK_FALSE(f.try_evaluate(day(-1)).has_value());
        CHECK(f.try_evaluate(day(3)).has_value());
    }

    TEST_CASE("least squares recovers a frozen hand-computed fit") {
        // three points (0,0), (1,1), (2,1): normal equations give slope 1/2,
        // intercept 1/6
        std::vector<double> x{0, 1, 2};
        std::vector<double> v{0, 1, 1};
        LineFit fit = fit_segment_regression(x, v);
        CHECK(fit.slope == doctest::Approx(0.5).epsilon(1e-15));
        CHECK(fit.intercept == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }

    TEST_CASE("noiseless collinear data is recovered exactly") {
        std::vector<double> x{0, 3, 7, 12, 30};
        std::vector<double> v;
        for (double xi : x) v.push_back(-2.5 * xi + 11.0);
        LineFit fit = fit_segment_regression(x, v);
        CHECK(fit.slope == doctest::Approx(-2.5).epsilon(1e-12));
        CHECK(fit.intercept == doctest::Approx(11.0).epsilon(1e-12));
    }

    TEST_CASE("residuals are orthogonal to the design on random data") {
        SplitMix64 rng(17);
        for (int trial = 0; trial < 300; ++trial) {
            const size_t n = 2 + rng.next_below(40);
            std::vector<double> x(n), v(n);
            for (size_t i = 0; i < n; ++i) {
                x[i] = static_cast<double>(rng.next_below(60));
                v[i] = 50.0 * rng.next_double() - 10.0;
            }
            bool degenerate = std::all_of(x.begin(), x.end(), [&](double xi) { return xi == x[0]; });
            if (degenerate) {
                CHECK_THROWS_AS(fit_segment_regression(x, v), std::invalid_argument);
                continue;
            }
            LineFit fit = fit_segment_regression(x, v);
            double sum_r = 0.0, sum_rx = 0.0, scale = 0.0;
            for (size_t i = 0; i < n; ++i) {
                const double r = v[i] - (fit.slope * x[i] + fit.intercept);
                sum_r += r;
                sum_rx += r * x[i];
                scale += std::abs(v[i]) + std::abs(x[i]);
            }
            CHECK(std::abs(sum_r) <= 1e-9 * std::max(1.0, scale));
            CHECK(std::abs(sum_rx) <= 1e-9 * std::max(1.0, scale * 60.0));
        }
    }

    TEST_CASE("regression contract violations throw") {
        std::vector<double> one{1.0};
        CHECK_THROWS_AS(fit_segment_regression(one, one), std::invalid_argument);
        std::vector<double> same_x{4, 4, 4};
        std::vector<double> v{1, 2, 3};
        CHECK_THROWS_AS(fit_segment_regression(same_x, v), std::invalid_argument);
        std::vector<double> x{1, 2};
        CHECK_THROWS_AS(fit_segment_regression(x, one), std::invalid_argument);
    }

    TEST_CASE("per-interval fits cover [visit, next visit) and reuse the day scale") {
        ActivitySeries series;
        series.flat_id = "1";
        // interval 1: rising by 2 per day; interval 2: only one point
        for (int d : {0, 1, 2, 3}) series.points.push_back({"1", day(d), 10.0 + 2.0 * d, {}});
        series.points.push_back({"1", day(5), 3.0, {}});
        std::vector<Date> visits{day(0), day(4), day(8)};

        PiecewiseLinear fit = fit_piecewise_regression(series, visits, RegressionMode::piecewise);
        REQUIRE(fit.segments().size() == 2);
        CHECK(fit.segments()[0].start == day(0));
        CHECK(fit.segments()[0].end == day(4));
        CHECK_FALSE(fit.segments()[0].empty);
        CHECK(fit.segments()[0].slope == doctest::Approx(2.0).epsilon(1e-12));
        CHECK(fit.evaluate(day(2)) == doctest::Approx(14.0).epsilon(1e-12));

        CHECK(fit.segments()[1].empty);  // single point cannot pin a line
        CHECK_FALSE(fit.try_evaluate(day(5)).has_value());
        CHECK_THROWS_AS(fit.evaluate(day(5)), std::domain_error);
    }

    TEST_CASE("global mode fits one line across all intervals") {
        ActivitySeries series;
        series.flat_id = "1";
        for (int d : {0, 2, 5, 7, 9}) series.points.push_back({"1", day(d), 4.0 + 3.0 * d, {}});
        std::vector<Date> visits{day(0), day(4), day(9)};
        PiecewiseLinear fit = fit_piecewise_regression(series, visits, RegressionMode::global);
        REQUIRE(fit.segments().size() == 1);
        CHECK(fit.segments()[0].slope == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(fit.evaluate(day(9)) == doctest::Approx(31.0).epsilon(1e-12));
    }

    TEST_CASE("piecewise regression needs at least one interval") {
        ActivitySeries series;
        series.flat_id = "1";
        series.points.push_back({"1", day(0), 1.0, {}});
        std::vector<Date> one_visit{day(0)};
        CHECK_THROWS_AS(fit_piecewise_regression(series, one_visit, RegressionMode::piecewise),
                        std::invalid_argument);
    }
}
