#include "mcorr/approximation.hpp"

#include <algorithm>
#include <stdexcept>

namespace mcorr {

PiecewiseLinear spline_interpolate(std::span<const Knot> knots) {
    if (knots.size() < 2) throw std::invalid_argument("insufficient knots (need >= 2)");
    for (size_t i = 1; i < knots.size(); ++i) {
        if (knots[i].date == knots[i - 1].date)
            throw std::invalid_argument("duplicate knot dates");
        if (knots[i].date < knots[i - 1].date)
            throw std::invalid_argument("knot dates must be strictly increasing");
    }

    const Date origin = knots.front().date;
    std::vector<LinearSegment> segments;
    segments.reserve(knots.size() - 1);
    for (size_t i = 0; i + 1 < knots.size(); ++i) {
        double x0 = static_cast<double>(knots[i].date - origin);
        double x1 = static_cast<double>(knots[i + 1].date - origin);
        double m = (knots[i + 1].score - knots[i].score) / (x1 - x0);
        double b = knots[i].score - m * x0;
        segments.push_back({knots[i].date, knots[i + 1].date, m, b, false});
    }
    return PiecewiseLinear(origin, std::move(segments));
}

LineFit fit_segment_regression(std::span<const double> x, std::span<const double> v) {
    if (x.size() != v.size()) throw std::invalid_argument("regression: length mismatch");
    if (x.size() < 2) throw std::invalid_argument("regression: need >= 2 points");

    const double n = static_cast<double>(x.size());
    double mean_x = 0.0, mean_v = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_v += v[i];
    }
    mean_x /= n;
    mean_v /= n;

    // centered normal equations keep the solve well-conditioned
    double sxx = 0.0, sxv = 0.0;
    for (size_t i = 0; i < x.size(); ++i) {
        double dx = x[i] - mean_x;
        sxx += dx * dx;
        sxv += dx * (v[i] - mean_v);
    }
    if (sxx == 0.0) throw std::invalid_argument("degenerate abscissa (all x equal)");

    LineFit fit;
    fit.slope = sxv / sxx;
    fit.intercept = mean_v - fit.slope * mean_x;
    return fit;
}

PiecewiseLinear fit_piecewise_regression(const ActivitySeries& series,
                                         std::span<const Date> assessment_dates,
                                         RegressionMode mode) {
    if (assessment_dates.size() < 2)
        throw std::invalid_argument("need >= 2 assessment dates");
    for (size_t i = 1; i < assessment_dates.size(); ++i)
        if (!(assessment_dates[i - 1] < assessment_dates[i]))
            throw std::invalid_argument("assessment dates must be strictly increasing");

    const Date origin = assessment_dates.front();
    const auto& pts = series.points;

    auto collect = [&](Date lo, Date hi, bool closed_end, std::vector<double>& xs,
                       std::vector<double>& vs) {
        for (const auto& p : pts) {
            if (p.date < lo) continue;
            if (p.date > hi || (!closed_end && p.date == hi)) continue;
            xs.push_back(static_cast<double>(p.date - origin));
            vs.push_back(p.value);
        }
    };

    std::vector<LinearSegment> segments;
    if (mode == RegressionMode::global) {
        std::vector<double> xs, vs;
        collect(assessment_dates.front(), assessment_dates.back(), true, xs, vs);
        LinearSegment seg{assessment_dates.front(), assessment_dates.back(), 0.0, 0.0, true};
        if (xs.size() >= 2) {
            LineFit fit = fit_segment_regression(xs, vs);
            seg = {assessment_dates.front(), assessment_dates.back(), fit.slope, fit.intercept,
                   false};
        }
        segments.push_back(seg);
        return PiecewiseLinear(origin, std::move(segments));
    }

    segments.reserve(assessment_dates.size() - 1);
    for (size_t k = 0; k + 1 < assessment_dates.size(); ++k) {
        Date lo = assessment_dates[k];
        Date hi = assessment_dates[k + 1];
        std::vector<double> xs, vs;
        collect(lo, hi, /*closed_end=*/false, xs, vs);
        if (xs.size() < 2) {
            segments.push_back({lo, hi, 0.0, 0.0, true});
        } else {
            LineFit fit = fit_segment_regression(xs, vs);
            segments.push_back({lo, hi, fit.slope, fit.intercept, false});
        }
    }
    return PiecewiseLinear(origin, std::move(segments));
}

}  // namespace mcorr
