#pragma once

#include <span>
#include <vector>

#include "mcorr/types.hpp"

namespace mcorr {

struct Knot {
    Date date;
    double score = 0.0;
};

struct LineFit {
    double slope = 0.0;      // per day
    double intercept = 0.0;  // value at the x origin
};

// Continuous piecewise linear interpolant: one segment per consecutive knot
// pair, passing exactly through every knot. Needs >= 2 knots with strictly
// increasing dates.
PiecewiseLinear spline_interpolate(std::span<const Knot> knots);

// Ordinary least squares over (x, v): minimises sum (m*x + b - v)^2 in
// closed form. x values are day offsets from the caller's origin. Needs
// >= 2 points with >= 2 distinct abscissae.
LineFit fit_segment_regression(std::span<const double> x, std::span<const double> v);

enum class RegressionMode { piecewise, global };

// One regression segment per inter-assessment interval [d_k, d_k+1), fitted
// on the activity points falling inside it; intervals with fewer than two
// points stay as empty placeholders. Global mode fits one line over the
// whole span instead (sensitivity runs).
PiecewiseLinear fit_piecewise_regression(const ActivitySeries& series,
                                         std::span<const Date> assessment_dates,
                                         RegressionMode mode = RegressionMode::piecewise);

}  // namespace mcorr
