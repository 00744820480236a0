#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "mcorr/types.hpp"

namespace mcorr {

// Windows fire as independent Bernoulli draws, so the 8 s cool-down holds by
// construction and the per-day window counts have exact binomial moments.
// 450 windows per hour anchor base_rate in events per sensor-hour.
struct SimConfig {
    std::uint64_t seed = 0;
    int n_sensors = 1;
    int study_days = 60;
    double base_rate = 45.0;  // expected events per sensor-hour at day 0
    double trend = 0.0;       // relative rate change per 30 days
    int assessment_interval_days = 31;
    int score_noise = 0;      // bounded integer noise, points
    double coupling = 1.0;    // link slope from relative intensity to score scales
    Date start_date{16252};   // 2014-07-01
    std::string flat_id = "1";

    void validate() const;  // throws std::invalid_argument
};

inline constexpr double kWindowsPerHour = 3600.0 / kWindowSeconds;  // 450

// Per-window firing probability on the given study day (clamped to [0,1]).
double window_probability(const SimConfig& config, int day);

// Intensity relative to day 0, the quantity the score link consumes.
double relative_intensity(const SimConfig& config, int day);

struct GroundTruthDay {
    Date date;
    double window_prob = 0.0;
    double rel_intensity = 0.0;
    double expected_windows_per_sensor = 0.0;
};

struct SimulatedFlat {
    FlatConfig flat;
    std::vector<SensorEvent> events;
    std::vector<GroundTruthDay> ground_truth;          // one entry per study day
    std::vector<std::vector<int>> window_counts;       // [day][sensor], exact bookkeeping
};

// Deterministic for a given seed: one splitmix64 stream, fixed
// day -> sensor -> window order, at most one event per sensor-window.
SimulatedFlat simulate_flat(const SimConfig& config);

// One visit every assessment_interval_days. Each score is a monotone link
// of the mean relative intensity over the preceding interval, quantised to
// its scale, noised by at most score_noise points and clamped to its valid
// range. TUG seconds are inverse-linked and the points follow tug_points().
std::vector<AssessmentRecord> simulate_assessments(const SimConfig& config);

struct SimulatedStudy {
    std::vector<FlatConfig> flats;
    std::vector<SensorEvent> events;                 // all flats, flat order then time
    std::vector<AssessmentRecord> assessments;
    std::vector<std::pair<std::string, std::vector<GroundTruthDay>>> ground_truth;
};

// n_flats copies of the configuration with flat ids "1".."n" and per-flat
// derived seeds.
SimulatedStudy simulate_study(const SimConfig& base, int n_flats);

void write_ground_truth(std::ostream& out, const SimulatedStudy& study);

}  // namespace mcorr
