#include "mcorr/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "mcorr/ingest.hpp"
#include "mcorr/rng.hpp"
#include "mcorr/scoring.hpp"
#include "mcorr/time.hpp"

namespace mcorr {

namespace {

constexpr std::uint64_t kAssessmentStream = 0x6173736573736d74ull;

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

// Monotone link from relative intensity to a fraction of full score.
double score_link(double rel, double coupling) {
    return clamp01(1.0 + coupling * (rel - 1.0));
}

int noisy_score(double fraction, int scale, SplitMix64& rng, int noise) {
    int value = static_cast<int>(std::lround(fraction * scale));
    if (noise > 0) {
        const int draw = static_cast<int>(rng.next_below(2 * static_cast<std::uint64_t>(noise) + 1)) - noise;
        value += draw;
    }
    return std::clamp(value, 0, scale);
}

}  // namespace

void SimConfig::validate() const {
    if (n_sensors < 1) throw std::invalid_argument("n_sensors must be >= 1");
    if (study_days < 1) throw std::invalid_argument("study_days must be >= 1");
    if (base_rate < 0.0) throw std::invalid_argument("base_rate must be >= 0");
    if (base_rate > kWindowsPerHour)
        throw std::invalid_argument("base_rate exceeds one event per window (max 450 per hour)");
    if (assessment_interval_days < 1) throw std::invalid_argument("assessment interval must be >= 1");
    if (score_noise < 0) throw std::invalid_argument("score_noise must be >= 0");
    if (flat_id.empty()) throw std::invalid_argument("flat_id must be non-empty");
}

double relative_intensity(const SimConfig& config, int day) {
    return std::max(0.0, 1.0 + config.trend * day / 30.0);
}

double window_probability(const SimConfig& config, int day) {
    const double p = config.base_rate * relative_intensity(config, day) / kWindowsPerHour;
    return clamp01(p);
}

SimulatedFlat simulate_flat(const SimConfig& config) {
    config.validate();
    SimulatedFlat sim;
    sim.flat.flat_id = config.flat_id;
    sim.flat.timezone_offset_min = 0;
    for (int s = 0; s < config.n_sensors; ++s) {
        const std::string id = "S" + std::to_string(s + 1);
        sim.flat.motion_sensor_ids.push_back(id);
        sim.flat.sensor_rooms[id] = "room" + std::to_string(s + 1);
    }

    sim.ground_truth.reserve(static_cast<std::size_t>(config.study_days));
    sim.window_counts.assign(static_cast<std::size_t>(config.study_days),
                             std::vector<int>(static_cast<std::size_t>(config.n_sensors), 0));

    SplitMix64 rng(config.seed);
    for (int day = 0; day < config.study_days; ++day) {
        const Date date = config.start_date + day;
        const double p = window_probability(config, day);
        sim.ground_truth.push_back({date, p, relative_intensity(config, day),
                                    p * kWindowsPerDay});
        for (int s = 0; s < config.n_sensors; ++s) {
            for (int w = 0; w < kWindowsPerDay; ++w) {
                if (rng.next_double() < p) {
                    sim.events.push_back({config.flat_id, sim.flat.motion_sensor_ids[static_cast<std::size_t>(s)],
                                          timestamp_at(date, w * kWindowSeconds), EventKind::motion, 0});
                    ++sim.window_counts[static_cast<std::size_t>(day)][static_cast<std::size_t>(s)];
                }
            }
        }
    }
    std::stable_sort(sim.events.begin(), sim.events.end(),
                     [](const SensorEvent& a, const SensorEvent& b) {
                         return a.timestamp.seconds < b.timestamp.seconds;
                     });
    return sim;
}

std::vector<AssessmentRecord> simulate_assessments(const SimConfig& config) {
    config.validate();
    // Independent stream: records do not depend on how many events fired.
    SplitMix64 rng(mix_seed(config.seed, kAssessmentStream));
    std::vector<AssessmentRecord> records;
    for (int day = 0; day < config.study_days; day += config.assessment_interval_days) {
        // Scores reflect the mean intensity over the interval ending at the visit.
        const int lo = std::max(0, day - config.assessment_interval_days + 1);
        double mean_rel = 0.0;
        for (int d = lo; d <= day; ++d) mean_rel += relative_intensity(config, d);
        mean_rel /= day - lo + 1;
        const double link = score_link(mean_rel, config.coupling);

        AssessmentRecord rec;
        rec.participant_id = config.flat_id;
        rec.date = config.start_date + day;
        const int balance = noisy_score(link, 4, rng, config.score_noise);
        const int gait = noisy_score(link, 4, rng, config.score_noise);
        const int chair = noisy_score(link, 4, rng, config.score_noise);
        rec.sppb_balance = balance;
        rec.sppb_gait4m = gait;
        rec.sppb_5crt = chair;
        rec.sppb_total = balance + gait + chair;
        const int t13 = noisy_score(link, 13, rng, config.score_noise);
        int t28 = noisy_score(link, 28, rng, config.score_noise);
        t28 = std::max(t28, t13);  // total includes the gait subscale
        rec.tinetti13 = t13;
        rec.tinetti28 = t28;

        double seconds = 8.0 + 22.0 * (1.0 - link);
        if (config.score_noise > 0)
            seconds += (rng.next_double() * 2.0 - 1.0) * config.score_noise;
        seconds = std::max(0.1, std::round(seconds * 10.0) / 10.0);
        rec.tug_seconds = seconds;
        rec.tug_points = tug_points(seconds);
        records.push_back(std::move(rec));
    }
    return records;
}

SimulatedStudy simulate_study(const SimConfig& base, int n_flats) {
    if (n_flats < 1) throw std::invalid_argument("n_flats must be >= 1");
    SimulatedStudy study;
    for (int f = 0; f < n_flats; ++f) {
        SimConfig config = base;
        config.flat_id = std::to_string(f + 1);
        if (f > 0) config.seed = mix_seed(base.seed, static_cast<std::uint64_t>(f));
        SimulatedFlat sim = simulate_flat(config);
        std::vector<AssessmentRecord> recs = simulate_assessments(config);
        study.flats.push_back(std::move(sim.flat));
        study.events.insert(study.events.end(), sim.events.begin(), sim.events.end());
        study.assessments.insert(study.assessments.end(), recs.begin(), recs.end());
        study.ground_truth.emplace_back(config.flat_id, std::move(sim.ground_truth));
    }
    return study;
}

void write_ground_truth(std::ostream& out, const SimulatedStudy& study) {
    out << "flat_id,date,window_prob,rel_intensity,expected_windows_per_sensor\n";
    for (const auto& [flat_id, days] : study.ground_truth) {
        for (const GroundTruthDay& day : days) {
            out << flat_id << ',' << format_date(day.date) << ',' << format_double(day.window_prob)
                << ',' << format_double(day.rel_intensity) << ','
                << format_double(day.expected_windows_per_sensor) << '\n';
        }
    }
}

}  // namespace mcorr
