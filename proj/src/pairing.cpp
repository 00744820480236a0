#include "mcorr/pairing.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <span>

#include "mcorr/activity.hpp"

namespace mcorr {

namespace {

std::vector<Knot> score_knots(const std::vector<AssessmentRecord>& records, Assessment assessment) {
    std::vector<Knot> knots;
    for (const AssessmentRecord& rec : records) {
        if (auto score = score_of(rec, assessment)) knots.push_back({rec.date, *score});
    }
    return knots;
}

constexpr Assessment kMeasures[] = {Assessment::sppb, Assessment::tinetti13, Assessment::tinetti28,
                                    Assessment::tug};
constexpr Assessment kItems[] = {Assessment::sppb_balance, Assessment::sppb_gait4m,
                                 Assessment::sppb_5crt};

std::map<Assessment, CorrelationResult> correlate_set(const StudyDataset& dataset,
                                                      const std::string& participant_id,
                                                      std::span<const Assessment> assessments,
                                                      const AnalysisOptions& options) {
    std::map<Assessment, CorrelationResult> out;
    for (Assessment a : assessments) {
        try {
            PairedSeries pairs =
                build_paired_series(dataset, participant_id, a, options.regression);
            std::vector<double> scores, activities;
            scores.reserve(pairs.pairs.size());
            activities.reserve(pairs.pairs.size());
            for (const PairPoint& p : pairs.pairs) {
                scores.push_back(p.score);
                activities.push_back(p.activity);
            }
            out.emplace(a, correlate(scores, activities));
        } catch (const std::exception& ex) {
            // PairingError carries the intended reason; anything else must not
            // escape the parallel participant loop, so it lands here too.
            out.emplace(a, CorrelationResult::not_computable(ex.what(), 0));
        }
    }
    return out;
}

}  // namespace

PairedSeries build_paired_series(const StudyDataset& dataset, const std::string& participant_id,
                                 Assessment assessment, RegressionMode mode) {
    auto rec_it = dataset.assessments.find(participant_id);
    if (rec_it == dataset.assessments.end() || rec_it->second.empty())
        throw PairingError("no assessments");

    std::vector<Knot> knots = score_knots(rec_it->second, assessment);
    if (knots.size() < 2) throw PairingError("insufficient assessments");
    PiecewiseLinear spline = spline_interpolate(knots);

    const FlatConfig* flat = dataset.find_flat(participant_id);
    auto ev_it = dataset.events.find(participant_id);
    if (flat == nullptr || ev_it == dataset.events.end() || ev_it->second.empty())
        throw PairingError("no activity data");

    // activity over the closed visit span; days outside it cannot pair anyway
    ActivitySeries series = activity_series(ev_it->second, *flat, knots.front().date,
                                            knots.back().date, Exec::serial);

    // Only days the exclusion pass kept contribute pairs.
    const std::vector<Date>* eligible = nullptr;
    if (auto el_it = dataset.eligible_days.find(participant_id); el_it != dataset.eligible_days.end())
        eligible = &el_it->second;
    std::vector<DailyActivity> kept;
    kept.reserve(series.points.size());
    for (const DailyActivity& day : series.points)
        if (eligible == nullptr ||
            std::binary_search(eligible->begin(), eligible->end(), day.date))
            kept.push_back(day);
    if (kept.empty()) throw PairingError("no activity data");

    std::vector<Date> visit_dates;
    visit_dates.reserve(knots.size());
    for (const Knot& k : knots) visit_dates.push_back(k.date);
    ActivitySeries kept_series{participant_id, kept};
    PiecewiseLinear regression = fit_piecewise_regression(kept_series, visit_dates, mode);

    PairedSeries out;
    out.participant_id = participant_id;
    out.assessment = assessment;
    for (const DailyActivity& day : kept) {
        auto score = spline.try_evaluate(day.date);
        auto fitted = regression.try_evaluate(day.date);
        if (score && fitted) out.pairs.push_back({day.date, *score, *fitted});
    }
    return out;
}

std::map<Assessment, CorrelationResult> correlate_participant(const StudyDataset& dataset,
                                                              const std::string& participant_id,
                                                              const AnalysisOptions& options) {
    return correlate_set(dataset, participant_id, kMeasures, options);
}

std::map<Assessment, CorrelationResult> correlate_sppb_items(const StudyDataset& dataset,
                                                             const std::string& participant_id,
                                                             const AnalysisOptions& options) {
    return correlate_set(dataset, participant_id, kItems, options);
}

std::vector<ParticipantReport> correlate_all(const StudyDataset& dataset,
                                             const AnalysisOptions& options) {
    std::vector<std::string> ids;
    ids.reserve(dataset.assessments.size());
    for (const auto& [id, records] : dataset.assessments) ids.push_back(id);
    std::sort(ids.begin(), ids.end(), natural_less);

    std::vector<ParticipantReport> reports(ids.size());
    const int n = static_cast<int>(ids.size());
#pragma omp parallel for schedule(dynamic) if (options.exec == Exec::parallel)
    for (int i = 0; i < n; ++i) {
        ParticipantReport& rep = reports[static_cast<std::size_t>(i)];
        rep.participant_id = ids[static_cast<std::size_t>(i)];
        rep.measures = correlate_participant(dataset, rep.participant_id, options);
        rep.items = correlate_sppb_items(dataset, rep.participant_id, options);
    }
    return reports;
}

std::map<std::string, CohortStats> cohort_summary(const StudyDataset& dataset, int visit_index) {
    if (visit_index < 1) throw std::invalid_argument("visit_index is 1-based");
    std::map<std::string, std::vector<double>> values;
    for (const auto& [id, records] : dataset.assessments) {
        if (records.size() < static_cast<std::size_t>(visit_index)) continue;
        const AssessmentRecord& rec = records[static_cast<std::size_t>(visit_index - 1)];
        auto push = [&values](const char* measure, auto v) {
            if (v) values[measure].push_back(static_cast<double>(*v));
        };
        push("sppb_total", rec.sppb_total);
        push("tinetti13", rec.tinetti13);
        push("tinetti28", rec.tinetti28);
        push("tug_seconds", rec.tug_seconds);
        push("tug_points", rec.tug_points);
    }
    std::map<std::string, CohortStats> stats;
    for (const auto& [measure, vs] : values) {
        CohortStats s;
        s.n = static_cast<int>(vs.size());
        s.min = *std::min_element(vs.begin(), vs.end());
        s.max = *std::max_element(vs.begin(), vs.end());
        for (double v : vs) s.mean += v;
        s.mean /= s.n;
        if (s.n >= 2) {
            double ss = 0.0;
            for (double v : vs) ss += (v - s.mean) * (v - s.mean);
            s.sd = std::sqrt(ss / (s.n - 1));
        }
        stats.emplace(measure, s);
    }
    return stats;
}

bool natural_less(const std::string& a, const std::string& b) {
    long av = 0, bv = 0;
    auto [ap, aec] = std::from_chars(a.data(), a.data() + a.size(), av);
    auto [bp, bec] = std::from_chars(b.data(), b.data() + b.size(), bv);
    const bool a_num = aec == std::errc{} && ap == a.data() + a.size();
    const bool b_num = bec == std::errc{} && bp == b.data() + b.size();
    if (a_num && b_num) return av != bv ? av < bv : a < b;
    if (a_num != b_num) return a_num;  // numeric ids sort before labels
    return a < b;
}

}  // namespace mcorr
