#include "mcorr/types.hpp"

#include <algorithm>

namespace mcorr {

const char* to_string(EventKind k) {
    switch (k) {
        case EventKind::motion: return "motion";
        case EventKind::bed_concussion: return "bed_concussion";
        case EventKind::occupancy_switch: return "occupancy_switch";
        case EventKind::power: return "power";
    }
    return "?";
}

EventKind event_kind_from_string(const std::string& s) {
    if (s == "motion") return EventKind::motion;
    if (s == "bed_concussion") return EventKind::bed_concussion;
    if (s == "occupancy_switch") return EventKind::occupancy_switch;
    if (s == "power") return EventKind::power;
    throw std::invalid_argument("unknown kind '" + s +
                                "' (allowed: motion, bed_concussion, occupancy_switch, power)");
}

bool FlatConfig::has_sensor(const std::string& sensor_id) const {
    return std::find(motion_sensor_ids.begin(), motion_sensor_ids.end(), sensor_id) !=
           motion_sensor_ids.end();
}

const char* to_string(Assessment a) {
    switch (a) {
        case Assessment::sppb: return "SPPB";
        case Assessment::tinetti13: return "Tinetti13";
        case Assessment::tinetti28: return "Tinetti28";
        case Assessment::tug: return "TUG";
        case Assessment::sppb_balance: return "SPPB_balance";
        case Assessment::sppb_gait4m: return "SPPB_4m";
        case Assessment::sppb_5crt: return "SPPB_5CRT";
    }
    return "?";
}

std::optional<int> score_of(const AssessmentRecord& r, Assessment a) {
    switch (a) {
        case Assessment::sppb: return r.sppb_total;
        case Assessment::tinetti13: return r.tinetti13;
        case Assessment::tinetti28: return r.tinetti28;
        case Assessment::tug: return r.tug_points;
        case Assessment::sppb_balance: return r.sppb_balance;
        case Assessment::sppb_gait4m: return r.sppb_gait4m;
        case Assessment::sppb_5crt: return r.sppb_5crt;
    }
    return std::nullopt;
}

PiecewiseLinear::PiecewiseLinear(Date origin, std::vector<LinearSegment> segments)
    : origin_(origin), segments_(std::move(segments)) {
    for (size_t i = 0; i < segments_.size(); ++i) {
        if (!(segments_[i].start < segments_[i].end))
            throw std::invalid_argument("segment start must precede end");
        if (i > 0 && segments_[i].start != segments_[i - 1].end)
            throw std::invalid_argument("segments must be contiguous");
    }
}

Date PiecewiseLinear::domain_begin() const {
    if (segments_.empty()) throw std::domain_error("empty function");
    return segments_.front().start;
}

Date PiecewiseLinear::domain_end() const {
    if (segments_.empty()) throw std::domain_error("empty function");
    return segments_.back().end;
}

const LinearSegment* PiecewiseLinear::segment_at(Date d) const {
    if (segments_.empty() || d < segments_.front().start || d > segments_.back().end)
        return nullptr;
    // half-open [start, end); the final segment is closed at its end
    for (const auto& seg : segments_) {
        if (d >= seg.start && d < seg.end) return &seg;
    }
    return &segments_.back();
}

double PiecewiseLinear::evaluate(Date d) const {
    const LinearSegment* seg = segment_at(d);
    if (seg == nullptr) throw std::domain_error("out of domain");
    if (seg->empty) throw std::domain_error("empty segment");
    return seg->slope * static_cast<double>(d - origin_) + seg->intercept;
}

std::optional<double> PiecewiseLinear::try_evaluate(Date d) const {
    const LinearSegment* seg = segment_at(d);
    if (seg == nullptr || seg->empty) return std::nullopt;
    return seg->slope * static_cast<double>(d - origin_) + seg->intercept;
}

const char* to_string(Effect e) {
    switch (e) {
        case Effect::negligible: return "negligible";
        case Effect::small: return "small";
        case Effect::moderate: return "moderate";
        case Effect::large: return "large";
    }
    return "?";
}

CorrelationResult CorrelationResult::not_computable(std::string reason, int n_pairs) {
    CorrelationResult r;
    r.n_pairs = n_pairs;
    r.reason = std::move(reason);
    return r;
}

const FlatConfig* StudyDataset::find_flat(const std::string& flat_id) const {
    for (const auto& f : flats)
        if (f.flat_id == flat_id) return &f;
    return nullptr;
}

bool StudyDataset::same_data(const StudyDataset& other) const {
    return flats == other.flats && events == other.events && assessments == other.assessments &&
           eligible_days == other.eligible_days;
}

}  // namespace mcorr
