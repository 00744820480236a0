#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcorr/time.hpp"

namespace mcorr {

enum class EventKind { motion, bed_concussion, occupancy_switch, power };

const char* to_string(EventKind k);
EventKind event_kind_from_string(const std::string& s);  // throws on unknown kind

// One sensor firing. `key` is meaningful for occupancy_switch only (1..4).
struct SensorEvent {
    std::string flat_id;
    std::string sensor_id;
    Timestamp timestamp;
    EventKind kind = EventKind::motion;
    int key = 0;

    bool operator==(const SensorEvent&) const = default;
};

struct FlatConfig {
    std::string flat_id;
    std::vector<std::string> motion_sensor_ids;        // unique, size >= 1
    std::map<std::string, std::string> sensor_rooms;   // sensor_id -> room label, optional
    int timezone_offset_min = 0;

    bool has_sensor(const std::string& sensor_id) const;
    bool operator==(const FlatConfig&) const = default;
};

// The per-day activity feature: distinct occupied 8 s windows per sensor,
// averaged over all sensors installed in the flat. A day with no events is
// never materialised; stored values are strictly positive.
struct DailyActivity {
    std::string flat_id;
    Date date;
    double value = 0.0;
    std::map<std::string, int> per_sensor_window_counts;

    bool operator==(const DailyActivity&) const = default;
};

struct ActivitySeries {
    std::string flat_id;
    std::vector<DailyActivity> points;  // dates strictly increasing

    bool operator==(const ActivitySeries&) const = default;
};

// One assessment visit. Absent fields are genuinely missing, never zero.
struct AssessmentRecord {
    std::string participant_id;
    Date date;
    std::optional<int> sppb_total;
    std::optional<int> sppb_balance;
    std::optional<int> sppb_gait4m;
    std::optional<int> sppb_5crt;
    std::optional<int> tinetti13;
    std::optional<int> tinetti28;
    std::optional<double> tug_seconds;
    std::optional<int> tug_points;

    bool operator==(const AssessmentRecord&) const = default;
};

enum class Assessment {
    sppb,
    tinetti13,
    tinetti28,
    tug,
    sppb_balance,
    sppb_gait4m,
    sppb_5crt,
};

const char* to_string(Assessment a);
std::optional<int> score_of(const AssessmentRecord& r, Assessment a);

// x is measured in days since `origin`; each segment evaluates to
// slope * x + intercept. Segments are contiguous, half-open [start, end),
// with the last segment closed at its end. Regression segments that could
// not be fitted are kept as placeholders with empty = true.
struct LinearSegment {
    Date start;
    Date end;
    double slope = 0.0;
    double intercept = 0.0;
    bool empty = false;
};

class PiecewiseLinear {
  public:
    PiecewiseLinear() = default;
    PiecewiseLinear(Date origin, std::vector<LinearSegment> segments);

    Date origin() const { return origin_; }
    Date domain_begin() const;
    Date domain_end() const;
    const std::vector<LinearSegment>& segments() const { return segments_; }

    // Throws std::domain_error outside the domain or on an empty segment.
    double evaluate(Date d) const;
    std::optional<double> try_evaluate(Date d) const;

    const LinearSegment* segment_at(Date d) const;

  private:
    Date origin_;
    std::vector<LinearSegment> segments_;
};

enum class Effect { negligible, small, moderate, large };

const char* to_string(Effect e);

// rho/p_value are absent iff the correlation was not computable; the reason
// then says why (e.g. "constant series").
struct CorrelationResult {
    std::optional<double> rho;
    std::optional<double> p_value;
    int n_pairs = 0;
    std::optional<Effect> effect;
    bool significant = false;
    std::string reason;

    bool computable() const { return rho.has_value(); }
    static CorrelationResult not_computable(std::string reason, int n_pairs = 0);
};

struct ExclusionEntry {
    std::string entity;
    std::string rule;
    std::string detail;

    bool operator==(const ExclusionEntry&) const = default;
};

// Cleaned study data. `eligible_days` holds, per flat, the days carrying at
// least one motion event; `exclusion_log` is an audit trail of removals and
// deliberately does not take part in equality.
struct StudyDataset {
    std::vector<FlatConfig> flats;
    std::map<std::string, std::vector<SensorEvent>> events;             // flat -> time order
    std::map<std::string, std::vector<AssessmentRecord>> assessments;   // participant -> date order
    std::map<std::string, std::vector<Date>> eligible_days;             // flat -> sorted days
    std::vector<ExclusionEntry> exclusion_log;

    const FlatConfig* find_flat(const std::string& flat_id) const;

    bool same_data(const StudyDataset& other) const;
};

struct PairPoint {
    Date date;
    double score = 0.0;
    double activity = 0.0;
};

struct PairedSeries {
    std::string participant_id;
    Assessment assessment = Assessment::sppb;
    std::vector<PairPoint> pairs;  // dates strictly increasing
};

}  // namespace mcorr
