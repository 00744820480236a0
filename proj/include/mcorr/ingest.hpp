#pragma once

#include <iosfwd>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mcorr/types.hpp"

namespace mcorr {

// Row-level failure; malformed rows fail the whole file so a silently
// shortened event list cannot skew the daily averages.
class ParseError : public std::runtime_error {
  public:
    ParseError(int line, const std::string& what);
    int line() const { return line_; }

  private:
    int line_;
};

struct ExclusionConfig {
    bool exclude_zero_event_days = true;
    double min_participant_coverage = 0.0;  // fraction of study days with activity data
    std::optional<std::set<std::string>> required_sensor_rooms;
    bool drop_multi_occupancy_intervals = false;
};

// Shortest round-trip decimal form; all writers use it so outputs are
// byte-identical across runs and platforms.
std::string format_double(double v);

// Event log: header `flat_id,sensor_id,timestamp,kind[,key]`, ISO-8601
// wall-clock timestamps, one event per row in input order.
std::vector<SensorEvent> parse_event_log(std::istream& in);
void write_event_log(std::ostream& out, std::span<const SensorEvent> events);

// Assessment table: header `participant_id,date,sppb_total,sppb_balance,
// sppb_gait4m,sppb_5crt,tinetti13,tinetti28,tug_seconds,tug_points`,
// literal `N/A` for missing cells. Output ordered by (participant, date).
std::vector<AssessmentRecord> parse_assessment_table(std::istream& in);
void write_assessment_table(std::ostream& out, std::span<const AssessmentRecord> records);

// Flats: header `flat_id,sensor_id,room,timezone_offset_min`, one row per
// sensor; room may be empty; the offset must agree across a flat's rows.
std::vector<FlatConfig> parse_flats_table(std::istream& in);
void write_flats_table(std::ostream& out, std::span<const FlatConfig> flats);

// Front-door switch semantics; the study hardware leaves the four key
// meanings to deployment, so the mapping is configurable.
struct OccupancyKeyMap {
    int enter_visitor = 1;
    int leave_visitor = 2;
    int resident_out = 3;
    int resident_home = 4;
};

struct OccupancyIntervals {
    std::vector<std::pair<Timestamp, Timestamp>> intervals;  // maximal, >1 person present
    std::vector<std::string> warnings;                       // unmatched markers
};

// Counter sweep over occupancy_switch events: the resident starts at home,
// each key press adjusts the head count, and maximal spans with more than
// one person present are reported. An interval still open at stream end
// closes at the last event timestamp.
OccupancyIntervals occupancy_intervals(std::span<const SensorEvent> events,
                                       const OccupancyKeyMap& keys = {});

// Motion events from one sensor closer than the 8 s hardware cool-down;
// real logs are flagged, never rejected.
std::vector<std::string> cooldown_violations(std::span<const SensorEvent> events);

// Applies the rule-based exclusions and assembles the clean dataset:
// multi-occupancy motion events dropped (when configured), per-flat
// eligible-day sets computed, participants failing room/coverage rules
// removed. Every removal lands in the exclusion log. Participants are
// linked to flats by identical identifiers.
StudyDataset apply_exclusions(std::vector<SensorEvent> events,
                              std::vector<AssessmentRecord> assessments,
                              std::vector<FlatConfig> flats, const ExclusionConfig& config = {});

}  // namespace mcorr
