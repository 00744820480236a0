#include "mcorr/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>

namespace mcorr {

namespace {

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(cur);
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

int parse_int_field(const std::string& s, int line, const char* field) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("non-integer ") + field + " '" + s + "'");
    return v;
}

double parse_double_field(const std::string& s, int line, const char* field) {
    double v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError(line, std::string("non-numeric ") + field + " '" + s + "'");
    return v;
}

std::optional<int> opt_int_field(const std::string& s, int line, const char* field) {
    if (s == "N/A" || s.empty()) return std::nullopt;
    return parse_int_field(s, line, field);
}

std::optional<double> opt_double_field(const std::string& s, int line, const char* field) {
    if (s == "N/A" || s.empty()) return std::nullopt;
    return parse_double_field(s, line, field);
}

std::string opt_to_field(std::optional<int> v) { return v ? std::to_string(*v) : "N/A"; }

std::string opt_to_field(std::optional<double> v) { return v ? format_double(*v) : "N/A"; }

bool read_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    return true;
}

}  // namespace

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

std::vector<SensorEvent> parse_event_log(std::istream& in) {
    std::string line;
    if (!read_line(in, line)) throw ParseError(1, "missing header");
    auto header = split_csv(line);
    if (header.size() < 4 || header[0] != "flat_id" || header[1] != "sensor_id" ||
        header[2] != "timestamp" || header[3] != "kind")
        throw ParseError(1, "bad header, expected flat_id,sensor_id,timestamp,kind[,key]");

    std::vector<SensorEvent> events;
    int line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto fields = split_csv(line);
        if (fields.size() != 4 && fields.size() != 5)
            throw ParseError(line_no, "expected 4 or 5 fields, got " +
                                          std::to_string(fields.size()));
        SensorEvent e;
        e.flat_id = fields[0];
        e.sensor_id = fields[1];
        if (e.flat_id.empty()) throw ParseError(line_no, "empty flat_id");
        if (e.sensor_id.empty()) throw ParseError(line_no, "empty sensor_id");
        try {
            e.timestamp = parse_timestamp(fields[2]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(line_no, ex.what());
        }
        try {
            e.kind = event_kind_from_string(fields[3]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(line_no, ex.what());
        }
        if (e.kind == EventKind::occupancy_switch) {
            if (fields.size() < 5 || fields[4].empty())
                throw ParseError(line_no, "occupancy_switch requires a key");
            e.key = parse_int_field(fields[4], line_no, "key");
            if (e.key < 1 || e.key > 4) throw ParseError(line_no, "key outside 1..4");
        } else if (fields.size() == 5 && !fields[4].empty()) {
            throw ParseError(line_no, "key is only valid for occupancy_switch");
        }
        events.push_back(std::move(e));
    }
    return events;
}

void write_event_log(std::ostream& out, std::span<const SensorEvent> events) {
    out << "flat_id,sensor_id,timestamp,kind,key\n";
    for (const auto& e : events) {
        out << e.flat_id << ',' << e.sensor_id << ',' << format_timestamp(e.timestamp) << ','
            << to_string(e.kind) << ',';
        if (e.kind == EventKind::occupancy_switch) out << e.key;
        out << '\n';
    }
}

std::vector<AssessmentRecord> parse_assessment_table(std::istream& in) {
    static const char* kHeader =
        "participant_id,date,sppb_total,sppb_balance,sppb_gait4m,sppb_5crt,tinetti13,tinetti28,"
        "tug_seconds,tug_points";
    std::string line;
    if (!read_line(in, line)) throw ParseError(1, "missing header");
    {
        auto fields = split_csv(line);
        auto expected = split_csv(kHeader);
        if (fields != expected)
            throw ParseError(1, std::string("bad header, expected ") + kHeader);
    }

    std::vector<AssessmentRecord> records;
    int line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 10)
            throw ParseError(line_no, "expected 10 fields, got " + std::to_string(f.size()));
        AssessmentRecord r;
        r.participant_id = f[0];
        if (r.participant_id.empty()) throw ParseError(line_no, "empty participant_id");
        try {
            r.date = parse_date(f[1]);
        } catch (const std::invalid_argument& ex) {
            throw ParseError(line_no, ex.what());
        }
        r.sppb_total = opt_int_field(f[2], line_no, "sppb_total");
        r.sppb_balance = opt_int_field(f[3], line_no, "sppb_balance");
        r.sppb_gait4m = opt_int_field(f[4], line_no, "sppb_gait4m");
        r.sppb_5crt = opt_int_field(f[5], line_no, "sppb_5crt");
        r.tinetti13 = opt_int_field(f[6], line_no, "tinetti13");
        r.tinetti28 = opt_int_field(f[7], line_no, "tinetti28");
        r.tug_seconds = opt_double_field(f[8], line_no, "tug_seconds");
        if (r.tug_seconds && !(*r.tug_seconds > 0.0))
            throw ParseError(line_no, "tug_seconds must be positive");
        r.tug_points = opt_int_field(f[9], line_no, "tug_points");
        records.push_back(std::move(r));
    }
    std::stable_sort(records.begin(), records.end(),
                     [](const AssessmentRecord& a, const AssessmentRecord& b) {
                         if (a.participant_id != b.participant_id)
                             return a.participant_id < b.participant_id;
                         return a.date < b.date;
                     });
    return records;
}

void write_assessment_table(std::ostream& out, std::span<const AssessmentRecord> records) {
    out << "participant_id,date,sppb_total,sppb_balance,sppb_gait4m,sppb_5crt,tinetti13,"
           "tinetti28,tug_seconds,tug_points\n";
    for (const auto& r : records) {
        out << r.participant_id << ',' << format_date(r.date) << ',' << opt_to_field(r.sppb_total)
            << ',' << opt_to_field(r.sppb_balance) << ',' << opt_to_field(r.sppb_gait4m) << ','
            << opt_to_field(r.sppb_5crt) << ',' << opt_to_field(r.tinetti13) << ','
            << opt_to_field(r.tinetti28) << ',' << opt_to_field(r.tug_seconds) << ','
            << opt_to_field(r.tug_points) << '\n';
    }
}

std::vector<FlatConfig> parse_flats_table(std::istream& in) {
    std::string line;
    if (!read_line(in, line)) throw ParseError(1, "missing header");
    if (split_csv(line) != split_csv("flat_id,sensor_id,room,timezone_offset_min"))
        throw ParseError(1, "bad header, expected flat_id,sensor_id,room,timezone_offset_min");

    std::vector<FlatConfig> flats;
    std::map<std::string, size_t> index;
    int line_no = 1;
    while (read_line(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        auto f = split_csv(line);
        if (f.size() != 4)
            throw ParseError(line_no, "expected 4 fields, got " + std::to_string(f.size()));
        const std::string& flat_id = f[0];
        const std::string& sensor_id = f[1];
        if (flat_id.empty()) throw ParseError(line_no, "empty flat_id");
        if (sensor_id.empty()) throw ParseError(line_no, "empty sensor_id");
        int offset = parse_int_field(f[3], line_no, "timezone_offset_min");

        auto [it, inserted] = index.try_emplace(flat_id, flats.size());
        if (inserted) {
            FlatConfig cfg;
            cfg.flat_id = flat_id;
            cfg.timezone_offset_min = offset;
            flats.push_back(std::move(cfg));
        }
        FlatConfig& cfg = flats[it->second];
        if (cfg.timezone_offset_min != offset)
            throw ParseError(line_no, "conflicting timezone_offset_min for flat " + flat_id);
        if (cfg.has_sensor(sensor_id))
            throw ParseError(line_no, "duplicate sensor " + sensor_id + " in flat " + flat_id);
        cfg.motion_sensor_ids.push_back(sensor_id);
        if (!f[2].empty()) cfg.sensor_rooms[sensor_id] = f[2];
    }
    return flats;
}

void write_flats_table(std::ostream& out, std::span<const FlatConfig> flats) {
    out << "flat_id,sensor_id,room,timezone_offset_min\n";
    for (const auto& flat : flats) {
        for (const auto& sensor : flat.motion_sensor_ids) {
            auto room = flat.sensor_rooms.find(sensor);
            out << flat.flat_id << ',' << sensor << ','
                << (room == flat.sensor_rooms.end() ? "" : room->second) << ','
                << flat.timezone_offset_min << '\n';
        }
    }
}

OccupancyIntervals occupancy_intervals(std::span<const SensorEvent> events,
                                       const OccupancyKeyMap& keys) {
    OccupancyIntervals out;

    std::vector<const SensorEvent*> switches;
    Timestamp last_seen{};
    bool any_event = false;
    for (const auto& e : events) {
        if (!any_event || last_seen < e.timestamp) last_seen = e.timestamp;
        any_event = true;
        if (e.kind == EventKind::occupancy_switch) switches.push_back(&e);
    }
    std::stable_sort(switches.begin(), switches.end(),
                     [](const SensorEvent* a, const SensorEvent* b) {
                         return a->timestamp < b->timestamp;
                     });

    bool resident_home = true;
    int visitors = 0;
    std::optional<Timestamp> open_since;

    auto head_count = [&] { return visitors + (resident_home ? 1 : 0); };
    auto update = [&](Timestamp t) {
        if (head_count() > 1 && !open_since) {
            open_since = t;
        } else if (head_count() <= 1 && open_since) {
            out.intervals.emplace_back(*open_since, t);
            open_since.reset();
        }
    };

    for (const SensorEvent* e : switches) {
        int key = e->key;
        if (key == keys.enter_visitor) {
            ++visitors;
        } else if (key == keys.leave_visitor) {
            if (visitors == 0) {
                out.warnings.push_back("unmatched leave-visitor at " +
                                       format_timestamp(e->timestamp));
                continue;
            }
            --visitors;
        } else if (key == keys.resident_out) {
            if (!resident_home) {
                out.warnings.push_back("resident-out while already out at " +
                                       format_timestamp(e->timestamp));
                continue;
            }
            resident_home = false;
        } else if (key == keys.resident_home) {
            if (resident_home) {
                out.warnings.push_back("resident-home while already home at " +
                                       format_timestamp(e->timestamp));
                continue;
            }
            resident_home = true;
        } else {
            out.warnings.push_back("unmapped key " + std::to_string(key) + " at " +
                                   format_timestamp(e->timestamp));
            continue;
        }
        update(e->timestamp);
    }

    if (open_since) {
        out.warnings.push_back("multi-occupancy still open at stream end");
        out.intervals.emplace_back(*open_since, last_seen);
    }
    return out;
}

std::vector<std::string> cooldown_violations(std::span<const SensorEvent> events) {
    std::map<std::pair<std::string, std::string>, std::vector<Timestamp>> per_sensor;
    for (const auto& e : events)
        if (e.kind == EventKind::motion)
            per_sensor[{e.flat_id, e.sensor_id}].push_back(e.timestamp);

    std::vector<std::string> out;
    for (auto& [key, times] : per_sensor) {
        std::sort(times.begin(), times.end());
        for (size_t i = 1; i < times.size(); ++i) {
            std::int64_t gap = times[i].seconds - times[i - 1].seconds;
            if (gap < kWindowSeconds)
                out.push_back("flat " + key.first + " sensor " + key.second + ": events " +
                              std::to_string(gap) + " s apart at " +
                              format_timestamp(times[i - 1]));
        }
    }
    return out;
}

namespace {

std::vector<Date> event_days(std::span<const SensorEvent> events, const FlatConfig& flat) {
    std::vector<Date> days;
    for (const auto& e : events)
        if (e.kind == EventKind::motion)
            days.push_back(local_date(e.timestamp, flat.timezone_offset_min));
    std::sort(days.begin(), days.end());
    days.erase(std::unique(days.begin(), days.end()), days.end());
    return days;
}

}  // namespace

StudyDataset apply_exclusions(std::vector<SensorEvent> events,
                              std::vector<AssessmentRecord> assessments,
                              std::vector<FlatConfig> flats, const ExclusionConfig& config) {
    if (config.min_participant_coverage < 0.0 || config.min_participant_coverage > 1.0)
        throw std::invalid_argument("min_participant_coverage outside [0,1]");

    StudyDataset ds;
    ds.flats = std::move(flats);
    for (size_t i = 0; i < ds.flats.size(); ++i)
        for (size_t j = i + 1; j < ds.flats.size(); ++j)
            if (ds.flats[i].flat_id == ds.flats[j].flat_id)
                throw std::invalid_argument("duplicate flat id " + ds.flats[i].flat_id);

    for (auto& e : events) {
        if (ds.find_flat(e.flat_id) == nullptr)
            throw std::invalid_argument("event references unknown flat '" + e.flat_id + "'");
        ds.events[e.flat_id].push_back(std::move(e));
    }
    for (auto& [flat_id, list] : ds.events)
        std::stable_sort(list.begin(), list.end(), [](const SensorEvent& a, const SensorEvent& b) {
            return a.timestamp < b.timestamp;
        });

    std::stable_sort(assessments.begin(), assessments.end(),
                     [](const AssessmentRecord& a, const AssessmentRecord& b) {
                         if (a.participant_id != b.participant_id)
                             return a.participant_id < b.participant_id;
                         return a.date < b.date;
                     });
    for (auto& r : assessments) {
        auto& list = ds.assessments[r.participant_id];
        if (!list.empty() && !(list.back().date < r.date))
            throw std::invalid_argument("duplicate assessment date for participant " +
                                        r.participant_id);
        list.push_back(std::move(r));
    }

    if (config.drop_multi_occupancy_intervals) {
        for (auto& [flat_id, list] : ds.events) {
            auto occ = occupancy_intervals(list);
            if (occ.intervals.empty()) continue;
            auto inside = [&](Timestamp t) {
                for (const auto& [lo, hi] : occ.intervals)
                    if (lo <= t && t <= hi) return true;
                return false;
            };
            size_t before = list.size();
            std::erase_if(list, [&](const SensorEvent& e) {
                return e.kind == EventKind::motion && inside(e.timestamp);
            });
            size_t removed = before - list.size();
            if (removed > 0)
                ds.exclusion_log.push_back(
                    {flat_id, "multi_occupancy",
                     "removed " + std::to_string(removed) + " motion events in " +
                         std::to_string(occ.intervals.size()) + " intervals"});
        }
    }

    // days with at least one motion event; coverage is always judged on
    // these, whatever the eligibility flag says
    std::map<std::string, std::vector<Date>> data_days;
    for (const auto& flat : ds.flats) {
        auto it = ds.events.find(flat.flat_id);
        data_days[flat.flat_id] =
            it == ds.events.end() ? std::vector<Date>{} : event_days(it->second, flat);
    }
    for (const auto& flat : ds.flats) {
        std::vector<Date> days = data_days[flat.flat_id];
        if (!config.exclude_zero_event_days && !days.empty()) {
            // zero-event days stay eligible: expand to the full observed span
            std::vector<Date> full;
            for (Date d = days.front(); d <= days.back(); d = d + 1) full.push_back(d);
            days = std::move(full);
        }
        ds.eligible_days[flat.flat_id] = std::move(days);
    }

    std::vector<std::string> to_remove;
    if (config.required_sensor_rooms) {
        for (const auto& [pid, records] : ds.assessments) {
            const FlatConfig* flat = ds.find_flat(pid);
            std::string missing;
            if (flat == nullptr) {
                missing = "(no matching flat)";
            } else {
                std::set<std::string> rooms;
                for (const auto& [sensor, room] : flat->sensor_rooms) rooms.insert(room);
                for (const auto& need : *config.required_sensor_rooms)
                    if (!rooms.count(need)) {
                        missing = need;
                        break;
                    }
            }
            if (!missing.empty()) {
                ds.exclusion_log.push_back({pid, "required_rooms", "missing room " + missing});
                to_remove.push_back(pid);
            }
        }
        for (const auto& pid : to_remove) ds.assessments.erase(pid);
        to_remove.clear();
    }

    if (config.min_participant_coverage > 0.0) {
        for (const auto& [pid, records] : ds.assessments) {
            Date first = records.front().date;
            Date last = records.back().date;
            int span = last - first + 1;
            int covered = 0;
            auto it = data_days.find(pid);
            if (it != data_days.end())
                for (Date d : it->second)
                    if (first <= d && d <= last) ++covered;
            double coverage = static_cast<double>(covered) / span;
            if (coverage < config.min_participant_coverage) {
                char buf[96];
                std::snprintf(buf, sizeof buf, "coverage %.4f < %.4f (%d of %d days)", coverage,
                              config.min_participant_coverage, covered, span);
                ds.exclusion_log.push_back({pid, "coverage", buf});
                to_remove.push_back(pid);
            }
        }
        for (const auto& pid : to_remove) ds.assessments.erase(pid);
    }

    return ds;
}

}  // namespace mcorr
