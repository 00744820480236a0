#include "mcorr/activity.hpp"

#include <algorithm>
#include <stdexcept>
#include <string_view>
#include <utility>

namespace mcorr {

int window_index(Timestamp t, int tz_offset_min) {
    return local_second_of_day(t, tz_offset_min) / kWindowSeconds;
}

DailyActivity daily_activity(std::span<const SensorEvent> day_events, const FlatConfig& flat,
                             Date day) {
    if (flat.motion_sensor_ids.empty())
        throw std::invalid_argument("flat has no motion sensors configured");

    DailyActivity out;
    out.flat_id = flat.flat_id;
    out.date = day;
    for (const auto& id : flat.motion_sensor_ids) out.per_sensor_window_counts[id] = 0;

    // (sensor, window) pairs, deduplicated; the indicator caps repeats at 1
    std::vector<std::pair<std::string_view, int>> hits;
    hits.reserve(day_events.size());
    for (const auto& e : day_events) {
        if (e.kind != EventKind::motion)
            throw std::invalid_argument("daily_activity expects motion events only");
        if (e.flat_id != flat.flat_id)
            throw std::invalid_argument("event from foreign flat '" + e.flat_id + "'");
        if (!flat.has_sensor(e.sensor_id))
            throw std::invalid_argument("event from unconfigured sensor '" + e.sensor_id + "'");
        if (local_date(e.timestamp, flat.timezone_offset_min) != day)
            throw std::invalid_argument("event outside the stated day");
        hits.emplace_back(e.sensor_id, window_index(e.timestamp, flat.timezone_offset_min));
    }
    std::sort(hits.begin(), hits.end());
    hits.erase(std::unique(hits.begin(), hits.end()), hits.end());

    int total = 0;
    for (const auto& [sensor, window] : hits) {
        ++out.per_sensor_window_counts[std::string(sensor)];
        ++total;
    }
    out.value = static_cast<double>(total) / static_cast<double>(flat.motion_sensor_ids.size());
    return out;
}

ActivitySeries activity_series(std::span<const SensorEvent> events, const FlatConfig& flat,
                               Date begin, Date end, Exec exec) {
    if (end < begin) throw std::invalid_argument("empty date range");

    ActivitySeries series;
    series.flat_id = flat.flat_id;

    // bucket motion events by local day, keeping only days in range;
    // validate here so the parallel loop below cannot throw
    std::map<Date, std::vector<SensorEvent>> by_day;
    for (const auto& e : events) {
        if (e.kind != EventKind::motion) continue;
        if (e.flat_id != flat.flat_id)
            throw std::invalid_argument("event from foreign flat '" + e.flat_id + "'");
        if (!flat.has_sensor(e.sensor_id))
            throw std::invalid_argument("event from unconfigured sensor '" + e.sensor_id + "'");
        Date day = local_date(e.timestamp, flat.timezone_offset_min);
        if (day < begin || end < day) continue;
        by_day[day].push_back(e);
    }
    if (by_day.empty()) return series;

    std::vector<const std::pair<const Date, std::vector<SensorEvent>>*> days;
    days.reserve(by_day.size());
    for (const auto& entry : by_day) days.push_back(&entry);

    std::vector<DailyActivity> points(days.size());
    const std::int64_t n = static_cast<std::int64_t>(days.size());
#pragma omp parallel for schedule(static) if (exec == Exec::parallel)
    for (std::int64_t i = 0; i < n; ++i)
        points[i] = daily_activity(days[i]->second, flat, days[i]->first);

    series.points = std::move(points);
    return series;
}

}  // namespace mcorr
