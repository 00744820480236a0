#pragma once

#include <span>

#include "mcorr/exec.hpp"
#include "mcorr/types.hpp"

namespace mcorr {

// Index of the fixed 8 s window containing t: floor(local-seconds / 8).
// Windows are half-open [8k, 8k+8) aligned to local midnight; every day
// partitions into exactly 10800 of them.
int window_index(Timestamp t, int tz_offset_min);

// The per-day feature: for each configured sensor count the distinct
// windows holding at least one of its motion events (multiple events in one
// window count once), then average the counts over ALL configured sensors,
// idle ones included. Every event must be kind=motion, belong to the flat's
// sensor set and fall on the stated local day.
DailyActivity daily_activity(std::span<const SensorEvent> day_events, const FlatConfig& flat,
                             Date day);

// One point per day in [begin, end] that has at least one motion event;
// event-free days yield no point. Non-motion events are ignored. Days are
// independent, so the parallel path processes them concurrently and is
// bit-identical to the serial reference.
ActivitySeries activity_series(std::span<const SensorEvent> events, const FlatConfig& flat,
                               Date begin, Date end, Exec exec = Exec::parallel);

}  // namespace mcorr
