#pragma once

#include <iosfwd>
#include <span>

#include "mcorr/pairing.hpp"
#include "mcorr/scoring.hpp"

namespace mcorr {

// Delimited report, one row per (participant, assessment), stable-sorted and
// byte-deterministic. Not-computable rows print N/A cells plus the reason.
void write_assessment_report(std::ostream& out, std::span<const ParticipantReport> reports);
void write_items_report(std::ostream& out, std::span<const ParticipantReport> reports);

void write_errata(std::ostream& out, std::span<const TugErratum> errata);

// Aligned text table; effect classes at least moderate are marked with `*`
// in place of typesetting.
void write_human_summary(std::ostream& out, std::span<const ParticipantReport> reports);

}  // namespace mcorr
