#include "mcorr/report.hpp"

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <string>

#include "mcorr/ingest.hpp"
#include "mcorr/time.hpp"

namespace mcorr {

namespace {

void write_rows(std::ostream& out, std::span<const ParticipantReport> reports, bool items) {
    out << "participant_id,assessment,rho,p,effect,significant,n_pairs,reason\n";
    for (const ParticipantReport& rep : reports) {
        const auto& results = items ? rep.items : rep.measures;
        for (const auto& [assessment, r] : results) {
            out << rep.participant_id << ',' << to_string(assessment) << ',';
            if (r.computable()) {
                out << format_double(*r.rho) << ',' << format_double(*r.p_value) << ','
                    << to_string(*r.effect) << ',' << (r.significant ? "true" : "false");
            } else {
                out << "N/A,N/A,N/A,false";
            }
            out << ',' << r.n_pairs << ',' << r.reason << '\n';
        }
    }
}

}  // namespace

void write_assessment_report(std::ostream& out, std::span<const ParticipantReport> reports) {
    write_rows(out, reports, false);
}

void write_items_report(std::ostream& out, std::span<const ParticipantReport> reports) {
    write_rows(out, reports, true);
}

void write_errata(std::ostream& out, std::span<const TugErratum> errata) {
    out << "participant_id,date,tug_seconds,points_printed,points_computed\n";
    for (const TugErratum& e : errata) {
        out << e.participant_id << ',' << format_date(e.date) << ',' << format_double(e.tug_seconds)
            << ',' << e.points_printed << ',' << e.points_computed << '\n';
    }
}

void write_human_summary(std::ostream& out, std::span<const ParticipantReport> reports) {
    out << "participant  assessment   rho       p          n   effect\n";
    for (const ParticipantReport& rep : reports) {
        for (const auto& [assessment, r] : rep.measures) {
            char line[128];
            if (r.computable()) {
                const bool marked = *r.effect >= Effect::moderate;
                std::snprintf(line, sizeof line, "%-12s %-12s %+.3f%s   %-9.3g  %-3d %s",
                              rep.participant_id.c_str(), to_string(assessment), *r.rho,
                              marked ? "*" : " ", *r.p_value, r.n_pairs, to_string(*r.effect));
            } else {
                std::snprintf(line, sizeof line, "%-12s %-12s N/A        N/A        %-3d (%s)",
                              rep.participant_id.c_str(), to_string(assessment), r.n_pairs,
                              r.reason.c_str());
            }
            out << line << '\n';
        }
    }
}

}  // namespace mcorr
