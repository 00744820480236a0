#include "mcorr/scoring.hpp"

#include <stdexcept>

namespace mcorr {

const char* to_string(SppbCategory c) {
    switch (c) {
        case SppbCategory::low: return "low";
        case SppbCategory::middle: return "middle";
        case SppbCategory::high: return "high";
    }
    return "?";
}

const char* to_string(FallRisk r) {
    switch (r) {
        case FallRisk::high_risk: return "high_risk";
        case FallRisk::moderate_risk: return "moderate_risk";
        case FallRisk::low_risk: return "low_risk";
    }
    return "?";
}

int tug_points(double seconds) {
    if (!(seconds > 0.0)) throw std::invalid_argument("tug seconds must be positive");
    if (seconds <= 10.0) return 1;
    if (seconds < 20.0) return 2;
    return 3;
}

SppbCategory sppb_category(int total) {
    if (total < 0 || total > 12) throw std::out_of_range("sppb total outside [0,12]");
    if (total <= 6) return SppbCategory::low;
    if (total <= 9) return SppbCategory::middle;
    return SppbCategory::high;
}

FallRisk tinetti_fall_risk(int total) {
    if (total < 0 || total > 28) throw std::out_of_range("tinetti total outside [0,28]");
    if (total <= 18) return FallRisk::high_risk;
    if (total <= 23) return FallRisk::moderate_risk;
    return FallRisk::low_risk;
}

TugFidelity tug_fidelity(std::span<const AssessmentRecord> records) {
    TugFidelity out;
    for (const auto& r : records) {
        if (!r.tug_seconds || !r.tug_points) continue;
        ++out.pairs_available;
        int computed = tug_points(*r.tug_seconds);
        if (computed == *r.tug_points) {
            ++out.pairs_matching;
        } else {
            out.errata.push_back(
                {r.participant_id, r.date, *r.tug_seconds, *r.tug_points, computed});
        }
    }
    return out;
}

}  // namespace mcorr
