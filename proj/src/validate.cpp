#include "mcorr/validate.hpp"

#include <cstdio>

namespace mcorr {

namespace {

void check_range(std::vector<std::string>& out, const char* field, std::optional<int> value, int lo,
                 int hi) {
    if (!value) return;
    if (*value < lo || *value > hi) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s: %d outside [%d,%d]", field, *value, lo, hi);
        out.emplace_back(buf);
    }
}

}  // namespace

std::vector<std::string> validate_record(const AssessmentRecord& r) {
    std::vector<std::string> out;

    check_range(out, "sppb_total", r.sppb_total, 0, 12);
    check_range(out, "sppb_balance", r.sppb_balance, 0, 4);
    check_range(out, "sppb_gait4m", r.sppb_gait4m, 0, 4);
    check_range(out, "sppb_5crt", r.sppb_5crt, 0, 4);
    check_range(out, "tinetti13", r.tinetti13, 0, 13);
    check_range(out, "tinetti28", r.tinetti28, 0, 28);
    check_range(out, "tug_points", r.tug_points, 1, 3);

    if (r.sppb_total && r.sppb_balance && r.sppb_gait4m && r.sppb_5crt) {
        int sum = *r.sppb_balance + *r.sppb_gait4m + *r.sppb_5crt;
        if (sum != *r.sppb_total) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "sppb_total: %d != item sum %d", *r.sppb_total, sum);
            out.emplace_back(buf);
        }
    }
    if (r.tinetti13 && r.tinetti28 && *r.tinetti28 < *r.tinetti13) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "tinetti28 < tinetti13: %d < %d (28-point total must cover the 13-point subscale)",
                      *r.tinetti28, *r.tinetti13);
        out.emplace_back(buf);
    }
    if (r.tug_seconds && !(*r.tug_seconds > 0.0)) {
        char buf[96];
        std::snprintf(buf, sizeof buf, "tug_seconds: %g outside (0,inf)", *r.tug_seconds);
        out.emplace_back(buf);
    }
    return out;
}

}  // namespace mcorr
