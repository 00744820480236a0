#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mcorr/types.hpp"

namespace mcorr {

enum class SppbCategory { low, middle, high };
enum class FallRisk { high_risk, moderate_risk, low_risk };

const char* to_string(SppbCategory c);
const char* to_string(FallRisk r);

// Timed-Up-&-Go seconds to points, collapsed to the 3-point scale:
// <=10 s -> 1, (10,20) s -> 2, >=20 s -> 3.
int tug_points(double seconds);

// 0-6 low, 7-9 middle, 10-12 high.
SppbCategory sppb_category(int total);

// <=18 high risk, 19-23 moderate, >=24 low.
FallRisk tinetti_fall_risk(int total);

// True iff the categorised series changes class anywhere.
template <typename Category>
bool crossed_cutoff(std::span<const Category> categories) {
    if (categories.size() < 2) throw std::invalid_argument("need >=2 categorised scores");
    for (size_t i = 1; i < categories.size(); ++i)
        if (categories[i] != categories[0]) return true;
    return false;
}

// One fixture row whose printed TUG points disagree with tug_points().
struct TugErratum {
    std::string participant_id;
    Date date;
    double tug_seconds = 0.0;
    int points_printed = 0;
    int points_computed = 0;
};

struct TugFidelity {
    int pairs_available = 0;
    int pairs_matching = 0;
    std::vector<TugErratum> errata;

    double match_fraction() const {
        return pairs_available == 0 ? 1.0
                                    : static_cast<double>(pairs_matching) / pairs_available;
    }
};

// Compares printed points against tug_points(seconds) over every record
// carrying both fields.
TugFidelity tug_fidelity(std::span<const AssessmentRecord> records);

}  // namespace mcorr
