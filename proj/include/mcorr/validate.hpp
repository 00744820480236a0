#pragma once

#include <string>
#include <vector>

#include "mcorr/types.hpp"

namespace mcorr {

// Range and cross-field checks for one visit. Total over every field
// combination (all-missing included); violations are returned, not thrown.
// Each entry names the field, the observed value and the allowed range.
std::vector<std::string> validate_record(const AssessmentRecord& record);

}  // namespace mcorr
