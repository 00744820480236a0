#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcorr/approximation.hpp"
#include "mcorr/correlation.hpp"
#include "mcorr/exec.hpp"
#include "mcorr/types.hpp"

namespace mcorr {

// Raised when a participant cannot enter the analysis at all; what() is the
// machine-readable reason that ends up in the report's reason column.
class PairingError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct AnalysisOptions {
    RegressionMode regression = RegressionMode::piecewise;
    Exec exec = Exec::parallel;
};

// One day contributes one pair: interpolated score and fitted activity, both
// evaluated at that day. Days outside every non-empty regression segment or
// outside the interpolation domain drop out.
PairedSeries build_paired_series(const StudyDataset& dataset, const std::string& participant_id,
                                 Assessment assessment,
                                 RegressionMode mode = RegressionMode::piecewise);

// Correlations for the four headline measures of one participant. Failures
// become not-computable results, never exceptions.
std::map<Assessment, CorrelationResult> correlate_participant(const StudyDataset& dataset,
                                                              const std::string& participant_id,
                                                              const AnalysisOptions& options = {});

// Same pipeline on the three component items.
std::map<Assessment, CorrelationResult> correlate_sppb_items(const StudyDataset& dataset,
                                                             const std::string& participant_id,
                                                             const AnalysisOptions& options = {});

struct ParticipantReport {
    std::string participant_id;
    std::map<Assessment, CorrelationResult> measures;
    std::map<Assessment, CorrelationResult> items;
};

// All participants with assessment data, in natural id order; the loop over
// participants runs in parallel under options.exec.
std::vector<ParticipantReport> correlate_all(const StudyDataset& dataset,
                                             const AnalysisOptions& options = {});

struct CohortStats {
    int n = 0;
    double mean = 0.0;
    std::optional<double> sd;  // sample SD, missing when n == 1
    double min = 0.0;
    double max = 0.0;
};

// Descriptives for one visit (1-based index) across the cohort, keyed by
// measure name; participants missing that visit or that cell are skipped.
std::map<std::string, CohortStats> cohort_summary(const StudyDataset& dataset, int visit_index);

// Numeric-aware id ordering: "2" before "10", non-numeric ids lexicographic.
bool natural_less(const std::string& a, const std::string& b);

}  // namespace mcorr
