#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mcorr/exec.hpp"
#include "mcorr/types.hpp"

namespace mcorr {

// Ascending mid-ranks: tied values share the mean of the integer ranks they
// span. Ranks always sum to n(n+1)/2.
std::vector<double> assign_ranks(std::span<const double> values);

// Spearman's rho as the Pearson correlation of the two mid-rank vectors.
// A constant input series has zero rank variance and yields a
// not-computable result with reason "constant series".
CorrelationResult spearman_rho(std::span<const double> x, std::span<const double> y);

// Two-sided p for rho under t = rho*sqrt((n-2)/(1-rho^2)) with n-2 degrees
// of freedom. |rho| = 1 maps to p = 0. Requires n >= 4.
double p_value_t_approx(double rho, int n);

struct PermutationPlan {
    enum class Mode { exact, monte_carlo };
    Mode mode = Mode::monte_carlo;
    int samples = 100000;          // monte_carlo only
    std::uint64_t seed = 0;        // monte_carlo only
    Exec exec = Exec::parallel;    // monte_carlo only; exact enumeration is serial
};

// Fraction of permutations of y whose |rho| is at least the observed |rho|.
// Exact mode enumerates all n! permutations (n <= 8); monte-carlo draws
// `samples` seeded permutations and is deterministic for a given seed and
// any thread count. Returns nullopt when rho itself is not computable.
std::optional<double> p_value_permutation(std::span<const double> x, std::span<const double> y,
                                          const PermutationPlan& plan);

// Cohen bands on |rho|: <0.1 negligible, [0.1,0.3) small, [0.3,0.5)
// moderate, >=0.5 large. Boundaries belong to the upper class.
Effect classify_effect(double rho);

// Strict p < 0.001.
bool is_significant(double p);

// Full result: rho, t-approximated p, effect class, significance flag.
// Pair counts below 4 are reported not computable ("insufficient pairs");
// the t statistic needs at least 2 degrees of freedom.
CorrelationResult correlate(std::span<const double> x, std::span<const double> y);

}  // namespace mcorr
