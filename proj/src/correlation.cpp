#include "mcorr/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

#include "mcorr/rng.hpp"

namespace mcorr {

namespace {

// Equality margin when comparing permuted |rho| against the observed value;
// rank statistics are rational and must not drop ties to rounding.
constexpr double kRhoTieEps = 1e-12;

struct CenteredRanks {
    std::vector<double> centered;
    double norm = 0.0;  // sqrt of sum of squared deviations
};

CenteredRanks center(const std::vector<double>& ranks) {
    CenteredRanks out;
    double mean = std::accumulate(ranks.begin(), ranks.end(), 0.0) / ranks.size();
    out.centered.reserve(ranks.size());
    double ss = 0.0;
    for (double r : ranks) {
        double c = r - mean;
        out.centered.push_back(c);
        ss += c * c;
    }
    out.norm = std::sqrt(ss);
    return out;
}

double rho_from_dot(double dot, double norm_x, double norm_y) {
    double rho = dot / (norm_x * norm_y);
    return std::clamp(rho, -1.0, 1.0);
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

std::vector<double> assign_ranks(std::span<const double> values) {
    if (values.empty()) throw std::invalid_argument("assign_ranks: empty input");
    const size_t n = values.size();
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t a, size_t b) { return values[a] < values[b]; });

    std::vector<double> ranks(n);
    size_t i = 0;
    while (i < n) {
        size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        // positions i..j (0-based) hold integer ranks i+1..j+1
        double mid = static_cast<double>(i + j) / 2.0 + 1.0;
        for (size_t k = i; k <= j; ++k) ranks[order[k]] = mid;
        i = j + 1;
    }
    return ranks;
}

CorrelationResult spearman_rho(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman_rho: length mismatch");
    const int n = static_cast<int>(x.size());
    if (n < 3) throw std::invalid_argument("spearman_rho: need n >= 3");

    CenteredRanks rx = center(assign_ranks(x));
    CenteredRanks ry = center(assign_ranks(y));
    if (rx.norm == 0.0 || ry.norm == 0.0)
        return CorrelationResult::not_computable("constant series", n);

    double dot = 0.0;
    for (int i = 0; i < n; ++i) dot += rx.centered[i] * ry.centered[i];

    CorrelationResult result;
    result.rho = rho_from_dot(dot, rx.norm, ry.norm);
    result.n_pairs = n;
    return result;
}

double p_value_t_approx(double rho, int n) {
    if (n < 4) throw std::invalid_argument("insufficient sample (need n >= 4)");
    if (std::abs(rho) > 1.0 + 1e-12) throw std::invalid_argument("|rho| must be <= 1");
    rho = std::clamp(rho, -1.0, 1.0);
    double denom = 1.0 - rho * rho;
    if (denom <= 0.0) return 0.0;

    double dof = n - 2;
    double t = rho * std::sqrt(dof / denom);
    boost::math::students_t_distribution<double> dist(dof);
    return 2.0 * boost::math::cdf(dist, -std::abs(t));
}

std::optional<double> p_value_permutation(std::span<const double> x, std::span<const double> y,
                                          const PermutationPlan& plan) {
    CorrelationResult observed = spearman_rho(x, y);
    if (!observed.computable()) return std::nullopt;
    const double threshold = std::abs(*observed.rho) - kRhoTieEps;
    const int n = static_cast<int>(x.size());

    CenteredRanks rx = center(assign_ranks(x));
    CenteredRanks ry = center(assign_ranks(y));

    auto exceeds = [&](const std::vector<double>& permuted_cy) {
        double dot = 0.0;
        for (int i = 0; i < n; ++i) dot += rx.centered[i] * permuted_cy[i];
        return std::abs(rho_from_dot(dot, rx.norm, ry.norm)) >= threshold;
    };

    if (plan.mode == PermutationPlan::Mode::exact) {
        if (n > 8) throw std::invalid_argument("use monte-carlo (exact mode is limited to n <= 8)");
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::sort(perm.begin(), perm.end());
        std::int64_t hits = 0;
        std::vector<double> cy(n);
        do {
            for (int i = 0; i < n; ++i) cy[i] = ry.centered[perm[i]];
            if (exceeds(cy)) ++hits;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return static_cast<double>(hits) / static_cast<double>(factorial(n));
    }

    if (plan.samples <= 0) throw std::invalid_argument("monte-carlo needs samples > 0");

    // One derived rng per sample: the hit count is an order-independent
    // integer sum, so thread count cannot change the result.
    std::int64_t hits = 0;
    const int samples = plan.samples;
#pragma omp parallel for schedule(static) reduction(+ : hits) if (plan.exec == Exec::parallel)
    for (int s = 0; s < samples; ++s) {
        SplitMix64 rng(mix_seed(plan.seed, static_cast<std::uint64_t>(s)));
        std::vector<double> cy(ry.centered);
        shuffle(cy.data(), cy.size(), rng);
        if (exceeds(cy)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(samples);
}

Effect classify_effect(double rho) {
    double a = std::abs(rho);
    if (a > 1.0 + 1e-12) throw std::invalid_argument("|rho| must be <= 1");
    if (a < 0.1) return Effect::negligible;
    if (a < 0.3) return Effect::small;
    if (a < 0.5) return Effect::moderate;
    return Effect::large;
}

bool is_significant(double p) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
    return p < 0.001;
}

CorrelationResult correlate(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("correlate: length mismatch");
    if (x.size() < 4)
        return CorrelationResult::not_computable("insufficient pairs",
                                                 static_cast<int>(x.size()));
    CorrelationResult r = spearman_rho(x, y);
    if (!r.computable()) return r;
    r.p_value = p_value_t_approx(*r.rho, r.n_pairs);
    r.effect = classify_effect(*r.rho);
    r.significant = is_significant(*r.p_value);
    return r;
}

}  // namespace mcorr
