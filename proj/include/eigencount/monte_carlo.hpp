#pragma once

#include <cstdint>
#include <vector>

#include "eigencount/closed_form.hpp"
#include "eigencount/rng.hpp"

namespace eigencount {

/// Accumulated spectral statistics of sampled matrices with independent
/// uniform [-1, 1] entries. All counters are exact integers, so merged chunk
/// results are identical no matter how the sampling was parallelized.
struct EmpiricalSummary {
    std::int64_t samples = 0;
    int bins = 0;
    std::vector<std::int64_t> bin_counts;  // eigenvalues per bin, [-2, 2], left-closed
    std::int64_t real_pairs = 0;           // distinct real or repeated pairs
    std::int64_t repeated = 0;             // subset of real_pairs with zero discriminant
    std::int64_t complex_pairs = 0;
    std::int64_t out_of_range = 0;  // eigenvalues outside [-2, 2]; always 0 by the spectral bound
    double min_eigenvalue = 0;
    double max_eigenvalue = 0;

    double real_pair_frequency() const { return static_cast<double>(real_pairs) / samples; }
    double complex_frequency() const { return static_cast<double>(complex_pairs) / samples; }
    double bin_left(int i) const { return -2.0 + 4.0 * i / bins; }
    double bin_right(int i) const { return -2.0 + 4.0 * (i + 1) / bins; }
    /// Mean eigenvalue count per matrix in bin i.
    double bin_mean(int i) const {
        return static_cast<double>(bin_counts[static_cast<std::size_t>(i)]) / samples;
    }

    bool operator==(const EmpiricalSummary&) const = default;
};

/// Samples n matrices and classifies their spectra. Work is split into fixed
/// 65536-sample chunks, each driven by its own substream, so the result is
/// bit-identical for a given (n, bins, seed) regardless of `workers` (0 picks
/// the hardware concurrency).
EmpiricalSummary run_experiment(std::int64_t n, int bins, SeedSpec seed, int workers = 0);

struct DensityComparison {
    double sup_deviation;  // sup over bins |empirical mass - integral of the density|
    double chi_square;     // sum (observed - expected)^2 / expected over bins
};

/// Compares the eigenvalue histogram against the binned closed-form density.
/// kind = W uses per-matrix masses; kind = UR conditions on real pairs.
DensityComparison compare_to_density(const EmpiricalSummary& summary, DensityKind kind);

/// Kolmogorov-Smirnov distance between the empirical CDF of n sampled
/// products BC (B, C independent uniform on [-1, 1]) and f_bc.
double product_experiment(std::int64_t n, SeedSpec seed);

}  // namespace eigencount
