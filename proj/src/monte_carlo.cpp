#include "eigencount/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <stdexcept>
#include <thread>

#include "eigencount/matrix2.hpp"

namespace eigencount {
namespace {

constexpr std::int64_t kChunkSize = 1 << 16;

struct ChunkStats {
    std::vector<std::int64_t> bin_counts;
    std::int64_t real_pairs = 0;
    std::int64_t repeated = 0;
    std::int64_t complex_pairs = 0;
    std::int64_t out_of_range = 0;
    double min_eig = std::numeric_limits<double>::infinity();
    double max_eig = -std::numeric_limits<double>::infinity();
};

ChunkStats sample_chunk(std::int64_t count, int bins, SeedSpec seed, std::uint64_t chunk_index) {
    ChunkStats s;
    s.bin_counts.assign(static_cast<std::size_t>(bins), 0);
    SplitMix64 rng(seed, chunk_index);
    const double bin_scale = bins / 4.0;

    const auto record = [&](double eig) {
        if (eig < -2 || eig > 2) {
            ++s.out_of_range;
            return;
        }
        s.min_eig = std::min(s.min_eig, eig);
        s.max_eig = std::max(s.max_eig, eig);
        int idx = static_cast<int>((eig + 2) * bin_scale);
        if (idx >= bins) idx = bins - 1;  // eigenvalues exactly at 2 fall in the last bin
        ++s.bin_counts[static_cast<std::size_t>(idx)];
    };

    for (std::int64_t i = 0; i < count; ++i) {
        RealMatrix2 m;
        m.a = rng.next_symmetric();
        m.b = rng.next_symmetric();
        m.c = rng.next_symmetric();
        m.d = rng.next_symmetric();
        const auto inv = char_invariants(m);
        if (inv.discriminant < 0) {
            ++s.complex_pairs;
            continue;
        }
        ++s.real_pairs;
        if (inv.discriminant == 0) ++s.repeated;  // null event, kept with the real pairs
        const double root = std::sqrt(inv.discriminant);
        record((inv.trace - root) / 2);
        record((inv.trace + root) / 2);
    }
    return s;
}

}  // namespace

EmpiricalSummary run_experiment(std::int64_t n, int bins, SeedSpec seed, int workers) {
    if (n < 1) throw std::invalid_argument("run_experiment: requires n >= 1");
    if (bins < 2) throw std::invalid_argument("run_experiment: requires bins >= 2");
    if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
    if (workers < 1) workers = 1;

    const std::int64_t chunks = (n + kChunkSize - 1) / kChunkSize;
    std::vector<ChunkStats> results(static_cast<std::size_t>(chunks));

    const auto run_range = [&](std::int64_t first, std::int64_t last) {
        for (std::int64_t c = first; c < last; ++c) {
            const std::int64_t count = std::min(kChunkSize, n - c * kChunkSize);
            results[static_cast<std::size_t>(c)] =
                sample_chunk(count, bins, seed, static_cast<std::uint64_t>(c));
        }
    };

    if (workers == 1 || chunks == 1) {
        run_range(0, chunks);
    } else {
        std::vector<std::future<void>> tasks;
        const std::int64_t per = (chunks + workers - 1) / workers;
        for (std::int64_t first = 0; first < chunks; first += per)
            tasks.push_back(std::async(std::launch::async, run_range, first,
                                       std::min(first + per, chunks)));
        for (auto& t : tasks) t.get();
    }

    EmpiricalSummary out;
    out.samples = n;
    out.bins = bins;
    out.bin_counts.assign(static_cast<std::size_t>(bins), 0);
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    out.max_eigenvalue = -std::numeric_limits<double>::infinity();
    for (const auto& s : results) {  // merged in chunk order
        for (int i = 0; i < bins; ++i)
            out.bin_counts[static_cast<std::size_t>(i)] += s.bin_counts[static_cast<std::size_t>(i)];
        out.real_pairs += s.real_pairs;
        out.repeated += s.repeated;
        out.complex_pairs += s.complex_pairs;
        out.out_of_range += s.out_of_range;
        out.min_eigenvalue = std::min(out.min_eigenvalue, s.min_eig);
        out.max_eigenvalue = std::max(out.max_eigenvalue, s.max_eig);
    }
    return out;
}

DensityComparison compare_to_density(const EmpiricalSummary& summary, DensityKind kind) {
    if (kind != DensityKind::W && kind != DensityKind::UR)
        throw std::invalid_argument("compare_to_density: kind must be W or UR");
    if (summary.bins < 2 || summary.bin_counts.size() != static_cast<std::size_t>(summary.bins))
        throw std::invalid_argument("compare_to_density: mismatched bin layout");

    // Denominator for the empirical mass: per matrix for W, per real pair for UR.
    const double denom = kind == DensityKind::W ? static_cast<double>(summary.samples)
                                                : static_cast<double>(summary.real_pairs);
    DensityComparison cmp{0, 0};
    for (int i = 0; i < summary.bins; ++i) {
        const double expected_mass =
            integrate_density(kind, summary.bin_left(i), summary.bin_right(i), 1e-12).value;
        const double counted = static_cast<double>(summary.bin_counts[static_cast<std::size_t>(i)]);
        cmp.sup_deviation = std::max(cmp.sup_deviation, std::abs(counted / denom - expected_mass));
        const double expected_count = denom * expected_mass;
        if (expected_count > 0)
            cmp.chi_square +=
                (counted - expected_count) * (counted - expected_count) / expected_count;
    }
    return cmp;
}

double product_experiment(std::int64_t n, SeedSpec seed) {
    if (n < 1) throw std::invalid_argument("product_experiment: requires n >= 1");
    std::vector<double> products;
    products.reserve(static_cast<std::size_t>(n));
    const std::int64_t chunks = (n + kChunkSize - 1) / kChunkSize;
    for (std::int64_t c = 0; c < chunks; ++c) {
        SplitMix64 rng(seed, static_cast<std::uint64_t>(c));
        const std::int64_t count = std::min(kChunkSize, n - c * kChunkSize);
        for (std::int64_t i = 0; i < count; ++i) {
            const double b = rng.next_symmetric();
            const double cc = rng.next_symmetric();
            products.push_back(b * cc);
        }
    }
    std::sort(products.begin(), products.end());
    double ks = 0;
    const double inv_n = 1.0 / static_cast<double>(n);
    for (std::int64_t i = 0; i < n; ++i) {
        const double ref = f_bc(products[static_cast<std::size_t>(i)]);
        ks = std::max(ks, std::max(ref - i * inv_n, (i + 1) * inv_n - ref));
    }
    return ks;
}

}  // namespace eigencount
