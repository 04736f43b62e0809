#include "torlink/search.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <random>
#include <stdexcept>
#include <thread>

#include "torlink/linking.hpp"

namespace torlink {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// Trit planes over an arbitrary coordinate count (one trit per Lagrangian).
struct TritPlane {
    std::vector<uint64_t> lo, hi;

    explicit TritPlane(size_t words = 0) : lo(words, 0), hi(words, 0) {}

    void add(const TritPlane& other) {  // elementwise mod-3 addition
        for (size_t w = 0; w < lo.size(); ++w) {
            uint64_t alo = lo[w], ahi = hi[w], blo = other.lo[w], bhi = other.hi[w];
            uint64_t a0 = ~(alo | ahi), b0 = ~(blo | bhi);
            lo[w] = (alo & b0) | (a0 & blo) | (ahi & bhi);
            hi[w] = (ahi & b0) | (a0 & bhi) | (alo & blo);
        }
    }

    bool has_zero(const std::vector<uint64_t>& mask) const {
        for (size_t w = 0; w < lo.size(); ++w)
            if (~(lo[w] | hi[w]) & mask[w]) return true;
        return false;
    }
};

uint64_t pow3(int e) {
    uint64_t r = 1;
    while (e-- > 0) r *= 3;
    return r;
}

// Enumerates the 3^r sums of the basis patterns (base-3 odometer, digit 0
// fastest) and reports whether every sum has a zero coordinate. Work is
// split into contiguous index chunks claimed by worker threads; a found
// escape vector stops the scan.
bool scan_all_patterns(const std::vector<TritPlane>& basis, size_t num_coords,
                       int threads, uint64_t& vectors_tested) {
    const size_t words = (num_coords + 63) / 64;
    std::vector<uint64_t> mask(words, ~uint64_t(0));
    if (num_coords % 64 != 0)
        mask.back() = (uint64_t(1) << (num_coords % 64)) - 1;

    const int r = static_cast<int>(basis.size());
    const uint64_t total = pow3(r);
    const uint64_t chunk_size =
        std::max<uint64_t>(1, total / (static_cast<uint64_t>(threads) * 16));
    const uint64_t num_chunks = (total + chunk_size - 1) / chunk_size;

    std::atomic<uint64_t> next_chunk{0};
    std::atomic<uint64_t> tested{0};
    std::atomic<bool> escape_found{false};

    auto worker = [&] {
        uint64_t local_tested = 0;
        for (;;) {
            if (escape_found.load(std::memory_order_relaxed)) break;
            uint64_t c = next_chunk.fetch_add(1, std::memory_order_relaxed);
            if (c >= num_chunks) break;
            uint64_t begin = c * chunk_size;
            uint64_t end = std::min(total, begin + chunk_size);

            // Decode chunk start into digits and the corresponding pattern.
            std::vector<int> digits(r, 0);
            TritPlane current(words);
            uint64_t rem = begin;
            for (int i = 0; i < r; ++i) {
                digits[i] = static_cast<int>(rem % 3);
                rem /= 3;
                for (int rep = 0; rep < digits[i]; ++rep) current.add(basis[i]);
            }

            for (uint64_t idx = begin; idx < end; ++idx) {
                ++local_tested;
                if (!current.has_zero(mask)) {
                    escape_found.store(true, std::memory_order_relaxed);
                    break;
                }
                // Odometer step; each digit increment adds its basis pattern
                // (a 2 -> 0 wrap is also a +1 mod 3).
                int pos = 0;
                while (pos < r && digits[pos] == 2) {
                    digits[pos] = 0;
                    current.add(basis[pos]);
                    ++pos;
                }
                if (pos == r) break;
                ++digits[pos];
                current.add(basis[pos]);
            }
        }
        tested.fetch_add(local_tested, std::memory_order_relaxed);
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    vectors_tested = tested.load();
    return !escape_found.load();
}

// Pattern of pairings (<d_L, e_coord>)_L for one coordinate.
TritPlane coordinate_pattern(const std::vector<DeterminantVector>& dets,
                             int coord, size_t words) {
    TritPlane plane(words);
    for (size_t l = 0; l < dets.size(); ++l) {
        uint8_t trit = dets[l][coord];
        if (trit == 1) plane.lo[l / 64] |= uint64_t(1) << (l % 64);
        else if (trit == 2) plane.hi[l / 64] |= uint64_t(1) << (l % 64);
    }
    return plane;
}

}  // namespace

TritVec20 pack_trits(const std::array<uint8_t, kNumColumnTriples>& trits) {
    TritVec20 v;
    for (int i = 0; i < kNumColumnTriples; ++i) {
        if (trits[i] == 1) v.lo |= uint32_t(1) << i;
        else if (trits[i] == 2) v.hi |= uint32_t(1) << i;
    }
    return v;
}

int dot20_packed(TritVec20 d, TritVec20 v) {
    // product trit is 1 on (1,1) and (2,2), and 2 on (1,2) and (2,1)
    int ones = std::popcount(d.lo & v.lo) + std::popcount(d.hi & v.hi);
    int twos = std::popcount(d.lo & v.hi) + std::popcount(d.hi & v.lo);
    return (ones + 2 * twos) % 3;
}

SearchContext SearchContext::build(const LinkingForm& form) {
    Int prime;
    if (!form.group.is_elementary_abelian(&prime) || prime != 3 ||
        form.group.rank() != 6)
        throw std::invalid_argument(
            "SearchContext: form must live on (Z/3)^6 (determinant vectors are "
            "defined for 3-planes in F_3^6)");

    SearchContext ctx;
    ctx.lagrangians = enumerate_lagrangians(form);
    ctx.det_vectors.reserve(ctx.lagrangians.size());
    ctx.packed.reserve(ctx.lagrangians.size());
    for (const Subspace& l : ctx.lagrangians) {
        DeterminantVector d = determinant_vector(l);
        ctx.packed.push_back(pack_trits(d));
        ctx.det_vectors.push_back(d);
    }
    for (auto [i, j] : dual_pair_indices(ctx.lagrangians))
        ctx.dual_pairs.emplace_back(static_cast<uint32_t>(i),
                                    static_cast<uint32_t>(j));
    return ctx;
}

SearchContext SearchContext::from_det_vectors(
    std::vector<DeterminantVector> vectors,
    std::vector<std::pair<uint32_t, uint32_t>> pairs) {
    SearchContext ctx;
    ctx.det_vectors = std::move(vectors);
    for (const DeterminantVector& d : ctx.det_vectors)
        ctx.packed.push_back(pack_trits(d));
    ctx.dual_pairs = std::move(pairs);
    std::sort(ctx.dual_pairs.begin(), ctx.dual_pairs.end());
    return ctx;
}

SearchReport is_obstructed(const ObstructionVector& v, const SearchContext& ctx) {
    const auto start = Clock::now();
    const TritVec20 pv = pack_trits(v.entries);
    SearchReport report;
    report.obstructed = true;
    for (const auto& [a, b] : ctx.dual_pairs) {
        ++report.pairs_checked;
        if (dot20_packed(ctx.packed[a], pv) == 0 &&
            dot20_packed(ctx.packed[b], pv) == 0) {
            report.obstructed = false;
            report.failing_pair = {a, b};
            break;
        }
    }
    report.wall_seconds = seconds_since(start);
    return report;
}

UniversalVanishingReport verify_universal_vanishing(const SearchContext& ctx,
                                                    VanishingMode mode,
                                                    int threads) {
    const auto start = Clock::now();
    if (threads < 1) threads = 1;
    const size_t num_coords = ctx.det_vectors.size();
    const size_t words = std::max<size_t>(1, (num_coords + 63) / 64);

    UniversalVanishingReport report;

    // Rank of the (num_coords x 20) determinant-vector matrix over F_3.
    FpMatrix mat(num_coords, kNumColumnTriples);
    for (size_t l = 0; l < num_coords; ++l)
        for (int c = 0; c < kNumColumnTriples; ++c)
            mat(static_cast<Eigen::Index>(l), c) = ctx.det_vectors[l][c];
    report.rank = fp_rank(mat, 3);

    std::vector<TritPlane> basis;
    if (mode == VanishingMode::exhaustive) {
        for (int c = 0; c < kNumColumnTriples; ++c)
            basis.push_back(coordinate_pattern(ctx.det_vectors, c, words));
    } else {
        // Greedily pick coordinates whose pairing patterns are independent;
        // the pairing of any v factors through their span, so 3^rank coset
        // representatives cover every pattern.
        FpMatrix picked(num_coords, 0);
        for (int c = 0; c < kNumColumnTriples && picked.cols() < report.rank; ++c) {
            FpMatrix trial(num_coords, picked.cols() + 1);
            trial.leftCols(picked.cols()) = picked;
            for (size_t l = 0; l < num_coords; ++l)
                trial(static_cast<Eigen::Index>(l), picked.cols()) =
                    ctx.det_vectors[l][c];
            if (fp_rank(trial, 3) == trial.cols()) {
                picked = trial;
                basis.push_back(coordinate_pattern(ctx.det_vectors, c, words));
            }
        }
    }

    report.holds =
        num_coords == 0
            ? true
            : scan_all_patterns(basis, num_coords, threads, report.vectors_tested);
    if (num_coords == 0) report.vectors_tested = 1;
    report.wall_seconds = seconds_since(start);
    return report;
}

std::vector<ObstructionVector> scan_obstructed(const SearchContext& ctx,
                                               uint64_t budget,
                                               ScanStrategy strategy,
                                               uint64_t seed) {
    std::vector<ObstructionVector> found;
    auto quick_obstructed = [&](const TritVec20& pv) {
        for (const auto& [a, b] : ctx.dual_pairs)
            if (dot20_packed(ctx.packed[a], pv) == 0 &&
                dot20_packed(ctx.packed[b], pv) == 0)
                return false;
        return true;
    };

    if (strategy == ScanStrategy::sequential) {
        ObstructionVector v;  // zero
        const uint64_t total = pow3(kNumColumnTriples);
        for (uint64_t idx = 0; idx < budget && idx < total; ++idx) {
            if (quick_obstructed(pack_trits(v.entries))) found.push_back(v);
            int pos = 0;
            while (pos < kNumColumnTriples && v.entries[pos] == 2)
                v.entries[pos++] = 0;
            if (pos == kNumColumnTriples) break;
            ++v.entries[pos];
        }
    } else {
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> trit(0, 2);
        for (uint64_t n = 0; n < budget; ++n) {
            ObstructionVector v;
            for (auto& e : v.entries) e = static_cast<uint8_t>(trit(rng));
            if (quick_obstructed(pack_trits(v.entries))) found.push_back(v);
        }
    }
    return found;
}

}  // namespace torlink
