#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "torlink/isotropic.hpp"
#include "torlink/tripleform.hpp"

namespace torlink {

struct LinkingForm;

/// Packed (Z/3)^20 vector: bit i of `lo` set iff trit i equals 1, bit i of
/// `hi` iff it equals 2. Dot products reduce to popcounts.
struct TritVec20 {
    uint32_t lo = 0;
    uint32_t hi = 0;
};

TritVec20 pack_trits(const std::array<uint8_t, kNumColumnTriples>& trits);

/// <d, v> mod 3 via the bit planes; exactly equal to the naive dot product.
int dot20_packed(TritVec20 d, TritVec20 v);

/// Precomputed census for the obstruction search: Lagrangian list, their
/// determinant vectors (index-aligned, packed and raw), and the sorted
/// unordered dual-pair index list.
struct SearchContext {
    std::vector<Subspace> lagrangians;
    std::vector<DeterminantVector> det_vectors;
    std::vector<TritVec20> packed;
    std::vector<std::pair<uint32_t, uint32_t>> dual_pairs;

    static SearchContext build(const LinkingForm& form);

    /// Synthetic context from raw determinant vectors; for tests and
    /// planted-rank experiments. Lagrangian list stays empty.
    static SearchContext from_det_vectors(
        std::vector<DeterminantVector> vectors,
        std::vector<std::pair<uint32_t, uint32_t>> pairs = {});
};

struct SearchReport {
    bool obstructed = false;
    std::optional<std::pair<uint32_t, uint32_t>> failing_pair;
    uint64_t pairs_checked = 0;
    double wall_seconds = 0.0;
};

/// True iff every dual pair has a member with nonzero pairing against v.
/// On failure reports the first failing pair in the canonical sorted order.
SearchReport is_obstructed(const ObstructionVector& v, const SearchContext& ctx);

enum class VanishingMode { rank_reduced, exhaustive };

struct UniversalVanishingReport {
    bool holds = false;
    int rank = 0;  // rank over F_3 of the det-vector matrix
    uint64_t vectors_tested = 0;
    double wall_seconds = 0.0;
};

/// Checks that every v in (Z/3)^20 pairs to zero with at least one
/// determinant vector. rank_reduced enumerates 3^rank coset
/// representatives; exhaustive scans all 3^20 vectors.
UniversalVanishingReport verify_universal_vanishing(
    const SearchContext& ctx, VanishingMode mode = VanishingMode::rank_reduced,
    int threads = 1);

enum class ScanStrategy { sequential, random };

/// Collects obstructed vectors within a vector-count budget. Sequential
/// scans base-3 odometer order from zero; random draws i.i.d. vectors from
/// a fixed-seed generator. Deterministic for fixed strategy and seed.
std::vector<ObstructionVector> scan_obstructed(const SearchContext& ctx,
                                               uint64_t budget,
                                               ScanStrategy strategy,
                                               uint64_t seed = 0);

}  // namespace torlink
