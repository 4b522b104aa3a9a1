#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "psc/binary_vector.hpp"
#include "psc/finite_field.hpp"
#include "psc/rank_metric.hpp"
#include "psc/subspace_code.hpp"

namespace psc {

/// Constant-weight binary code used as the skeleton of a multilevel code.
struct SkeletonCode {
    std::size_t length = 0;
    std::size_t weight = 0;
    std::size_t min_distance = 0;  // the distance every pair is required to meet
    std::vector<BinaryVector> words;

    /// Throws std::invalid_argument if a word has the wrong length or weight
    /// or two words are closer than min_distance.
    void validate() const;
};

/// Greedy lexicode: scans all weight-k words of length n from 1^k 0^(n-k)
/// downwards in lexicographic order and keeps each word at Hamming distance
/// >= d from everything kept so far. d must be even and >= 2.
SkeletonCode lexicode_skeleton(std::size_t n, std::size_t k, std::size_t d);

inline constexpr std::uint64_t default_search_seed = 0x5eedf00dull;

/**
 * Replaces the pinned Gabidulin subcode of each fiber by the best one found
 * among `trials` random rank-equivalent copies X -> A X B of the Gabidulin
 * code (trial 0 is the pinned code itself). A candidate must keep the pinned
 * dimension; among those, the one lifting to the most subspaces accepted by
 * `accept` wins, ties going to the earliest trial. Fiber i draws from
 * mt19937_64(seed + i), so results are reproducible.
 */
struct FiberPreference {
    std::function<bool(const Subspace&)> accept;
    /// Optional equivalent of `accept` on bit-packed RREF rows; used instead of
    /// it for binary codes with n <= 64.
    std::function<bool(std::span<const gf2::Row>)> accept_packed;
    std::size_t trials = 1024;
    std::uint64_t seed = default_search_seed;
};

struct ConstructOptions {
    std::optional<SkeletonCode> skeleton;  // default: lexicode_skeleton(n, k, 2 delta)
    std::optional<FiberPreference> preference;
};

/// One fiber: the rank-metric code chosen for v and its lifted codewords in
/// lexicographic order of their generators.
struct Fiber {
    LinearMatrixCode rank_code;
    std::vector<Subspace> words;
    FiberInfo info;
};

Fiber build_fiber(const Field& field, const IdentifyingVector& v, std::size_t delta,
                  const MatrixEquivalence* equivalence = nullptr);

/// Union over the skeleton of {EF(v[c]) : c in C_v}, where C_v is the Ferrers
/// subcode with minimum rank distance delta. Codewords follow skeleton order,
/// then lexicographic order within a fiber. The returned code claims
/// distance 2 delta and carries one FiberInfo per skeleton word.
/// Throws std::invalid_argument when the skeleton does not match (n, k, 2 delta).
SubspaceCode construct_code(const Field& field, std::size_t n, std::size_t k, std::size_t delta,
                            const ConstructOptions& options = {});

}  // namespace psc
