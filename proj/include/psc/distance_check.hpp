#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psc/subspace_code.hpp"

namespace psc {

struct DistanceReport {
    std::optional<std::size_t> minimum;  // smallest d_S seen
    std::uint64_t pairs = 0;             // pairs evaluated
    bool exhaustive = true;
    bool pass = true;   // minimum >= expected (always true with no expectation)
    bool equal = false; // minimum == expected
};

inline constexpr std::uint64_t max_exhaustive_pairs = 100'000'000;

/// Exact minimum subspace distance over all pairs, split across `workers`
/// threads (0 = hardware concurrency). Throws std::invalid_argument for codes
/// with fewer than two words and std::length_error past max_exhaustive_pairs.
DistanceReport verify_min_distance(const SubspaceCode& code, std::optional<std::size_t> expect,
                                   unsigned workers = 0);

/// Minimum over `samples` uniformly drawn distinct pairs (mt19937_64(seed)).
DistanceReport sample_min_distance(const SubspaceCode& code, std::optional<std::size_t> expect,
                                   std::uint64_t samples, std::uint64_t seed);

struct LemmaReport {
    std::uint64_t pairs = 0;
    std::uint64_t same_fiber_pairs = 0;
    std::uint64_t cross_fiber_pairs = 0;
    std::uint64_t violations = 0;
    std::vector<std::string> examples;  // first few violations, human readable

    bool ok() const { return violations == 0; }
};

/**
 * Checks, on pairs of a constant-dimension lifted code, that
 *   d_S(U, V) >= d_H(v_U, v_V) for different identifying vectors, and
 *   d_S(U, V) == 2 d_R(M_U, M_V) when they share v (M = filling of EF(v)).
 * With `samples` set, checks that many random pairs instead of all of them.
 * Throws std::invalid_argument for a mixed-dimension code.
 */
LemmaReport verify_lifting_distances(const SubspaceCode& code, std::optional<std::uint64_t> samples = std::nullopt,
                                     std::uint64_t seed = 1);

}  // namespace psc
