#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <unordered_set>
#include <vector>

#include "psc/binary_vector.hpp"
#include "psc/finite_field.hpp"
#include "psc/subspace.hpp"

namespace psc {

/// How one skeleton vector contributed to a multilevel code.
struct FiberInfo {
    IdentifyingVector v;
    std::size_t dimension = 0;  // q-ary dimension of the rank-metric code
    std::size_t bound = 0;      // dimension_bound for that diagram
    std::size_t size = 0;       // codewords contributed
    std::size_t trial = 0;      // 0 = pinned Gabidulin subcode, else index of the equivalence used
    std::size_t preferred = 0;  // codewords accepted by the preference predicate, when one was given

    bool attains_bound() const { return dimension == bound; }
};

/**
 * A set of subspaces of F_q^n kept in insertion order. add() drops
 * duplicates by canonical generator.
 */
class SubspaceCode {
public:
    SubspaceCode(Field field, std::size_t ambient, std::size_t claimed_distance = 0);

    const Field& field() const { return field_; }
    std::size_t ambient() const { return ambient_; }
    std::size_t claimed_distance() const { return claimed_distance_; }
    void set_claimed_distance(std::size_t d) { claimed_distance_ = d; }

    /// Returns false if the subspace was already present. Throws
    /// std::invalid_argument for a foreign field or ambient dimension.
    bool add(Subspace s);
    bool contains(const Subspace& s) const { return index_.count(s) != 0; }

    const std::vector<Subspace>& words() const { return words_; }
    std::size_t size() const { return words_.size(); }
    bool empty() const { return words_.empty(); }

    /// Common dimension, or nullopt for an empty or mixed-dimension code.
    std::optional<std::size_t> constant_dimension() const;
    /// Number of codewords per dimension.
    std::map<std::size_t, std::size_t> dimension_profile() const;

    const std::vector<FiberInfo>& fibers() const { return fibers_; }
    void set_fibers(std::vector<FiberInfo> fibers) { fibers_ = std::move(fibers); }

private:
    Field field_;
    std::size_t ambient_;
    std::size_t claimed_distance_;
    std::vector<Subspace> words_;
    std::unordered_set<Subspace> index_;
    std::vector<FiberInfo> fibers_;
};

}  // namespace psc
