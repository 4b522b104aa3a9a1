#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "psc/subspace.hpp"
#include "psc/subspace_code.hpp"

namespace psc {

/**
 * An (n-1)-dimensional subspace Q of F_q^n together with a fixed
 * isomorphism Q -> F_q^{n-1}: a vector of Q maps to its entries at the pivot
 * columns of Q's canonical generator. For a coordinate hyperplane this just
 * deletes the dropped coordinate.
 */
class Hyperplane {
public:
    using Value = Field::Value;

    /// Throws std::invalid_argument unless dim Q = ambient - 1.
    explicit Hyperplane(Subspace space);

    /// {x : x_c = 0} for the 1-based coordinate c. Throws std::out_of_range
    /// for c outside [1, n].
    static Hyperplane coordinate(const Field& field, std::size_t n, std::size_t dropped);

    const Subspace& space() const { return space_; }
    std::size_t ambient() const { return space_.ambient(); }

    bool contains(std::span<const Value> x) const { return space_.contains(x); }
    bool contains(const Subspace& u) const { return space_.contains(u); }

    /// Throws std::invalid_argument if x is not in Q.
    std::vector<Value> to_coordinates(std::span<const Value> x) const;
    std::vector<Value> from_coordinates(std::span<const Value> y) const;

    /// Image in F_q^{n-1} of a subspace contained in Q.
    Subspace restrict(const Subspace& inside) const;

private:
    Subspace space_;
};

inline Hyperplane coordinate_hyperplane(const Field& field, std::size_t n, std::size_t dropped) {
    return Hyperplane::coordinate(field, n, dropped);
}

struct PunctureResult {
    SubspaceCode code;           // mixed-dimension code in F_q^{n-1}
    std::size_t contained = 0;   // codewords c with c ⊆ Q
    std::size_t through = 0;     // codewords c with v ∈ c
    std::size_t overlap = 0;     // images that coincided during the union
};

/// C' = {c : c ⊆ Q} ∪ {c ∩ Q : v ∈ c}, both mapped into F_q^{n-1} through Q's
/// isomorphism. The result claims distance (claimed distance of code) - 1.
/// Throws std::invalid_argument if v ∈ Q or the code lives elsewhere, and
/// std::logic_error if some c ∩ Q has unexpected dimension.
PunctureResult puncture(const SubspaceCode& code, const Hyperplane& q, std::span<const Field::Value> v);

/// True for codewords that survive puncture(., q, v), i.e. c ⊆ Q or v ∈ c.
std::function<bool(const Subspace&)> puncture_survivor(const Hyperplane& q, std::vector<Field::Value> v);

/// Same test on a binary subspace given by bit-packed RREF rows (pivot of a
/// row = its lowest set bit). Throws std::invalid_argument unless q = 2 and
/// n <= 64.
std::function<bool(std::span<const gf2::Row>)> packed_puncture_survivor(const Hyperplane& q,
                                                                         std::span<const Field::Value> v);

}  // namespace psc
