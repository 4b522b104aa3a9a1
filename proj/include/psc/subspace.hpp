#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "psc/binary_vector.hpp"
#include "psc/finite_field.hpp"
#include "psc/gf_matrix.hpp"

namespace psc {

/**
 * Subspace of F_q^n held as its reduced row echelon generator with no zero
 * rows. Two Subspaces are equal iff their generators are identical, so the
 * generator doubles as the canonical key for deduplication.
 *
 * Binary subspaces with n <= 64 also cache bit-packed rows; the distance
 * computation runs on those.
 */
class Subspace {
public:
    using Value = Field::Value;

    /// Row span of `rows`; dependent and zero rows are dropped.
    /// Throws std::invalid_argument on rows of the wrong length.
    static Subspace from_rows(const Field& field, std::size_t n, const std::vector<std::vector<Value>>& rows);
    static Subspace from_matrix(const GFMatrix& m);
    static Subspace zero(const Field& field, std::size_t n);
    static Subspace full(const Field& field, std::size_t n);

    const Field& field() const { return generator_.field(); }
    std::size_t ambient() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const GFMatrix& generator() const { return generator_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool has_packed_rows() const { return packed_ok_; }
    std::span<const gf2::Row> packed_rows() const { return packed_; }

    bool contains(std::span<const Value> x) const;
    bool contains(const Subspace& other) const;

    /// Row-major lexicographic comparison of generator entries; a generator
    /// that is a strict prefix of another sorts first.
    friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Subspace(GFMatrix generator, std::vector<std::size_t> pivots);

    GFMatrix generator_;
    std::vector<std::size_t> pivots_;
    std::vector<gf2::Row> packed_;
    bool packed_ok_ = false;
};

/// dim U + dim V - 2 dim(U ∩ V), evaluated as 2 rank[U; V] - dim U - dim V.
/// Throws std::invalid_argument for different fields or ambient dimensions.
std::size_t subspace_distance(const Subspace& u, const Subspace& v);

/// Basis of U ∩ V from the kernel of [gen U; gen V]^T.
Subspace intersection(const Subspace& u, const Subspace& v);

/// Ones exactly at the pivot columns of the canonical generator.
IdentifyingVector identifying_vector(const Subspace& u);

/// Brute-force list of G_q(n,k): every k x n matrix is canonicalized and
/// deduplicated. Throws std::length_error when q^(nk) exceeds 2^24.
std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t n, std::size_t k);

/// Number of k-dimensional subspaces of F_q^n. Throws std::invalid_argument
/// for k > n and std::overflow_error if the count exceeds 64 bits.
std::uint64_t gaussian_coefficient(unsigned n, unsigned k, std::uint64_t q);

}  // namespace psc

template <>
struct std::hash<psc::Subspace> {
    std::size_t operator()(const psc::Subspace& s) const noexcept;
};
