#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "psc/ferrers.hpp"
#include "psc/finite_field.hpp"
#include "psc/gf_matrix.hpp"

namespace psc {

/// rank(X - Y). Throws std::invalid_argument on shape or field mismatch.
std::size_t rank_distance(const GFMatrix& x, const GFMatrix& y);

/**
 * Linear code of rows x cols matrices over GF(q), given by a basis.
 *
 * Codeword `index` is the combination whose coefficient vector is the base-q
 * expansion of index, with basis()[0] carrying the most significant digit.
 */
class LinearMatrixCode {
public:
    /// Throws std::invalid_argument if a basis matrix has the wrong shape or
    /// field, the basis is dependent, or a basis matrix leaves the support.
    LinearMatrixCode(Field field, std::size_t rows, std::size_t cols, std::vector<GFMatrix> basis,
                     std::size_t designed_distance, std::optional<FerrersDiagram> support = std::nullopt,
                     std::optional<std::size_t> dimension_bound = std::nullopt);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t dimension() const { return basis_.size(); }
    const std::vector<GFMatrix>& basis() const { return basis_; }
    std::size_t designed_distance() const { return designed_distance_; }
    const std::optional<FerrersDiagram>& support() const { return support_; }

    /// Upper bound recorded for Ferrers codes; empty for plain MRD codes.
    const std::optional<std::size_t>& dimension_bound() const { return bound_; }
    bool attains_bound() const { return bound_ && *bound_ == dimension(); }

    /// q^dimension; throws std::overflow_error past 2^63.
    std::uint64_t size() const;
    GFMatrix codeword(std::uint64_t index) const;
    std::vector<GFMatrix> codewords() const;

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<GFMatrix> basis_;
    std::size_t designed_distance_;
    std::optional<FerrersDiagram> support_;
    std::optional<std::size_t> bound_;
};

/// Gabidulin code in GF(q)^{m x t} with minimum rank distance delta.
///
/// Symbols live in GF(q^M), M = max(m, t), expanded to columns in the
/// polynomial basis. Codewords evaluate the q-linearized polynomials
/// sum_{i < L-delta+1} a_i x^{q^i} at 1, a, ..., a^{L-1} (a = x mod the
/// default modulus, L = min(m, t)); the M x L result is transposed when m < t.
/// The basis runs over i, then over a_i = a^b, b < M.
/// Requires a prime field; throws std::invalid_argument for delta outside
/// [1, min(m, t)].
LinearMatrixCode gabidulin(const Field& field, std::size_t m, std::size_t t, std::size_t delta);

/// Rank-preserving map X -> left * X * right with both factors invertible.
struct MatrixEquivalence {
    GFMatrix left;
    GFMatrix right;

    GFMatrix apply(const GFMatrix& x) const { return left * x * right; }
};

MatrixEquivalence random_equivalence(const Field& field, std::size_t m, std::size_t t, std::mt19937_64& rng);

/**
 * Largest subcode of a Gabidulin code that vanishes off the Ferrers diagram S.
 *
 * The Gabidulin code is built on S's m' x t bounding box (optionally moved by
 * `equivalence`, which must be m' x m' and t x t), and the subcode is the
 * kernel of the map sending a coefficient vector to the codeword's entries at
 * the non-dot cells. Codewords are returned in S's full k x t shape. The
 * result records dimension_bound(S, delta); a code that falls short of it is
 * still returned.
 */
LinearMatrixCode ferrers_code(const FerrersDiagram& s, std::size_t delta, const Field& field,
                              const MatrixEquivalence* equivalence = nullptr);

/// Minimum rank over nonzero codewords, or nullopt for the zero code.
/// Throws std::length_error when q^dimension exceeds 2^20.
std::optional<std::size_t> min_rank_distance(const LinearMatrixCode& code);

}  // namespace psc
