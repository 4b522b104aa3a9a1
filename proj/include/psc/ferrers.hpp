#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "psc/binary_vector.hpp"
#include "psc/gf_matrix.hpp"
#include "psc/subspace.hpp"

namespace psc {

enum class EchelonEntry : std::uint8_t { zero, one, dot };

/**
 * Pattern of all k x n RREF matrices whose pivots sit on the support of v.
 * Entry (i, j) is a dot iff column j is not a pivot column and lies right of
 * row i's pivot.
 */
class EchelonFerrersForm {
public:
    /// Throws std::invalid_argument for the zero vector.
    explicit EchelonFerrersForm(IdentifyingVector v);

    const IdentifyingVector& vector() const { return v_; }
    std::size_t rows() const { return pivots_.size(); }
    std::size_t cols() const { return v_.size(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }
    EchelonEntry at(std::size_t i, std::size_t j) const { return cells_[i * cols() + j]; }
    std::size_t dots() const { return dots_; }

    /// One line per row, entries separated by spaces, dots drawn as `dot`.
    std::string render(const std::string& dot = "•") const;

private:
    IdentifyingVector v_;
    std::vector<std::size_t> pivots_;
    std::vector<EchelonEntry> cells_;
    std::size_t dots_ = 0;
};

EchelonFerrersForm echelon_ferrers_form(const IdentifyingVector& v);

/**
 * The dot sub-matrix S of EF(v): all k rows, restricted to the columns of
 * EF(v) that hold at least one dot. Dots in each row form a suffix and dot
 * counts never increase going down.
 */
class FerrersDiagram {
public:
    explicit FerrersDiagram(const EchelonFerrersForm& form);

    const IdentifyingVector& vector() const { return v_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return columns_.size(); }
    /// Ambient (0-based) column index of each column of S.
    const std::vector<std::size_t>& columns() const { return columns_; }
    bool is_dot(std::size_t i, std::size_t j) const { return mask_[i * cols() + j] != 0; }
    std::size_t dots() const { return dots_; }
    std::size_t row_dots(std::size_t i) const;
    std::size_t col_dots(std::size_t j) const;

    /// Rows that contain a dot (always a top prefix of S).
    std::size_t box_rows() const { return box_rows_; }
    /// Columns that contain a dot.
    std::size_t box_cols() const { return box_cols_; }

    /// Dots drawn as `dot`, other cells left blank.
    std::string render(const std::string& dot = "•") const;

private:
    IdentifyingVector v_;
    std::size_t rows_ = 0;
    std::vector<std::size_t> columns_;
    std::vector<std::uint8_t> mask_;
    std::size_t dots_ = 0;
    std::size_t box_rows_ = 0;
    std::size_t box_cols_ = 0;
};

FerrersDiagram diagram_of(const IdentifyingVector& v);

/// Upper bound on the dimension of a linear rank-metric code with minimum
/// distance delta supported on S: the smaller of the dot count in the last
/// m - delta + 1 rows and in the first t - delta + 1 columns of the m x t
/// bounding box. A window of non-positive size gives 0.
/// Throws std::invalid_argument for delta < 1.
std::size_t dimension_bound(const FerrersDiagram& s, std::size_t delta);

/// Subspace spanned by EF(v[M]). M must have the shape of S and vanish off the
/// dots; throws std::invalid_argument otherwise.
Subspace lift(const IdentifyingVector& v, const GFMatrix& m);
Subspace lift(const FerrersDiagram& s, const GFMatrix& m);

/// The S-columns of a subspace's generator, i.e. M with U = EF(v[M]).
GFMatrix filling_of(const FerrersDiagram& s, const Subspace& u);

}  // namespace psc
