#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "psc/finite_field.hpp"

namespace psc {

/// Dense row-major matrix over a finite field. Entries are raw field values.
class GFMatrix {
public:
    using Value = Field::Value;

    GFMatrix(Field field, std::size_t rows, std::size_t cols);

    static GFMatrix identity(const Field& field, std::size_t n);
    /// Throws std::invalid_argument on ragged rows or out-of-range entries.
    static GFMatrix from_rows(const Field& field, std::size_t cols, const std::vector<std::vector<Value>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    Value at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, Value v) { data_[i * cols_ + j] = v; }
    std::span<const Value> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    std::span<Value> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    const std::vector<Value>& data() const { return data_; }

    GFMatrix transpose() const;
    bool is_zero() const;

    /// Rows as digit strings joined by ';' (e.g. "100;011"); empty for 0 rows.
    std::string to_string() const;

    friend GFMatrix operator+(const GFMatrix& a, const GFMatrix& b);
    friend GFMatrix operator-(const GFMatrix& a, const GFMatrix& b);
    friend GFMatrix operator*(const GFMatrix& a, const GFMatrix& b);
    friend GFMatrix operator*(Value scalar, const GFMatrix& a);
    friend bool operator==(const GFMatrix& a, const GFMatrix& b);

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Value> data_;
};

/// Reduced row echelon form with zero rows removed. Pivot columns are
/// 0-based here; user-facing output adds one.
struct RowEchelon {
    GFMatrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon rref(const GFMatrix& m);
std::size_t rank(const GFMatrix& m);
/// Basis of {x : m x^T = 0}, one basis vector per row, ordered by free column.
GFMatrix kernel(const GFMatrix& m);
/// Rows of a followed by rows of b. Throws std::invalid_argument on width or
/// field mismatch.
GFMatrix stack(const GFMatrix& a, const GFMatrix& b);

char digit_char(Field::Value v);
/// Returns -1 for characters that are not digits 0-9 / a-z.
int digit_value(char c);

namespace gf2 {

/// A row of at most 64 binary entries; bit j holds column j.
using Row = std::uint64_t;

inline constexpr std::size_t max_cols = 64;

/// Rank of the rows, destroying them.
std::size_t rank_in_place(std::span<Row> rows);

/// Puts rows into reduced row echelon form in place. Nonzero rows come first,
/// sorted by pivot column; returns the rank.
std::size_t rref_in_place(std::span<Row> rows);

std::vector<Row> pack(const GFMatrix& m);
GFMatrix unpack(std::span<const Row> rows, std::size_t cols);

}  // namespace gf2

}  // namespace psc
