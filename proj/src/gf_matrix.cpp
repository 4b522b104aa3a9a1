#include "psc/gf_matrix.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

namespace psc {

GFMatrix::GFMatrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

GFMatrix GFMatrix::identity(const Field& field, std::size_t n) {
    GFMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

GFMatrix GFMatrix::from_rows(const Field& field, std::size_t cols, const std::vector<std::vector<Value>>& rows) {
    GFMatrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("matrix row has wrong length");
        for (std::size_t j = 0; j < cols; ++j) {
            if (rows[i][j] >= field.order()) throw std::invalid_argument("matrix entry outside the field");
            m.set(i, j, rows[i][j]);
        }
    }
    return m;
}

GFMatrix GFMatrix::transpose() const {
    GFMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, at(i, j));
    return t;
}

bool GFMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](Value v) { return v == 0; });
}

std::string GFMatrix::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += ';';
        for (std::size_t j = 0; j < cols_; ++j) s += digit_char(at(i, j));
    }
    return s;
}

namespace {
void require_same_shape(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
}
}  // namespace

GFMatrix operator+(const GFMatrix& a, const GFMatrix& b) {
    require_same_shape(a, b);
    GFMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
    return c;
}

GFMatrix operator-(const GFMatrix& a, const GFMatrix& b) {
    require_same_shape(a, b);
    GFMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
    return c;
}

GFMatrix operator*(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    const auto& f = a.field_;
    GFMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const auto x = a.at(i, l);
            if (x == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c.set(i, j, f.add(c.at(i, j), f.mul(x, b.at(l, j))));
        }
    return c;
}

GFMatrix operator*(GFMatrix::Value scalar, const GFMatrix& a) {
    GFMatrix c = a;
    for (auto& v : c.data_) v = a.field_.mul(scalar, v);
    return c;
}

bool operator==(const GFMatrix& a, const GFMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace gf2 {

std::size_t rank_in_place(std::span<Row> rows) {
    std::size_t r = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const Row pivot = rows[i];
        if (!pivot) continue;
        const Row low = pivot & (~pivot + 1);
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j] & low) rows[j] ^= pivot;
        ++r;
    }
    return r;
}

std::size_t rref_in_place(std::span<Row> rows) {
    std::size_t r = 0;
    for (std::size_t col = 0; col < max_cols && r < rows.size(); ++col) {
        const Row bit = Row{1} << col;
        std::size_t p = r;
        while (p < rows.size() && !(rows[p] & bit)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

std::vector<Row> pack(const GFMatrix& m) {
    if (!m.field().is_binary() || m.cols() > max_cols) throw std::invalid_argument("gf2::pack needs a binary matrix with <= 64 columns");
    std::vector<Row> rows(m.rows(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j)) rows[i] |= Row{1} << j;
    return rows;
}

GFMatrix unpack(std::span<const Row> rows, std::size_t cols) {
    GFMatrix m(Field::make(2), rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j) m.set(i, j, (rows[i] >> j) & 1u);
    return m;
}

}  // namespace gf2

namespace {

bool use_packed(const GFMatrix& m) { return m.field().is_binary() && m.cols() <= gf2::max_cols; }

}  // namespace

RowEchelon rref(const GFMatrix& m) {
    if (use_packed(m)) {
        auto rows = gf2::pack(m);
        const auto r = gf2::rref_in_place(rows);
        rows.resize(r);
        RowEchelon out{gf2::unpack(rows, m.cols()), {}};
        for (auto row : rows) out.pivots.push_back(static_cast<std::size_t>(std::countr_zero(row)));
        return out;
    }

    const auto& f = m.field();
    GFMatrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t col = 0; col < a.cols() && r < a.rows(); ++col) {
        std::size_t p = r;
        while (p < a.rows() && a.at(p, col) == 0) ++p;
        if (p == a.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < a.cols(); ++j) {
                const auto tmp = a.at(r, j);
                a.set(r, j, a.at(p, j));
                a.set(p, j, tmp);
            }
        const auto scale = f.inv(a.at(r, col));
        for (std::size_t j = col; j < a.cols(); ++j) a.set(r, j, f.mul(scale, a.at(r, j)));
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == r) continue;
            const auto factor = a.at(i, col);
            if (factor == 0) continue;
            for (std::size_t j = col; j < a.cols(); ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(factor, a.at(r, j))));
        }
        pivots.push_back(col);
        ++r;
    }
    GFMatrix reduced(f, r, a.cols());
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) reduced.set(i, j, a.at(i, j));
    return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const GFMatrix& m) {
    if (use_packed(m)) {
        auto rows = gf2::pack(m);
        return gf2::rank_in_place(rows);
    }
    return rref(m).pivots.size();
}

GFMatrix kernel(const GFMatrix& m) {
    const auto& f = m.field();
    const auto [reduced, pivots] = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    GFMatrix basis(f, m.cols() - pivots.size(), m.cols());
    std::size_t out = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.set(out, free, 1);
        for (std::size_t i = 0; i < pivots.size(); ++i) basis.set(out, pivots[i], f.neg(reduced.at(i, free)));
        ++out;
    }
    return basis;
}

GFMatrix stack(const GFMatrix& a, const GFMatrix& b) {
    if (!(a.field() == b.field())) throw std::invalid_argument("stack: matrices over different fields");
    if (a.cols() != b.cols()) throw std::invalid_argument("stack: column counts differ");
    GFMatrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
    return out;
}

char digit_char(Field::Value v) {
    if (v < 10) return static_cast<char>('0' + v);
    if (v < 36) return static_cast<char>('a' + (v - 10));
    throw std::out_of_range("digit_char: value too large for a single digit");
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

}  // namespace psc
