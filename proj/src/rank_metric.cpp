#include "psc/rank_metric.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace psc {

std::size_t rank_distance(const GFMatrix& x, const GFMatrix& y) { return rank(x - y); }

LinearMatrixCode::LinearMatrixCode(Field field, std::size_t rows, std::size_t cols, std::vector<GFMatrix> basis,
                                   std::size_t designed_distance, std::optional<FerrersDiagram> support,
                                   std::optional<std::size_t> dimension_bound)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      basis_(std::move(basis)),
      designed_distance_(designed_distance),
      support_(std::move(support)),
      bound_(dimension_bound) {
    GFMatrix flat(field_, basis_.size(), rows_ * cols_);
    for (std::size_t b = 0; b < basis_.size(); ++b) {
        const auto& m = basis_[b];
        if (!(m.field() == field_) || m.rows() != rows_ || m.cols() != cols_)
            throw std::invalid_argument("basis matrix has the wrong shape or field");
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) {
                flat.set(b, i * cols_ + j, m.at(i, j));
                if (support_ && m.at(i, j) != 0 && !support_->is_dot(i, j))
                    throw std::invalid_argument("basis matrix is nonzero outside the Ferrers diagram");
            }
    }
    if (rank(flat) != basis_.size()) throw std::invalid_argument("basis matrices are linearly dependent");
}

std::uint64_t LinearMatrixCode::size() const {
    std::uint64_t s = 1;
    for (std::size_t i = 0; i < dimension(); ++i)
        if (__builtin_mul_overflow(s, std::uint64_t{field_.order()}, &s) || s > (std::uint64_t{1} << 63))
            throw std::overflow_error("code size exceeds 2^63");
    return s;
}

GFMatrix LinearMatrixCode::codeword(std::uint64_t index) const {
    GFMatrix c(field_, rows_, cols_);
    const auto q = field_.order();
    for (std::size_t b = basis_.size(); b-- > 0;) {
        const auto coeff = static_cast<Field::Value>(index % q);
        index /= q;
        if (coeff == 0) continue;
        c = c + coeff * basis_[b];
    }
    return c;
}

std::vector<GFMatrix> LinearMatrixCode::codewords() const {
    std::vector<GFMatrix> out;
    const auto n = size();
    out.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) out.push_back(codeword(i));
    return out;
}

LinearMatrixCode gabidulin(const Field& field, std::size_t m, std::size_t t, std::size_t delta) {
    if (field.degree() != 1) throw std::invalid_argument("gabidulin: base field must be a prime field");
    const std::size_t big = std::max(m, t);
    const std::size_t len = std::min(m, t);
    if (delta < 1 || delta > len) throw std::invalid_argument("gabidulin: delta must lie in [1, min(m, t)]");

    const auto q = field.order();
    const Field ext = Field::make(q, static_cast<std::uint32_t>(big));
    std::vector<Field::Value> points(len);
    for (std::size_t j = 0; j < len; ++j) points[j] = ext.pow(q, j);  // encoding of x^j

    const std::size_t message_len = len - delta + 1;
    std::vector<GFMatrix> basis;
    basis.reserve(message_len * big);
    std::vector<Field::Value> frob(len);
    for (std::size_t i = 0; i < message_len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            auto y = points[j];
            for (std::size_t r = 0; r < i; ++r) y = ext.pow(y, q);
            frob[j] = y;
        }
        for (std::size_t b = 0; b < big; ++b) {
            const auto coeff = ext.pow(q, b);
            GFMatrix tall(field, big, len);
            for (std::size_t j = 0; j < len; ++j) {
                const auto column = coordinates_over_prime(ext, ext.mul(coeff, frob[j]));
                for (std::size_t r = 0; r < big; ++r) tall.set(r, j, column[r]);
            }
            basis.push_back(m >= t ? std::move(tall) : tall.transpose());
        }
    }
    return LinearMatrixCode(field, m, t, std::move(basis), delta);
}

namespace {

GFMatrix random_invertible(const Field& field, std::size_t n, std::mt19937_64& rng) {
    GFMatrix m(field, n, n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.set(i, j, static_cast<Field::Value>(rng() % field.order()));
    } while (rank(m) != n);
    return m;
}

}  // namespace

MatrixEquivalence random_equivalence(const Field& field, std::size_t m, std::size_t t, std::mt19937_64& rng) {
    auto left = random_invertible(field, m, rng);
    auto right = random_invertible(field, t, rng);
    return {std::move(left), std::move(right)};
}

LinearMatrixCode ferrers_code(const FerrersDiagram& s, std::size_t delta, const Field& field,
                              const MatrixEquivalence* equivalence) {
    if (delta < 1) throw std::invalid_argument("ferrers_code: delta must be >= 1");
    const auto bound = dimension_bound(s, delta);
    const std::size_t m = s.box_rows();
    const std::size_t t = s.cols();
    if (m < delta || t < delta) return LinearMatrixCode(field, s.rows(), t, {}, delta, s, bound);

    auto mrd = gabidulin(field, m, t, delta);
    std::vector<GFMatrix> generators;
    generators.reserve(mrd.dimension());
    for (const auto& g : mrd.basis()) {
        if (equivalence) {
            if (equivalence->left.rows() != m || equivalence->right.rows() != t)
                throw std::invalid_argument("ferrers_code: equivalence has the wrong size");
            generators.push_back(equivalence->apply(g));
        } else {
            generators.push_back(g);
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> off_cells;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < t; ++j)
            if (!s.is_dot(i, j)) off_cells.emplace_back(i, j);

    GFMatrix constraints(field, off_cells.size(), generators.size());
    for (std::size_t r = 0; r < off_cells.size(); ++r)
        for (std::size_t d = 0; d < generators.size(); ++d)
            constraints.set(r, d, generators[d].at(off_cells[r].first, off_cells[r].second));
    const auto solutions = kernel(constraints);

    std::vector<GFMatrix> basis;
    basis.reserve(solutions.rows());
    for (std::size_t r = 0; r < solutions.rows(); ++r) {
        GFMatrix c(field, s.rows(), t);
        for (std::size_t d = 0; d < generators.size(); ++d) {
            const auto x = solutions.at(r, d);
            if (x == 0) continue;
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < t; ++j)
                    c.set(i, j, field.add(c.at(i, j), field.mul(x, generators[d].at(i, j))));
        }
        basis.push_back(std::move(c));
    }
    return LinearMatrixCode(field, s.rows(), t, std::move(basis), delta, s, bound);
}

std::optional<std::size_t> min_rank_distance(const LinearMatrixCode& code) {
    if (code.dimension() == 0) return std::nullopt;
    const double log2_size = static_cast<double>(code.dimension()) * std::log2(static_cast<double>(code.field().order()));
    if (log2_size > 20.0) throw std::length_error("min_rank_distance: code too large to scan");

    std::size_t best = std::min(code.rows(), code.cols());
    if (code.field().is_binary() && code.cols() <= gf2::max_cols) {
        // Gray-code walk: step g flips basis element ctz(g).
        std::vector<std::vector<gf2::Row>> packed;
        for (const auto& b : code.basis()) packed.push_back(gf2::pack(b));
        std::vector<gf2::Row> current(code.rows(), 0), scratch(code.rows());
        const std::uint64_t total = std::uint64_t{1} << code.dimension();
        for (std::uint64_t g = 1; g < total; ++g) {
            const auto& flip = packed[static_cast<std::size_t>(std::countr_zero(g))];
            for (std::size_t i = 0; i < current.size(); ++i) current[i] ^= flip[i];
            scratch = current;
            best = std::min(best, gf2::rank_in_place(scratch));
        }
        return best;
    }
    const auto total = code.size();
    for (std::uint64_t i = 1; i < total; ++i) best = std::min(best, rank(code.codeword(i)));
    return best;
}

}  // namespace psc
