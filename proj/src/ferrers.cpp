#include "psc/ferrers.hpp"

#include <algorithm>
#include <stdexcept>

namespace psc {

EchelonFerrersForm::EchelonFerrersForm(IdentifyingVector v) : v_(std::move(v)), pivots_(v_.support()) {
    if (pivots_.empty()) throw std::invalid_argument("echelon Ferrers form of the zero vector");
    const std::size_t n = v_.size();
    cells_.assign(rows() * n, EchelonEntry::zero);
    for (std::size_t i = 0; i < rows(); ++i) {
        cells_[i * n + pivots_[i]] = EchelonEntry::one;
        for (std::size_t j = pivots_[i] + 1; j < n; ++j)
            if (!v_[j]) {
                cells_[i * n + j] = EchelonEntry::dot;
                ++dots_;
            }
    }
}

std::string EchelonFerrersForm::render(const std::string& dot) const {
    std::string out;
    for (std::size_t i = 0; i < rows(); ++i) {
        for (std::size_t j = 0; j < cols(); ++j) {
            if (j) out += ' ';
            switch (at(i, j)) {
                case EchelonEntry::zero: out += '0'; break;
                case EchelonEntry::one: out += '1'; break;
                case EchelonEntry::dot: out += dot; break;
            }
        }
        out += '\n';
    }
    return out;
}

EchelonFerrersForm echelon_ferrers_form(const IdentifyingVector& v) { return EchelonFerrersForm(v); }

FerrersDiagram::FerrersDiagram(const EchelonFerrersForm& form) : v_(form.vector()), rows_(form.rows()) {
    for (std::size_t j = 0; j < form.cols(); ++j)
        for (std::size_t i = 0; i < form.rows(); ++i)
            if (form.at(i, j) == EchelonEntry::dot) {
                columns_.push_back(j);
                break;
            }
    mask_.assign(rows_ * cols(), 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t c = 0; c < cols(); ++c)
            if (form.at(i, columns_[c]) == EchelonEntry::dot) {
                mask_[i * cols() + c] = 1;
                ++dots_;
            }
    for (std::size_t i = 0; i < rows_; ++i)
        if (row_dots(i)) box_rows_ = i + 1;
    for (std::size_t c = 0; c < cols(); ++c)
        if (col_dots(c)) ++box_cols_;
}

std::size_t FerrersDiagram::row_dots(std::size_t i) const {
    std::size_t n = 0;
    for (std::size_t c = 0; c < cols(); ++c) n += is_dot(i, c);
    return n;
}

std::size_t FerrersDiagram::col_dots(std::size_t j) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < rows_; ++i) n += is_dot(i, j);
    return n;
}

std::string FerrersDiagram::render(const std::string& dot) const {
    std::string out;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t c = 0; c < cols(); ++c) {
            if (c) out += ' ';
            out += is_dot(i, c) ? dot : std::string(" ");
        }
        out += '\n';
    }
    return out;
}

FerrersDiagram diagram_of(const IdentifyingVector& v) { return FerrersDiagram(EchelonFerrersForm(v)); }

std::size_t dimension_bound(const FerrersDiagram& s, std::size_t delta) {
    if (delta < 1) throw std::invalid_argument("dimension_bound: delta must be >= 1");
    const std::size_t m = s.box_rows();
    const std::size_t t = s.box_cols();
    if (delta > m || delta > t) return 0;

    std::size_t row_window = 0;
    for (std::size_t i = delta - 1; i < m; ++i) row_window += s.row_dots(i);

    // Box columns in order; every column of S holds a dot, but stay general.
    std::size_t col_window = 0, seen = 0;
    for (std::size_t c = 0; c < s.cols() && seen < t - delta + 1; ++c) {
        const auto d = s.col_dots(c);
        if (!d) continue;
        col_window += d;
        ++seen;
    }
    return std::min(row_window, col_window);
}

Subspace lift(const FerrersDiagram& s, const GFMatrix& m) {
    if (m.rows() != s.rows() || m.cols() != s.cols()) throw std::invalid_argument("lift: filling shape differs from S");
    const auto& v = s.vector();
    const auto pivots = v.support();
    GFMatrix gen(m.field(), s.rows(), v.size());
    for (std::size_t i = 0; i < s.rows(); ++i) {
        gen.set(i, pivots[i], 1);
        for (std::size_t c = 0; c < s.cols(); ++c) {
            const auto x = m.at(i, c);
            if (x == 0) continue;
            if (!s.is_dot(i, c)) throw std::invalid_argument("lift: nonzero entry outside the Ferrers diagram");
            gen.set(i, s.columns()[c], x);
        }
    }
    return Subspace::from_matrix(gen);
}

Subspace lift(const IdentifyingVector& v, const GFMatrix& m) { return lift(diagram_of(v), m); }

GFMatrix filling_of(const FerrersDiagram& s, const Subspace& u) {
    if (u.dimension() != s.rows() || u.ambient() != s.vector().size())
        throw std::invalid_argument("filling_of: subspace does not match the diagram");
    GFMatrix m(u.field(), s.rows(), s.cols());
    for (std::size_t i = 0; i < s.rows(); ++i)
        for (std::size_t c = 0; c < s.cols(); ++c) m.set(i, c, u.generator().at(i, s.columns()[c]));
    return m;
}

}  // namespace psc
