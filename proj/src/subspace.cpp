#include "psc/subspace.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>
#include <stdexcept>

namespace psc {

Subspace::Subspace(GFMatrix generator, std::vector<std::size_t> pivots)
    : generator_(std::move(generator)), pivots_(std::move(pivots)) {
    if (generator_.field().is_binary() && generator_.cols() <= gf2::max_cols) {
        packed_ = gf2::pack(generator_);
        packed_ok_ = true;
    }
}

Subspace Subspace::from_rows(const Field& field, std::size_t n, const std::vector<std::vector<Value>>& rows) {
    return from_matrix(GFMatrix::from_rows(field, n, rows));
}

Subspace Subspace::from_matrix(const GFMatrix& m) {
    auto [reduced, pivots] = rref(m);
    return Subspace(std::move(reduced), std::move(pivots));
}

Subspace Subspace::zero(const Field& field, std::size_t n) { return Subspace(GFMatrix(field, 0, n), {}); }

Subspace Subspace::full(const Field& field, std::size_t n) {
    std::vector<std::size_t> pivots(n);
    for (std::size_t i = 0; i < n; ++i) pivots[i] = i;
    return Subspace(GFMatrix::identity(field, n), std::move(pivots));
}

bool Subspace::contains(std::span<const Value> x) const {
    if (x.size() != ambient()) throw std::invalid_argument("vector length differs from ambient dimension");
    // Reduce x against the echelon rows; x is in the span iff nothing remains.
    const auto& f = field();
    std::vector<Value> r(x.begin(), x.end());
    for (std::size_t i = 0; i < dimension(); ++i) {
        const auto c = r[pivots_[i]];
        if (c == 0) continue;
        const auto row = generator_.row(i);
        for (std::size_t j = 0; j < r.size(); ++j) r[j] = f.sub(r[j], f.mul(c, row[j]));
    }
    return std::all_of(r.begin(), r.end(), [](Value v) { return v == 0; });
}

bool Subspace::contains(const Subspace& other) const {
    if (!(field() == other.field()) || ambient() != other.ambient())
        throw std::invalid_argument("subspaces live in different spaces");
    for (std::size_t i = 0; i < other.dimension(); ++i)
        if (!contains(other.generator().row(i))) return false;
    return true;
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
    const auto& da = a.generator_.data();
    const auto& db = b.generator_.data();
    if (auto c = std::lexicographical_compare_three_way(da.begin(), da.end(), db.begin(), db.end()); c != 0) return c;
    return a.ambient() <=> b.ambient();
}

bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient() == b.ambient() && a.generator_ == b.generator_;
}

namespace {
void require_compatible(const Subspace& u, const Subspace& v) {
    if (!(u.field() == v.field())) throw std::invalid_argument("subspaces over different fields");
    if (u.ambient() != v.ambient()) throw std::invalid_argument("subspaces of different ambient spaces");
}
}  // namespace

std::size_t subspace_distance(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    std::size_t joint;
    if (u.has_packed_rows()) {
        std::array<gf2::Row, 2 * gf2::max_cols> rows{};
        const auto pu = u.packed_rows();
        const auto pv = v.packed_rows();
        std::copy(pu.begin(), pu.end(), rows.begin());
        std::copy(pv.begin(), pv.end(), rows.begin() + static_cast<std::ptrdiff_t>(pu.size()));
        joint = gf2::rank_in_place(std::span(rows.data(), pu.size() + pv.size()));
    } else {
        joint = rank(stack(u.generator(), v.generator()));
    }
    return 2 * joint - u.dimension() - v.dimension();
}

Subspace intersection(const Subspace& u, const Subspace& v) {
    require_compatible(u, v);
    const auto& f = u.field();
    const auto relations = kernel(stack(u.generator(), v.generator()).transpose());
    GFMatrix meet(f, relations.rows(), u.ambient());
    for (std::size_t r = 0; r < relations.rows(); ++r)
        for (std::size_t i = 0; i < u.dimension(); ++i) {
            const auto c = relations.at(r, i);
            if (c == 0) continue;
            for (std::size_t j = 0; j < u.ambient(); ++j)
                meet.set(r, j, f.add(meet.at(r, j), f.mul(c, u.generator().at(i, j))));
        }
    return Subspace::from_matrix(meet);
}

IdentifyingVector identifying_vector(const Subspace& u) {
    return IdentifyingVector::from_support(u.ambient(), u.pivots());
}

std::vector<Subspace> enumerate_grassmannian(const Field& field, std::size_t n, std::size_t k) {
    if (k > n) throw std::invalid_argument("enumerate_grassmannian: k > n");
    const std::size_t cells = n * k;
    double log2_count = static_cast<double>(cells) * std::log2(static_cast<double>(field.order()));
    if (log2_count > 24.0) throw std::length_error("enumerate_grassmannian: q^(nk) exceeds 2^24");

    std::vector<Subspace> out;
    if (field.is_binary()) {
        std::set<std::vector<gf2::Row>> seen;
        const std::uint64_t total = std::uint64_t{1} << cells;
        const gf2::Row mask = n == 64 ? ~gf2::Row{0} : ((gf2::Row{1} << n) - 1);
        std::vector<gf2::Row> rows(k);
        for (std::uint64_t word = 0; word < total; ++word) {
            for (std::size_t i = 0; i < k; ++i) rows[i] = (word >> (i * n)) & mask;
            if (gf2::rref_in_place(rows) != k) continue;
            if (seen.insert(rows).second) out.push_back(Subspace::from_matrix(gf2::unpack(rows, n)));
        }
    } else {
        std::set<Subspace> seen;
        GFMatrix m(field, k, n);
        std::vector<Field::Value> digits(cells, 0);
        while (true) {
            for (std::size_t c = 0; c < cells; ++c) m.set(c / n, c % n, digits[c]);
            if (rank(m) == k) {
                auto s = Subspace::from_matrix(m);
                if (seen.insert(s).second) out.push_back(std::move(s));
            }
            std::size_t c = 0;
            while (c < cells && ++digits[c] == field.order()) digits[c++] = 0;
            if (c == cells) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t gaussian_coefficient(unsigned n, unsigned k, std::uint64_t q) {
    if (k > n) throw std::invalid_argument("gaussian_coefficient: k > n");
    // q-Pascal rule: [m, j] = [m-1, j-1] + q^j [m-1, j]; exact, no division.
    std::vector<std::uint64_t> row(k + 1, 0);
    row[0] = 1;
    for (unsigned m = 1; m <= n; ++m) {
        for (unsigned j = std::min(m, k); j >= 1; --j) {
            std::uint64_t qj = 1;
            for (unsigned t = 0; t < j; ++t)
                if (__builtin_mul_overflow(qj, q, &qj)) throw std::overflow_error("gaussian_coefficient overflow");
            std::uint64_t term;
            if (__builtin_mul_overflow(qj, row[j], &term) || __builtin_add_overflow(term, row[j - 1], &row[j]))
                throw std::overflow_error("gaussian_coefficient overflow");
        }
    }
    return row[k];
}

}  // namespace psc

std::size_t std::hash<psc::Subspace>::operator()(const psc::Subspace& s) const noexcept {
    std::size_t h = s.ambient() * 0x9e3779b97f4a7c15ull;
    for (auto v : s.generator().data()) h = (h ^ v) * 0x100000001b3ull;
    return h;
}
