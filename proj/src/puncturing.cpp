#include "psc/puncturing.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace psc {

Hyperplane::Hyperplane(Subspace space) : space_(std::move(space)) {
    if (space_.ambient() == 0 || space_.dimension() + 1 != space_.ambient())
        throw std::invalid_argument("hyperplane must have dimension n - 1");
}

Hyperplane Hyperplane::coordinate(const Field& field, std::size_t n, std::size_t dropped) {
    if (dropped < 1 || dropped > n)
        throw std::out_of_range("dropped coordinate " + std::to_string(dropped) + " outside [1, " + std::to_string(n) + "]");
    GFMatrix gen(field, n - 1, n);
    for (std::size_t i = 0, col = 0; col < n; ++col) {
        if (col == dropped - 1) continue;
        gen.set(i++, col, 1);
    }
    return Hyperplane(Subspace::from_matrix(gen));
}

std::vector<Hyperplane::Value> Hyperplane::to_coordinates(std::span<const Value> x) const {
    if (!contains(x)) throw std::invalid_argument("vector is not in the hyperplane");
    std::vector<Value> y;
    y.reserve(space_.dimension());
    for (auto p : space_.pivots()) y.push_back(x[p]);
    return y;
}

std::vector<Hyperplane::Value> Hyperplane::from_coordinates(std::span<const Value> y) const {
    if (y.size() != space_.dimension()) throw std::invalid_argument("coordinate vector has the wrong length");
    const auto& f = space_.field();
    std::vector<Value> x(ambient(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (y[i] == 0) continue;
        const auto row = space_.generator().row(i);
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.add(x[j], f.mul(y[i], row[j]));
    }
    return x;
}

Subspace Hyperplane::restrict(const Subspace& inside) const {
    std::vector<std::vector<Value>> rows;
    rows.reserve(inside.dimension());
    for (std::size_t i = 0; i < inside.dimension(); ++i) rows.push_back(to_coordinates(inside.generator().row(i)));
    return Subspace::from_rows(inside.field(), ambient() - 1, rows);
}

PunctureResult puncture(const SubspaceCode& code, const Hyperplane& q, std::span<const Field::Value> v) {
    if (code.ambient() != q.ambient() || !(code.field() == q.space().field()))
        throw std::invalid_argument("puncture: hyperplane and code live in different spaces");
    if (q.contains(v)) throw std::invalid_argument("puncture: v lies in the hyperplane");

    const auto claimed = code.claimed_distance();
    PunctureResult out{SubspaceCode(code.field(), code.ambient() - 1, claimed > 0 ? claimed - 1 : 0), 0, 0, 0};

    std::vector<Subspace> through_images;
    for (const auto& c : code.words()) {
        if (q.contains(c)) {
            ++out.contained;
            out.overlap += !out.code.add(q.restrict(c));
        } else if (c.contains(v)) {
            ++out.through;
            auto meet = intersection(c, q.space());
            if (meet.dimension() + 1 != c.dimension())
                throw std::logic_error("c ∩ Q has dimension " + std::to_string(meet.dimension()) + ", expected " +
                                       std::to_string(c.dimension() - 1));
            through_images.push_back(q.restrict(meet));
        }
    }
    for (auto& s : through_images) out.overlap += !out.code.add(std::move(s));
    return out;
}

std::function<bool(const Subspace&)> puncture_survivor(const Hyperplane& q, std::vector<Field::Value> v) {
    if (q.contains(v)) throw std::invalid_argument("puncture_survivor: v lies in the hyperplane");
    return [q, v = std::move(v)](const Subspace& c) { return q.contains(c) || c.contains(v); };
}

std::function<bool(std::span<const gf2::Row>)> packed_puncture_survivor(const Hyperplane& q,
                                                                         std::span<const Field::Value> v) {
    if (!q.space().field().is_binary() || q.ambient() > gf2::max_cols)
        throw std::invalid_argument("packed_puncture_survivor: needs q = 2 and n <= 64");
    if (v.size() != q.ambient()) throw std::invalid_argument("packed_puncture_survivor: v has the wrong length");
    if (q.contains(v)) throw std::invalid_argument("packed_puncture_survivor: v lies in the hyperplane");
    const auto normal = gf2::pack(kernel(q.space().generator())).front();
    gf2::Row target = 0;
    for (std::size_t j = 0; j < v.size(); ++j)
        if (v[j]) target |= gf2::Row{1} << j;

    return [normal, target](std::span<const gf2::Row> rows) {
        bool inside = true;
        for (auto r : rows) inside = inside && std::popcount(r & normal) % 2 == 0;
        if (inside) return true;
        gf2::Row rest = target;
        for (auto r : rows)
            if (rest >> std::countr_zero(r) & 1) rest ^= r;
        return rest == 0;
    };
}

}  // namespace psc
