#pragma once

#include <cstddef>
#include <random>
#include <set>
#include <vector>

#include "psc/subspace.hpp"

namespace psc::testing {

// Every vector of U, by enumerating all combinations of its generator rows.
inline std::set<std::vector<Field::Value>> span_vectors(const Subspace& u) {
    const auto& f = u.field();
    std::set<std::vector<Field::Value>> out;
    std::vector<Field::Value> coeff(u.dimension(), 0);
    while (true) {
        std::vector<Field::Value> x(u.ambient(), 0);
        for (std::size_t i = 0; i < coeff.size(); ++i)
            for (std::size_t j = 0; j < x.size(); ++j) x[j] = f.add(x[j], f.mul(coeff[i], u.generator().at(i, j)));
        out.insert(std::move(x));
        std::size_t i = 0;
        while (i < coeff.size() && ++coeff[i] == f.order()) coeff[i++] = 0;
        if (i == coeff.size()) break;
    }
    return out;
}

// d_S from |U ∩ V| counted vector by vector.
inline std::size_t oracle_distance(const Subspace& u, const Subspace& v) {
    const auto a = span_vectors(u);
    const auto b = span_vectors(v);
    std::size_t common = 0;
    for (const auto& x : a) common += b.count(x);
    std::size_t dim = 0;
    for (std::size_t c = 1; c < common; c *= u.field().order()) ++dim;
    return u.dimension() + v.dimension() - 2 * dim;
}

inline Subspace random_subspace(const Field& f, std::size_t n, std::size_t k, std::mt19937_64& rng) {
    std::vector<std::vector<Field::Value>> rows(k, std::vector<Field::Value>(n));
    for (auto& r : rows)
        for (auto& x : r) x = static_cast<Field::Value>(rng() % f.order());
    return Subspace::from_rows(f, n, rows);
}

}  // namespace psc::testing
