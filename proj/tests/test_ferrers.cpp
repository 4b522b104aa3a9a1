#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>

#include "psc/ferrers.hpp"

using namespace psc;

namespace {

std::vector<BinaryVector> weight_k_vectors(std::size_t n, std::size_t k) {
    std::vector<BinaryVector> out;
    std::string s(n, '0');
    std::fill(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k), '1');
    do out.push_back(BinaryVector::from_string(s));
    while (std::prev_permutation(s.begin(), s.end()));
    return out;
}

}  // namespace

TEST_CASE("echelon Ferrers form of 0110100") {
    const auto form = echelon_ferrers_form(BinaryVector::from_string("0110100"));
    CHECK(form.pivots() == std::vector<std::size_t>{1, 2, 4});
    CHECK(form.dots() == 8);
    CHECK(form.render(".") ==
          "0 1 0 . 0 . .\n"
          "0 0 1 . 0 . .\n"
          "0 0 0 0 1 . .\n");
    CHECK_THROWS_AS(echelon_ferrers_form(BinaryVector::from_string("0000")), std::invalid_argument);
}

TEST_CASE("Ferrers diagram and bound for 0110100") {
    const auto s = diagram_of(BinaryVector::from_string("0110100"));
    CHECK(s.columns() == std::vector<std::size_t>{3, 5, 6});
    CHECK(s.dots() == 8);
    CHECK(s.box_rows() == 3);
    CHECK(s.box_cols() == 3);
    CHECK(s.render(".") == ". . .\n. . .\n  . .\n");
    CHECK(dimension_bound(s, 2) == 5);
    CHECK(dimension_bound(s, 1) == 8);
    CHECK(dimension_bound(s, 3) == 2);
    CHECK_THROWS_AS(dimension_bound(s, 0), std::invalid_argument);
}

TEST_CASE("diagrams from the (6,3,4) skeleton") {
    const auto a = diagram_of(BinaryVector::from_string("100110"));
    CHECK(a.columns() == std::vector<std::size_t>{1, 2, 5});
    CHECK(a.row_dots(0) == 3);
    CHECK(a.row_dots(1) == 1);
    CHECK(a.row_dots(2) == 1);
    CHECK(dimension_bound(a, 2) == 2);

    const auto b = diagram_of(BinaryVector::from_string("001011"));
    CHECK(b.dots() == 1);
    CHECK(b.box_rows() == 1);
    CHECK(b.box_cols() == 1);
    CHECK(dimension_bound(b, 2) == 0);

    const auto full = diagram_of(BinaryVector::from_string("111000"));
    CHECK(dimension_bound(full, 1) == 9);
    CHECK(dimension_bound(full, 2) == 6);
    CHECK(dimension_bound(full, 3) == 3);
}

TEST_CASE("fiber sizes partition the Grassmannian") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k) {
            std::uint64_t total = 0;
            for (const auto& v : weight_k_vectors(n, k)) total += std::uint64_t{1} << echelon_ferrers_form(v).dots();
            CAPTURE(n);
            CAPTURE(k);
            CHECK(total == gaussian_coefficient(static_cast<unsigned>(n), static_cast<unsigned>(k), 2));
        }
}

TEST_CASE("diagram shape: suffix rows, non-increasing down, top-aligned box") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            for (const auto& v : weight_k_vectors(n, k)) {
                const auto s = diagram_of(v);
                CAPTURE(v.to_string());
                for (std::size_t i = 0; i < s.rows(); ++i) {
                    const auto r = s.row_dots(i);
                    for (std::size_t c = 0; c < s.cols(); ++c) CHECK(s.is_dot(i, c) == (c + r >= s.cols()));
                    if (i + 1 < s.rows()) CHECK(s.row_dots(i + 1) <= r);
                    CHECK((r > 0) == (i < s.box_rows()));
                }
                CHECK(s.box_cols() == s.cols());
                if (s.cols()) CHECK(s.row_dots(0) == s.cols());
            }
}

TEST_CASE("bound is monotone in delta and at most the dot count") {
    for (std::size_t n = 1; n <= 8; ++n)
        for (std::size_t k = 1; k <= n; ++k)
            for (const auto& v : weight_k_vectors(n, k)) {
                const auto s = diagram_of(v);
                CHECK(dimension_bound(s, 1) == s.dots());
                for (std::size_t d = 1; d < 5; ++d) CHECK(dimension_bound(s, d + 1) <= dimension_bound(s, d));
            }
}

TEST_CASE("lifting is injective and inverted by filling_of") {
    const auto f = Field::of_order(2);
    const auto v = BinaryVector::from_string("0110100");
    const auto s = diagram_of(v);
    std::set<Subspace> seen;
    for (std::uint32_t bits = 0; bits < (1u << s.dots()); ++bits) {
        GFMatrix m(f, s.rows(), s.cols());
        std::size_t pos = 0;
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t c = 0; c < s.cols(); ++c)
                if (s.is_dot(i, c)) m.set(i, c, (bits >> pos++) & 1);
        const auto u = lift(s, m);
        CHECK(identifying_vector(u) == v);
        CHECK(filling_of(s, u) == m);
        seen.insert(u);
    }
    CHECK(seen.size() == (1u << s.dots()));
}

TEST_CASE("lift rejects fillings off the diagram") {
    const auto f = Field::of_order(2);
    const auto s = diagram_of(BinaryVector::from_string("0110100"));
    GFMatrix m(f, 3, 3);
    m.set(2, 0, 1);
    CHECK_THROWS_AS(lift(s, m), std::invalid_argument);
    CHECK_THROWS_AS(lift(s, GFMatrix(f, 2, 3)), std::invalid_argument);
}
