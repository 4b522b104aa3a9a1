#include <doctest.h>

#include <random>

#include "psc/rank_metric.hpp"

using namespace psc;

namespace {

// Pairwise minimum over all codeword pairs, without using linearity.
std::size_t pairwise_min_rank(const LinearMatrixCode& code) {
    const auto words = code.codewords();
    std::size_t best = code.rows() + code.cols();
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, rank_distance(words[i], words[j]));
    return best;
}

}  // namespace

TEST_CASE("rank distance") {
    const auto f = Field::of_order(2);
    const auto a = GFMatrix::from_rows(f, 2, {{1, 0}, {0, 1}});
    const auto b = GFMatrix::from_rows(f, 2, {{1, 1}, {0, 1}});
    CHECK(rank_distance(a, a) == 0);
    CHECK(rank_distance(a, b) == 1);
    CHECK(rank_distance(a, GFMatrix(f, 2, 2)) == 2);
    CHECK_THROWS_AS(rank_distance(a, GFMatrix(f, 2, 3)), std::invalid_argument);
}

TEST_CASE("Gabidulin codes are MRD") {
    const auto f = Field::of_order(2);
    for (std::size_t m = 1; m <= 4; ++m)
        for (std::size_t t = 1; t <= 4; ++t)
            for (std::size_t d = 1; d <= std::min(m, t); ++d) {
                CAPTURE(m);
                CAPTURE(t);
                CAPTURE(d);
                const auto g = gabidulin(f, m, t, d);
                CHECK(g.rows() == m);
                CHECK(g.cols() == t);
                CHECK(g.dimension() == std::max(m, t) * (std::min(m, t) - d + 1));
                CHECK(min_rank_distance(g) == d);
            }
}

TEST_CASE("Gabidulin minimum distance by the pairwise oracle") {
    const auto f = Field::of_order(2);
    CHECK(pairwise_min_rank(gabidulin(f, 3, 3, 2)) == 2);
    CHECK(pairwise_min_rank(gabidulin(f, 2, 4, 2)) == 2);
    CHECK(pairwise_min_rank(gabidulin(f, 4, 3, 3)) == 3);
}

TEST_CASE("Gabidulin over GF(3)") {
    const auto f = Field::of_order(3);
    const auto g = gabidulin(f, 2, 3, 2);
    CHECK(g.dimension() == 3);
    CHECK(min_rank_distance(g) == 2);
}

TEST_CASE("Gabidulin parameter checks") {
    CHECK_THROWS_AS(gabidulin(Field::of_order(2), 3, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(gabidulin(Field::of_order(2), 3, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(gabidulin(Field::of_order(4), 2, 2, 1), std::invalid_argument);
}

TEST_CASE("codeword indexing puts basis[0] most significant") {
    const auto g = gabidulin(Field::of_order(2), 2, 2, 1);
    CHECK(g.codeword(0).is_zero());
    CHECK(g.codeword(1) == g.basis().back());
    CHECK(g.codeword(std::uint64_t{1} << (g.dimension() - 1)) == g.basis().front());
    CHECK(g.codewords().size() == g.size());
}

TEST_CASE("Ferrers codes on the (6,3,4) skeleton diagrams") {
    const auto f = Field::of_order(2);
    const auto full = ferrers_code(diagram_of(BinaryVector::from_string("111000")), 2, f);
    CHECK(full.dimension() == 6);
    CHECK(full.attains_bound());

    const auto a = ferrers_code(diagram_of(BinaryVector::from_string("100110")), 2, f);
    CHECK(a.dimension() == 2);
    CHECK(a.attains_bound());
    CHECK(min_rank_distance(a) >= 2);

    const auto dot = ferrers_code(diagram_of(BinaryVector::from_string("001011")), 2, f);
    CHECK(dot.dimension() == 0);
    CHECK(dot.size() == 1);
    CHECK(dot.attains_bound());
    CHECK_FALSE(min_rank_distance(dot).has_value());
}

TEST_CASE("Ferrers codes vanish off the diagram and keep the distance") {
    const auto f = Field::of_order(2);
    for (const char* v : {"0110100", "1101000", "10101010", "11001100", "01101001"}) {
        const auto s = diagram_of(BinaryVector::from_string(v));
        const auto code = ferrers_code(s, 2, f);
        CAPTURE(v);
        CHECK(code.dimension() <= dimension_bound(s, 2));
        for (const auto& b : code.basis())
            for (std::size_t i = 0; i < b.rows(); ++i)
                for (std::size_t c = 0; c < b.cols(); ++c)
                    if (!s.is_dot(i, c)) CHECK(b.at(i, c) == 0);
        if (code.dimension()) CHECK(*min_rank_distance(code) >= 2);
    }
}

TEST_CASE("rank equivalence preserves rank distance and Ferrers dimension") {
    const auto f = Field::of_order(2);
    std::mt19937_64 rng(31);
    const auto s = diagram_of(BinaryVector::from_string("10101010"));
    const auto pinned = ferrers_code(s, 2, f);
    for (int i = 0; i < 20; ++i) {
        const auto eq = random_equivalence(f, s.box_rows(), s.cols(), rng);
        const auto x = pinned.codeword(rng() % pinned.size());
        const auto y = pinned.codeword(rng() % pinned.size());
        CHECK(rank_distance(eq.apply(x), eq.apply(y)) == rank_distance(x, y));
        const auto moved = ferrers_code(s, 2, f, &eq);
        if (moved.dimension()) CHECK(*min_rank_distance(moved) >= 2);
        CHECK(moved.dimension() <= dimension_bound(s, 2));
    }
}

TEST_CASE("linear code constructor validates the basis") {
    const auto f = Field::of_order(2);
    const auto a = GFMatrix::from_rows(f, 2, {{1, 0}, {0, 0}});
    CHECK_THROWS_AS(LinearMatrixCode(f, 2, 2, {a, a}, 1), std::invalid_argument);
    CHECK_THROWS_AS(LinearMatrixCode(f, 2, 3, {a}, 1), std::invalid_argument);
    CHECK(LinearMatrixCode(f, 2, 2, {a}, 1).size() == 2);
}
