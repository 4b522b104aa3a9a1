#include <doctest.h>

#include <algorithm>

#include "psc/distance_check.hpp"
#include "psc/multilevel.hpp"

using namespace psc;

namespace {

std::vector<std::string> strings(const SkeletonCode& s) {
    std::vector<std::string> out;
    for (const auto& w : s.words) out.push_back(w.to_string());
    return out;
}

}  // namespace

TEST_CASE("lexicode skeletons") {
    CHECK(strings(lexicode_skeleton(6, 3, 4)) == std::vector<std::string>{"111000", "100110", "010101", "001011"});
    CHECK(lexicode_skeleton(7, 3, 4).words.size() == 7);
    const auto s8 = lexicode_skeleton(8, 4, 4);
    CHECK(s8.words.size() == 14);
    CHECK(s8.words.front().to_string() == "11110000");
    CHECK(s8.words.back().to_string() == "00001111");
    CHECK_NOTHROW(s8.validate());
    CHECK_THROWS_AS(lexicode_skeleton(6, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(lexicode_skeleton(3, 4, 2), std::invalid_argument);
}

TEST_CASE("skeleton validation") {
    SkeletonCode s{4, 2, 4, {BinaryVector::from_string("1100"), BinaryVector::from_string("1010")}};
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
    s.words.back() = BinaryVector::from_string("0011");
    CHECK_NOTHROW(s.validate());
    s.words.back() = BinaryVector::from_string("0111");
    CHECK_THROWS_AS(s.validate(), std::invalid_argument);
}

TEST_CASE("the (6,3,4) multilevel code") {
    const auto f = Field::of_order(2);
    const auto code = construct_code(f, 6, 3, 2);
    CHECK(code.size() == 71);
    CHECK(code.claimed_distance() == 4);
    CHECK(code.constant_dimension() == 3);
    REQUIRE(code.fibers().size() == 4);
    const std::vector<std::size_t> sizes{64, 4, 2, 1};
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(code.fibers()[i].size == sizes[i]);
        CHECK(code.fibers()[i].attains_bound());
    }
    const auto report = verify_min_distance(code, 4);
    CHECK(report.minimum == 4);
    CHECK(report.pairs == 71 * 70 / 2);
    CHECK(report.pass);
    CHECK(verify_lifting_distances(code).ok());
}

TEST_CASE("construction is deterministic") {
    const auto f = Field::of_order(2);
    const auto a = construct_code(f, 7, 3, 2);
    const auto b = construct_code(f, 7, 3, 2);
    CHECK(a.size() == 289);
    CHECK(a.words() == b.words());
}

TEST_CASE("fiber codewords share the fiber's identifying vector") {
    const auto f = Field::of_order(2);
    const auto v = BinaryVector::from_string("1001100");
    const auto fiber = build_fiber(f, v, 2);
    CHECK(fiber.words.size() == fiber.info.size);
    CHECK(std::is_sorted(fiber.words.begin(), fiber.words.end()));
    for (const auto& w : fiber.words) CHECK(identifying_vector(w) == v);
}

TEST_CASE("a custom skeleton must match the parameters") {
    const auto f = Field::of_order(2);
    ConstructOptions opt;
    opt.skeleton = SkeletonCode{6, 3, 4, {BinaryVector::from_string("111000"), BinaryVector::from_string("000111")}};
    const auto code = construct_code(f, 6, 3, 2, opt);
    CHECK(code.size() == 65);
    opt.skeleton->length = 7;
    CHECK_THROWS_AS(construct_code(f, 6, 3, 2, opt), std::invalid_argument);
}

TEST_CASE("delta 1 gives the whole Grassmannian") {
    const auto f = Field::of_order(2);
    CHECK(construct_code(f, 5, 2, 1).size() == gaussian_coefficient(5, 2, 2));
}

TEST_CASE("fiber preference keeps dimension and can only add accepted words") {
    const auto f = Field::of_order(2);
    FiberPreference pref;
    pref.accept = [&](const Subspace& s) { return s.generator().at(0, 1) == 1; };
    pref.trials = 64;
    ConstructOptions opt;
    opt.preference = pref;
    const auto tuned = construct_code(f, 8, 4, 2, opt);
    const auto pinned = construct_code(f, 8, 4, 2);
    CHECK(tuned.size() == pinned.size());
    for (std::size_t i = 0; i < tuned.fibers().size(); ++i) {
        CHECK(tuned.fibers()[i].dimension == pinned.fibers()[i].dimension);
        if (tuned.fibers()[i].trial == 0) continue;
        CHECK(tuned.fibers()[i].preferred > 0);
    }
    CHECK(verify_lifting_distances(tuned, 20000, 5).ok());
    CHECK(sample_min_distance(tuned, 4, 20000, 5).pass);
}
