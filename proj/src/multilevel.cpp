#include "psc/multilevel.hpp"

#include <algorithm>
#include <bit>
#include <random>
#include <stdexcept>
#include <string>

#include "psc/ferrers.hpp"

namespace psc {

void SkeletonCode::validate() const {
    for (const auto& w : words) {
        if (w.size() != length) throw std::invalid_argument("skeleton word " + w.to_string() + " has the wrong length");
        if (w.weight() != weight) throw std::invalid_argument("skeleton word " + w.to_string() + " has the wrong weight");
    }
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            if (hamming_distance(words[i], words[j]) < min_distance)
                throw std::invalid_argument("skeleton words " + words[i].to_string() + " and " + words[j].to_string() +
                                            " are closer than " + std::to_string(min_distance));
}

SkeletonCode lexicode_skeleton(std::size_t n, std::size_t k, std::size_t d) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("lexicode_skeleton: d must be even and >= 2");
    if (k > n) throw std::invalid_argument("lexicode_skeleton: k > n");

    SkeletonCode code{n, k, d, {}};
    // prev_permutation over a sorted-descending 1..10..0 pattern walks every
    // weight-k word in descending lexicographic order.
    std::string pattern(n, '0');
    std::fill(pattern.begin(), pattern.begin() + static_cast<std::ptrdiff_t>(k), '1');
    do {
        auto word = BinaryVector::from_string(pattern);
        const bool far = std::all_of(code.words.begin(), code.words.end(),
                                     [&](const BinaryVector& kept) { return hamming_distance(kept, word) >= d; });
        if (far) code.words.push_back(std::move(word));
    } while (std::prev_permutation(pattern.begin(), pattern.end()));
    return code;
}

Fiber build_fiber(const Field& field, const IdentifyingVector& v, std::size_t delta,
                  const MatrixEquivalence* equivalence) {
    const auto diagram = diagram_of(v);
    auto rank_code = ferrers_code(diagram, delta, field, equivalence);
    std::vector<Subspace> words;
    const auto count = rank_code.size();
    words.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) words.push_back(lift(diagram, rank_code.codeword(i)));
    std::sort(words.begin(), words.end());

    FiberInfo info;
    info.v = v;
    info.dimension = rank_code.dimension();
    info.bound = rank_code.dimension_bound().value_or(0);
    info.size = words.size();
    return {std::move(rank_code), std::move(words), std::move(info)};
}

namespace {

std::size_t count_accepted(const FerrersDiagram& diagram, const LinearMatrixCode& rank_code,
                           const FiberPreference& pref) {
    const auto& field = rank_code.field();
    if (!pref.accept_packed || !field.is_binary() || diagram.vector().size() > gf2::max_cols) {
        std::size_t n = 0;
        for (std::uint64_t i = 0; i < rank_code.size(); ++i) n += pref.accept(lift(diagram, rank_code.codeword(i)));
        return n;
    }

    // Lifting is affine in the filling, so walk the code in Gray order and
    // flip one basis matrix's dots at a time.
    const auto pivots = diagram.vector().support();
    std::vector<gf2::Row> rows(diagram.rows());
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = gf2::Row{1} << pivots[i];
    std::vector<std::vector<gf2::Row>> flips;
    for (const auto& b : rank_code.basis()) {
        std::vector<gf2::Row> f(diagram.rows(), 0);
        for (std::size_t i = 0; i < b.rows(); ++i)
            for (std::size_t c = 0; c < b.cols(); ++c)
                if (b.at(i, c)) f[i] |= gf2::Row{1} << diagram.columns()[c];
        flips.push_back(std::move(f));
    }
    std::size_t n = pref.accept_packed(rows);
    for (std::uint64_t g = 1; g < rank_code.size(); ++g) {
        const auto& f = flips[static_cast<std::size_t>(std::countr_zero(g))];
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] ^= f[i];
        n += pref.accept_packed(rows);
    }
    return n;
}

Fiber preferred_fiber(const Field& field, const IdentifyingVector& v, std::size_t delta,
                      const FiberPreference& pref, std::uint64_t stream) {
    Fiber best = build_fiber(field, v, delta);
    best.info.preferred = static_cast<std::size_t>(std::count_if(best.words.begin(), best.words.end(), pref.accept));

    const auto diagram = diagram_of(v);
    const std::size_t m = diagram.box_rows();
    const std::size_t t = diagram.cols();
    if (m < delta || t < delta) return best;

    std::mt19937_64 rng(pref.seed + stream);
    std::optional<MatrixEquivalence> winner;
    std::size_t winner_trial = 0, winner_score = best.info.preferred;
    for (std::size_t trial = 1; trial < pref.trials && winner_score < best.info.size; ++trial) {
        const auto eq = random_equivalence(field, m, t, rng);
        const auto candidate = ferrers_code(diagram, delta, field, &eq);
        if (candidate.dimension() != best.info.dimension) continue;
        const auto score = count_accepted(diagram, candidate, pref);
        if (score > winner_score) {
            winner = eq;
            winner_trial = trial;
            winner_score = score;
        }
    }
    if (winner) {
        best = build_fiber(field, v, delta, &*winner);
        best.info.trial = winner_trial;
        best.info.preferred = winner_score;
    }
    return best;
}

}  // namespace

SubspaceCode construct_code(const Field& field, std::size_t n, std::size_t k, std::size_t delta,
                            const ConstructOptions& options) {
    if (delta < 1) throw std::invalid_argument("construct_code: delta must be >= 1");
    if (k < 1 || k > n) throw std::invalid_argument("construct_code: need 1 <= k <= n");

    const SkeletonCode skeleton = options.skeleton ? *options.skeleton : lexicode_skeleton(n, k, 2 * delta);
    if (skeleton.length != n || skeleton.weight != k || skeleton.min_distance < 2 * delta)
        throw std::invalid_argument("construct_code: skeleton does not match the requested parameters");
    skeleton.validate();

    SubspaceCode code(field, n, 2 * delta);
    std::vector<FiberInfo> fibers;
    for (std::size_t i = 0; i < skeleton.words.size(); ++i) {
        const auto& v = skeleton.words[i];
        Fiber fiber = options.preference ? preferred_fiber(field, v, delta, *options.preference, i)
                                         : build_fiber(field, v, delta);
        std::size_t added = 0;
        for (auto& w : fiber.words) added += code.add(std::move(w));
        if (added != fiber.info.size) throw std::logic_error("lifted codewords collided across fibers");
        fibers.push_back(fiber.info);
    }
    code.set_fibers(std::move(fibers));
    return code;
}

}  // namespace psc
