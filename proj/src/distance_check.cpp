#include "psc/distance_check.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <random>
#include <stdexcept>
#include <thread>

#include "psc/ferrers.hpp"
#include "psc/rank_metric.hpp"

namespace psc {

namespace {

DistanceReport finish(std::optional<std::size_t> minimum, std::uint64_t pairs, bool exhaustive,
                      std::optional<std::size_t> expect) {
    DistanceReport r;
    r.minimum = minimum;
    r.pairs = pairs;
    r.exhaustive = exhaustive;
    if (expect) {
        r.pass = minimum && *minimum >= *expect;
        r.equal = minimum && *minimum == *expect;
    }
    return r;
}

}  // namespace

DistanceReport verify_min_distance(const SubspaceCode& code, std::optional<std::size_t> expect, unsigned workers) {
    const std::uint64_t n = code.size();
    if (n < 2) throw std::invalid_argument("verify_min_distance: need at least two codewords");
    const std::uint64_t pairs = n * (n - 1) / 2;
    if (pairs > max_exhaustive_pairs) throw std::length_error("verify_min_distance: too many pairs for a full scan");

    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n));

    const auto& words = code.words();
    std::vector<std::size_t> local(workers, std::numeric_limits<std::size_t>::max());
    auto scan = [&](unsigned w) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        // Interleaved rows keep the triangular workload balanced.
        for (std::size_t i = w; i < words.size(); i += workers)
            for (std::size_t j = i + 1; j < words.size(); ++j) best = std::min(best, subspace_distance(words[i], words[j]));
        local[w] = best;
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned w = 0; w < workers; ++w) threads.emplace_back(scan, w);
        for (auto& t : threads) t.join();
    }
    return finish(*std::min_element(local.begin(), local.end()), pairs, true, expect);
}

DistanceReport sample_min_distance(const SubspaceCode& code, std::optional<std::size_t> expect,
                                   std::uint64_t samples, std::uint64_t seed) {
    const std::uint64_t n = code.size();
    if (n < 2) throw std::invalid_argument("sample_min_distance: need at least two codewords");
    std::mt19937_64 rng(seed);
    std::optional<std::size_t> best;
    for (std::uint64_t s = 0; s < samples; ++s) {
        const auto i = rng() % n;
        auto j = rng() % (n - 1);
        if (j >= i) ++j;
        const auto d = subspace_distance(code.words()[i], code.words()[j]);
        if (!best || d < *best) best = d;
    }
    return finish(best, samples, false, expect);
}

LemmaReport verify_lifting_distances(const SubspaceCode& code, std::optional<std::uint64_t> samples,
                                     std::uint64_t seed) {
    if (code.empty()) return {};
    if (!code.constant_dimension()) throw std::invalid_argument("verify_lifting_distances: code is not constant-dimension");

    const auto& words = code.words();
    std::map<IdentifyingVector, FerrersDiagram> diagrams;
    std::vector<IdentifyingVector> ids;
    std::vector<GFMatrix> fillings;
    ids.reserve(words.size());
    fillings.reserve(words.size());
    for (const auto& w : words) {
        auto v = identifying_vector(w);
        auto it = diagrams.find(v);
        if (it == diagrams.end()) it = diagrams.emplace(v, diagram_of(v)).first;
        fillings.push_back(filling_of(it->second, w));
        ids.push_back(std::move(v));
    }

    LemmaReport report;
    auto check = [&](std::size_t i, std::size_t j) {
        ++report.pairs;
        const auto ds = subspace_distance(words[i], words[j]);
        std::string why;
        if (ids[i] == ids[j]) {
            ++report.same_fiber_pairs;
            const auto dr = rank_distance(fillings[i], fillings[j]);
            if (ds != 2 * dr)
                why = "same fiber " + ids[i].to_string() + ": d_S=" + std::to_string(ds) +
                      " but 2 d_R=" + std::to_string(2 * dr);
        } else {
            ++report.cross_fiber_pairs;
            const auto dh = hamming_distance(ids[i], ids[j]);
            if (ds < dh)
                why = ids[i].to_string() + " vs " + ids[j].to_string() + ": d_S=" + std::to_string(ds) +
                      " < d_H=" + std::to_string(dh);
        }
        if (!why.empty()) {
            ++report.violations;
            if (report.examples.size() < 5)
                report.examples.push_back("#" + std::to_string(i + 1) + ",#" + std::to_string(j + 1) + " " + why);
        }
    };

    if (samples) {
        if (words.size() < 2) return report;
        std::mt19937_64 rng(seed);
        const std::uint64_t n = words.size();
        for (std::uint64_t s = 0; s < *samples; ++s) {
            const auto i = rng() % n;
            auto j = rng() % (n - 1);
            if (j >= i) ++j;
            check(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    } else {
        for (std::size_t i = 0; i < words.size(); ++i)
            for (std::size_t j = i + 1; j < words.size(); ++j) check(i, j);
    }
    return report;
}

}  // namespace psc
