#include "psc/subspace_code.hpp"

#include <stdexcept>

namespace psc {

SubspaceCode::SubspaceCode(Field field, std::size_t ambient, std::size_t claimed_distance)
    : field_(std::move(field)), ambient_(ambient), claimed_distance_(claimed_distance) {}

bool SubspaceCode::add(Subspace s) {
    if (!(s.field() == field_) || s.ambient() != ambient_)
        throw std::invalid_argument("codeword does not live in the code's ambient space");
    if (!index_.insert(s).second) return false;
    words_.push_back(std::move(s));
    return true;
}

std::optional<std::size_t> SubspaceCode::constant_dimension() const {
    if (words_.empty()) return std::nullopt;
    const auto k = words_.front().dimension();
    for (const auto& w : words_)
        if (w.dimension() != k) return std::nullopt;
    return k;
}

std::map<std::size_t, std::size_t> SubspaceCode::dimension_profile() const {
    std::map<std::size_t, std::size_t> profile;
    for (const auto& w : words_) ++profile[w.dimension()];
    return profile;
}

}  // namespace psc
