#include "psc/binary_vector.hpp"

#include <algorithm>
#include <stdexcept>

namespace psc {

BinaryVector BinaryVector::from_string(std::string_view text) {
    BinaryVector v(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] != '0' && text[i] != '1')
            throw std::invalid_argument("binary vector: unexpected character '" + std::string(1, text[i]) + "'");
        v.bits_[i] = text[i] == '1' ? 1 : 0;
    }
    return v;
}

BinaryVector BinaryVector::from_support(std::size_t length, const std::vector<std::size_t>& ones) {
    BinaryVector v(length);
    for (auto i : ones) v.set(i, true);
    return v;
}

std::size_t BinaryVector::weight() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::vector<std::size_t> BinaryVector::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) out.push_back(i);
    return out;
}

std::string BinaryVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i]) s[i] = '1';
    return s;
}

std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v) {
    if (u.size() != v.size()) throw std::invalid_argument("hamming_distance: length mismatch");
    std::size_t d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != v[i];
    return d;
}

}  // namespace psc
