#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace psc {

/// Fixed-length vector over {0,1}. Position 0 is the leftmost character of the
/// string form, so "0110100" has ones at positions 1, 2 and 4.
class BinaryVector {
public:
    BinaryVector() = default;
    explicit BinaryVector(std::size_t length) : bits_(length, 0) {}

    /// Throws std::invalid_argument on characters other than '0' and '1'.
    static BinaryVector from_string(std::string_view text);
    static BinaryVector from_support(std::size_t length, const std::vector<std::size_t>& ones);

    std::size_t size() const { return bits_.size(); }
    bool operator[](std::size_t i) const { return bits_[i] != 0; }
    void set(std::size_t i, bool value) { bits_.at(i) = value ? 1 : 0; }

    std::size_t weight() const;
    std::vector<std::size_t> support() const;
    std::string to_string() const;

    friend bool operator==(const BinaryVector&, const BinaryVector&) = default;
    friend auto operator<=>(const BinaryVector&, const BinaryVector&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

// Weight k identifying vector of a k-dimensional subspace.
using IdentifyingVector = BinaryVector;

std::size_t hamming_distance(const BinaryVector& u, const BinaryVector& v);

}  // namespace psc

template <>
struct std::hash<psc::BinaryVector> {
    std::size_t operator()(const psc::BinaryVector& v) const noexcept {
        return std::hash<std::string>{}(v.to_string());
    }
};
