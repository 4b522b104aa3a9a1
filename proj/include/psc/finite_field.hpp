#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace psc {

class FieldElement;

/**
 * Finite field GF(p^e) with elements encoded as integers in [0, q).
 *
 * The integer c_0 + c_1 p + ... + c_{e-1} p^{e-1} stands for the residue
 * c_0 + c_1 x + ... + c_{e-1} x^{e-1} modulo the field's modulus polynomial,
 * so 0 and 1 are the additive and multiplicative identities and p^j is x^j.
 *
 * Field is a cheap handle to immutable shared state. Two handles compare
 * equal when they describe the same (p, e, modulus).
 */
class Field {
public:
    using Value = std::uint32_t;

    static constexpr std::uint32_t max_order = 1u << 16;

    /// Builds GF(p^e). `modulus` lists coefficients from x^0 up to x^e and must
    /// be monic and irreducible; when omitted the pinned default is used.
    /// Throws std::invalid_argument for a non-prime p, a reducible or
    /// malformed modulus, or q > 2^16.
    static Field make(std::uint32_t p, std::uint32_t e = 1,
                      std::optional<std::vector<Value>> modulus = std::nullopt);

    /// Resolves q = p^e and builds the field with the default modulus.
    static Field of_order(std::uint32_t q);

    /// Lexicographically least monic irreducible of degree e over GF(p),
    /// compared by the integer encoding of the low-order coefficients.
    static std::vector<Value> default_modulus(std::uint32_t p, std::uint32_t e);

    std::uint32_t characteristic() const;
    std::uint32_t degree() const;
    std::uint32_t order() const;
    const std::vector<Value>& modulus() const;
    bool is_binary() const { return order() == 2; }

    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const;
    Value neg(Value a) const;
    Value mul(Value a, Value b) const;
    /// Throws std::domain_error for zero.
    Value inv(Value a) const;
    Value pow(Value a, std::uint64_t exponent) const;

    FieldElement element(Value v) const;
    FieldElement zero() const;
    FieldElement one() const;
    /// All q elements in canonical order 0, 1, ..., q-1.
    std::vector<FieldElement> elements() const;

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b);

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Value-type field element. Arithmetic between elements of different fields
/// throws std::domain_error.
class FieldElement {
public:
    FieldElement(Field field, Field::Value value);

    const Field& field() const { return field_; }
    Field::Value value() const { return value_; }
    bool is_zero() const { return value_ == 0; }

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a);
    friend bool operator==(const FieldElement& a, const FieldElement& b);

private:
    Field field_;
    Field::Value value_;
};

/// Coordinates of an element of `ext` = GF(p^m) over the prime field `base`
/// in the polynomial basis {1, x, ..., x^{m-1}}. Throws std::invalid_argument
/// when base is not the prime subfield of ext.
std::vector<Field::Value> field_embed(const Field& base, const Field& ext, const FieldElement& element);

/// Same as field_embed on a raw value of `ext`.
std::vector<Field::Value> coordinates_over_prime(const Field& ext, Field::Value value);

bool is_prime(std::uint32_t n);

}  // namespace psc
