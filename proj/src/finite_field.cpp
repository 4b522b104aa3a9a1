#include "psc/finite_field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace psc {

namespace {

using Poly = std::vector<Field::Value>;  // coefficients, x^0 first

// Pinned binary moduli, bit i = coefficient of x^i.
constexpr std::uint32_t kBinaryModuli[] = {
    0,
    0b10,         // x
    0b111,        // x^2+x+1
    0b1011,       // x^3+x+1
    0b10011,      // x^4+x+1
    0b100101,     // x^5+x^2+1
    0b1000011,    // x^6+x+1
    0b10000011,   // x^7+x+1
    0b100011011,  // x^8+x^4+x^3+x+1
};

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const std::uint32_t lead = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i <= dm; ++i)
            a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
        trim(a);
    }
    return a;
}

bool is_irreducible(const Poly& m, std::uint32_t p) {
    const std::size_t e = m.size() - 1;
    if (e <= 1) return true;
    for (std::size_t d = 1; d <= e / 2; ++d) {
        std::uint64_t combos = 1;
        for (std::size_t i = 0; i < d; ++i) combos *= p;
        for (std::uint64_t low = 0; low < combos; ++low) {
            Poly divisor(d + 1);
            auto rest = low;
            for (std::size_t i = 0; i < d; ++i) {
                divisor[i] = static_cast<Field::Value>(rest % p);
                rest /= p;
            }
            divisor[d] = 1;
            if (poly_mod(m, divisor, p).empty()) return false;
        }
    }
    return true;
}

std::uint64_t checked_order(std::uint32_t p, std::uint32_t e) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > Field::max_order) throw std::invalid_argument("field order exceeds 2^16");
    }
    return q;
}

}  // namespace

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

struct Field::Impl {
    std::uint32_t p = 2;
    std::uint32_t e = 1;
    std::uint32_t q = 2;
    Poly modulus;
    std::uint32_t binary_modulus = 0;      // p == 2 only
    std::vector<std::uint16_t> mul_table;  // q <= 256
    std::vector<std::uint16_t> inv_table;  // q <= 256

    Value mul_slow(Value a, Value b) const {
        if (e == 1) return static_cast<Value>((static_cast<std::uint64_t>(a) * b) % p);
        if (p == 2) {
            std::uint32_t r = 0;
            while (b) {
                if (b & 1u) r ^= a;
                b >>= 1;
                a <<= 1;
                if (a & (1u << e)) a ^= binary_modulus;
            }
            return r;
        }
        Poly pa = digits(a), pb = digits(b), prod(2 * e, 0);
        for (std::uint32_t i = 0; i < e; ++i)
            for (std::uint32_t j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + pa[i] * pb[j]) % p;
        return encode(poly_mod(prod, modulus, p));
    }

    Poly digits(Value a) const {
        Poly d(e, 0);
        for (std::uint32_t i = 0; i < e; ++i) {
            d[i] = a % p;
            a /= p;
        }
        return d;
    }

    Value encode(const Poly& d) const {
        Value v = 0;
        for (std::size_t i = d.size(); i-- > 0;) v = v * p + d[i];
        return v;
    }
};

Field Field::make(std::uint32_t p, std::uint32_t e, std::optional<std::vector<Value>> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
    const auto q = static_cast<std::uint32_t>(checked_order(p, e));

    Poly mod = modulus ? *modulus : default_modulus(p, e);
    if (mod.size() != e + 1 || mod.back() != 1)
        throw std::invalid_argument("modulus must be monic of degree " + std::to_string(e));
    for (auto c : mod)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(mod, p)) throw std::invalid_argument("modulus polynomial is reducible");

    static std::mutex registry_mutex;
    static std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>, std::shared_ptr<const Impl>> registry;
    std::lock_guard lock(registry_mutex);
    auto key = std::make_tuple(p, e, mod);
    if (auto it = registry.find(key); it != registry.end()) return Field(it->second);

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->e = e;
    impl->q = q;
    impl->modulus = mod;
    if (p == 2)
        for (std::uint32_t i = 0; i <= e; ++i)
            if (mod[i]) impl->binary_modulus |= 1u << i;
    if (q <= 256) {
        impl->mul_table.resize(static_cast<std::size_t>(q) * q);
        impl->inv_table.assign(q, 0);
        for (Value a = 0; a < q; ++a)
            for (Value b = 0; b < q; ++b) {
                const Value c = impl->mul_slow(a, b);
                impl->mul_table[static_cast<std::size_t>(a) * q + b] = static_cast<std::uint16_t>(c);
                if (c == 1) impl->inv_table[a] = static_cast<std::uint16_t>(b);
            }
    }
    registry.emplace(key, impl);
    return Field(impl);
}

Field Field::of_order(std::uint32_t q) {
    for (std::uint32_t p = 2; p <= q; ++p) {
        if (!is_prime(p) || q % p != 0) continue;
        std::uint32_t e = 0;
        for (auto r = q; r > 1; r /= p) {
            if (r % p != 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
            ++e;
        }
        return make(p, e);
    }
    throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
}

std::vector<Field::Value> Field::default_modulus(std::uint32_t p, std::uint32_t e) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic is not prime");
    if (e < 1) throw std::invalid_argument("field extension degree must be >= 1");
    const auto q = checked_order(p, e);
    if (p == 2 && e < std::size(kBinaryModuli)) {
        Poly m(e + 1);
        for (std::uint32_t i = 0; i <= e; ++i) m[i] = (kBinaryModuli[e] >> i) & 1u;
        return m;
    }
    for (std::uint64_t low = 0; low < q; ++low) {
        Poly m(e + 1);
        auto rest = low;
        for (std::uint32_t i = 0; i < e; ++i) {
            m[i] = static_cast<Value>(rest % p);
            rest /= p;
        }
        m[e] = 1;
        if (is_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->e; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<Field::Value>& Field::modulus() const { return impl_->modulus; }

Field::Value Field::add(Value a, Value b) const {
    const auto& f = *impl_;
    if (f.p == 2) return a ^ b;
    if (f.e == 1) return (a + b) % f.p;
    Value out = 0, scale = 1;
    for (std::uint32_t i = 0; i < f.e; ++i) {
        out += ((a % f.p + b % f.p) % f.p) * scale;
        a /= f.p;
        b /= f.p;
        scale *= f.p;
    }
    return out;
}

Field::Value Field::neg(Value a) const {
    const auto& f = *impl_;
    if (f.p == 2) return a;
    if (f.e == 1) return (f.p - a) % f.p;
    Value out = 0, scale = 1;
    for (std::uint32_t i = 0; i < f.e; ++i) {
        out += ((f.p - a % f.p) % f.p) * scale;
        a /= f.p;
        scale *= f.p;
    }
    return out;
}

Field::Value Field::sub(Value a, Value b) const { return add(a, neg(b)); }

Field::Value Field::mul(Value a, Value b) const {
    const auto& f = *impl_;
    if (!f.mul_table.empty()) return f.mul_table[static_cast<std::size_t>(a) * f.q + b];
    return f.mul_slow(a, b);
}

Field::Value Field::inv(Value a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    const auto& f = *impl_;
    if (!f.inv_table.empty()) return f.inv_table[a];
    return pow(a, f.q - 2);
}

Field::Value Field::pow(Value a, std::uint64_t exponent) const {
    Value result = 1;
    while (exponent) {
        if (exponent & 1u) result = mul(result, a);
        a = mul(a, a);
        exponent >>= 1;
    }
    return result;
}

FieldElement Field::element(Value v) const {
    if (v >= order()) throw std::out_of_range("field element out of range");
    return FieldElement(*this, v);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }

std::vector<FieldElement> Field::elements() const {
    std::vector<FieldElement> out;
    out.reserve(order());
    for (Value v = 0; v < order(); ++v) out.emplace_back(*this, v);
    return out;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "GF(" << order() << ")";
    if (degree() > 1) {
        os << " mod ";
        bool first = true;
        for (std::size_t i = impl_->modulus.size(); i-- > 0;) {
            const auto c = impl_->modulus[i];
            if (c == 0) continue;
            if (!first) os << '+';
            first = false;
            if (c != 1 || i == 0) os << c;
            if (i >= 1) os << 'x';
            if (i >= 2) os << '^' << i;
        }
    }
    return os.str();
}

bool operator==(const Field& a, const Field& b) {
    if (a.impl_ == b.impl_) return true;
    return a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->modulus == b.impl_->modulus;
}

FieldElement::FieldElement(Field field, Field::Value value) : field_(std::move(field)), value_(value) {}

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
    if (!(a.field() == b.field())) throw std::domain_error("mixing elements of different fields");
}
}  // namespace

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_)}; }
FieldElement FieldElement::pow(std::uint64_t exponent) const { return {field_, field_.pow(value_, exponent)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return {a.field_, a.field_.mul(a.value_, a.field_.inv(b.value_))};
}
FieldElement operator-(const FieldElement& a) { return {a.field_, a.field_.neg(a.value_)}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
    require_same(a, b);
    return a.value_ == b.value_;
}

std::vector<Field::Value> coordinates_over_prime(const Field& ext, Field::Value value) {
    std::vector<Field::Value> out(ext.degree());
    for (auto& c : out) {
        c = value % ext.characteristic();
        value /= ext.characteristic();
    }
    return out;
}

std::vector<Field::Value> field_embed(const Field& base, const Field& ext, const FieldElement& element) {
    if (base.degree() != 1 || base.characteristic() != ext.characteristic())
        throw std::invalid_argument("field_embed: base must be the prime subfield of the extension");
    if (!(element.field() == ext)) throw std::invalid_argument("field_embed: element does not belong to the extension");
    return coordinates_over_prime(ext, element.value());
}

}  // namespace psc
