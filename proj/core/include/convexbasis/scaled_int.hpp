#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <utility>

namespace cvb {

// Exact value at the run's fixed denominator: the rational represented is
// num / D, with D owned by the ambient Params. Two ScaledInt under the same
// Params compare by plain integer comparison of the numerators -- no
// rounding anywhere. Mixing values from different Params is a contract
// violation the type cannot detect.
struct ScaledInt {
    mpz_class num;

    ScaledInt() : num(0) {}
    explicit ScaledInt(mpz_class v) : num(std::move(v)) {}
    explicit ScaledInt(long v) : num(v) {}

    friend bool operator==(const ScaledInt& a, const ScaledInt& b) {
        return ::cmp(a.num, b.num) == 0;
    }
    friend std::strong_ordering operator<=>(const ScaledInt& a, const ScaledInt& b) {
        const int c = ::cmp(a.num, b.num);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    ScaledInt operator+(const ScaledInt& o) const { return ScaledInt(mpz_class(num + o.num)); }
    ScaledInt operator-(const ScaledInt& o) const { return ScaledInt(mpz_class(num - o.num)); }

    // Decimal string of the numerator; this is the serialized form (the
    // denominator D is recorded once per run in the manifest).
    std::string str() const { return num.get_str(); }
};

// Total order on same-Params values.
inline std::strong_ordering cmp(const ScaledInt& a, const ScaledInt& b) { return a <=> b; }

}  // namespace cvb
