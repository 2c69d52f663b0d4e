#pragma once

// Exact integers and rationals.  Integers are GMP integers; rationals are a
// thin value wrapper around mpq_class that keeps every value reduced with a
// positive denominator.

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace orbigenus {

using Integer = mpz_class;

Integer factorial(std::uint64_t n);
Integer binomial(const Integer& n, std::uint64_t k);
Integer power(const Integer& base, std::uint64_t exponent);
std::string to_string(const Integer& value);

class Rational {
public:
    Rational() = default;
    Rational(long value) : q_(value) {}
    Rational(int value) : q_(value) {}
    Rational(unsigned long value) : q_(value) {}
    Rational(unsigned value) : q_(value) {}
    Rational(const Integer& value) : q_(value) {}
    /// Throws std::domain_error on a zero denominator.
    Rational(const Integer& numerator, const Integer& denominator);

    /// Parses "num" or "num/den" (optional leading '-').
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// "num/den", den omitted when 1.
    std::string to_string() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    /// Throws std::domain_error on division by zero.
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b)
    {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

inline std::string to_string(const Rational& value) { return value.to_string(); }

// Ring hooks shared with PsiPolynomial; used by the generic series and
// class-function code.
inline bool is_zero(const Rational& value) { return value.is_zero(); }
inline std::optional<Rational> unit_inverse(const Rational& value)
{
    if (value.is_zero())
        return std::nullopt;
    return Rational(1) / value;
}

} // namespace orbigenus
