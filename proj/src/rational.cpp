#include "orbigenus/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace orbigenus {

Integer factorial(std::uint64_t n)
{
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Integer binomial(const Integer& n, std::uint64_t k)
{
    Integer result;
    mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), k);
    return result;
}

Integer power(const Integer& base, std::uint64_t exponent)
{
    Integer result;
    mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
    return result;
}

std::string to_string(const Integer& value) { return value.get_str(10); }

Rational::Rational(const Integer& numerator, const Integer& denominator)
{
    if (denominator == 0)
        throw std::domain_error("rational with zero denominator");
    q_ = mpq_class(numerator, denominator);
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto bad = [&] {
        return std::invalid_argument("malformed rational '" + std::string(text) + "'");
    };
    const auto parse_int = [&](std::string_view part, bool allow_sign) {
        std::size_t start = 0;
        if (allow_sign && !part.empty() && part[0] == '-')
            start = 1;
        if (part.size() == start)
            throw bad();
        for (std::size_t i = start; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9')
                throw bad();
        return Integer(std::string(part), 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text, true));
    return Rational(parse_int(text.substr(0, slash), true), parse_int(text.substr(slash + 1), false));
}

std::string Rational::to_string() const
{
    if (is_integer())
        return q_.get_num().get_str(10);
    return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

Rational Rational::operator-() const
{
    Rational r;
    r.q_ = -q_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    q_ += rhs.q_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    q_ -= rhs.q_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    q_ *= rhs.q_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero())
        throw std::domain_error("rational division by zero");
    q_ /= rhs.q_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.to_string(); }

} // namespace orbigenus
