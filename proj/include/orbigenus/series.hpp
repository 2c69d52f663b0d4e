#pragma once

// Truncated power series in one variable t over an exact coefficient ring.
//
// A series of precision N stores the coefficients of t^0..t^N and stands for
// the class of a power series modulo t^(N+1).  Binary operations truncate to
// the smaller precision.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "orbigenus/psi_polynomial.hpp"
#include "orbigenus/rational.hpp"

namespace orbigenus {

/// Commutative ring with exact Q-scaling.  Zero is the default value.
template <typename R>
concept CoefficientRing = std::regular<R> && requires(R a, const R& b, const Rational& q) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { b * q } -> std::convertible_to<R>;
    { -b } -> std::convertible_to<R>;
    { R(q) };
    { is_zero(b) } -> std::convertible_to<bool>;
    { unit_inverse(b) } -> std::convertible_to<std::optional<R>>;
};

template <CoefficientRing R>
class TruncatedSeries {
public:
    /// The zero series of the given precision.
    explicit TruncatedSeries(std::size_t precision = 0) : coeffs_(precision + 1) {}

    /// Pads with zeros or truncates to precision + 1 coefficients.
    TruncatedSeries(std::vector<R> coeffs, std::size_t precision) : coeffs_(std::move(coeffs))
    {
        coeffs_.resize(precision + 1);
    }

    static TruncatedSeries constant(const R& c, std::size_t precision)
    {
        TruncatedSeries s(precision);
        s.coeffs_[0] = c;
        return s;
    }
    static TruncatedSeries one(std::size_t precision) { return constant(R(Rational(1)), precision); }
    /// c * t^n (zero if n > precision).
    static TruncatedSeries monomial(const R& c, std::size_t n, std::size_t precision)
    {
        TruncatedSeries s(precision);
        if (n <= precision)
            s.coeffs_[n] = c;
        return s;
    }

    std::size_t precision() const { return coeffs_.size() - 1; }
    const R& operator[](std::size_t n) const { return coeffs_.at(n); }
    const std::vector<R>& coefficients() const { return coeffs_; }

    TruncatedSeries truncated(std::size_t precision) const
    {
        return TruncatedSeries(std::vector<R>(coeffs_.begin(), coeffs_.begin() + std::min(precision, this->precision()) + 1),
                               std::min(precision, this->precision()));
    }

    TruncatedSeries operator-() const
    {
        TruncatedSeries out = *this;
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.precision(), b.precision());
        TruncatedSeries out(n);
        for (std::size_t i = 0; i <= n; ++i)
            out.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return out;
    }

    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return a + (-b); }

    /// Cauchy product up to the smaller precision.
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
    {
        const std::size_t n = std::min(a.precision(), b.precision());
        TruncatedSeries out(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i]))
                continue;
            for (std::size_t j = 0; i + j <= n; ++j)
                if (!is_zero(b.coeffs_[j]))
                    out.coeffs_[i + j] = out.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return out;
    }

    friend TruncatedSeries operator*(TruncatedSeries a, const Rational& q)
    {
        for (auto& c : a.coeffs_)
            c = c * q;
        return a;
    }

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// f(t) -> f(-t).
    TruncatedSeries negate_variable() const
    {
        TruncatedSeries out = *this;
        for (std::size_t i = 1; i < out.coeffs_.size(); i += 2)
            out.coeffs_[i] = -out.coeffs_[i];
        return out;
    }

    /// t d/dt: the coefficient of t^n is multiplied by n.
    TruncatedSeries t_ddt() const
    {
        TruncatedSeries out(precision());
        for (std::size_t n = 1; n < coeffs_.size(); ++n)
            out.coeffs_[n] = coeffs_[n] * Rational(static_cast<unsigned long>(n));
        return out;
    }

private:
    std::vector<R> coeffs_;
};

/// exp of a series with zero constant term, via n*b_n = sum_k k*a_k*b_(n-k).
template <CoefficientRing R>
TruncatedSeries<R> series_exp(const TruncatedSeries<R>& a)
{
    if (!is_zero(a[0]))
        throw std::domain_error("series_exp: constant term must be zero");
    const std::size_t n = a.precision();
    std::vector<R> b(n + 1);
    b[0] = R(Rational(1));
    for (std::size_t m = 1; m <= n; ++m) {
        R acc;
        for (std::size_t k = 1; k <= m; ++k)
            if (!is_zero(a[k]) && !is_zero(b[m - k]))
                acc = acc + (a[k] * b[m - k]) * Rational(static_cast<unsigned long>(k));
        b[m] = acc * Rational(Integer(1), Integer(static_cast<unsigned long>(m)));
    }
    return TruncatedSeries<R>(std::move(b), n);
}

/// log of a series with constant term 1, via n*a_n = sum_k k*c_k*a_(n-k).
template <CoefficientRing R>
TruncatedSeries<R> series_log(const TruncatedSeries<R>& a)
{
    if (!(a[0] == R(Rational(1))))
        throw std::domain_error("series_log: constant term must be 1");
    const std::size_t n = a.precision();
    std::vector<R> c(n + 1);
    for (std::size_t m = 1; m <= n; ++m) {
        R acc = a[m] * Rational(static_cast<unsigned long>(m));
        for (std::size_t k = 1; k < m; ++k)
            if (!is_zero(c[k]) && !is_zero(a[m - k]))
                acc = acc - (c[k] * a[m - k]) * Rational(static_cast<unsigned long>(k));
        c[m] = acc * Rational(Integer(1), Integer(static_cast<unsigned long>(m)));
    }
    return TruncatedSeries<R>(std::move(c), n);
}

/// Multiplicative inverse; the constant term must be a unit.
template <CoefficientRing R>
TruncatedSeries<R> series_invert(const TruncatedSeries<R>& a)
{
    const std::optional<R> inv0 = unit_inverse(a[0]);
    if (!inv0)
        throw std::domain_error("series_invert: constant term is not a unit");
    const std::size_t n = a.precision();
    std::vector<R> b(n + 1);
    b[0] = *inv0;
    for (std::size_t m = 1; m <= n; ++m) {
        R acc;
        for (std::size_t k = 1; k <= m; ++k)
            if (!is_zero(a[k]) && !is_zero(b[m - k]))
                acc = acc + a[k] * b[m - k];
        b[m] = -(acc * *inv0);
    }
    return TruncatedSeries<R>(std::move(b), n);
}

template <CoefficientRing R>
TruncatedSeries<R> series_mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b)
{
    return a * b;
}

template <CoefficientRing R>
TruncatedSeries<R> series_t_ddt(const TruncatedSeries<R>& a)
{
    return a.t_ddt();
}

using RationalSeries = TruncatedSeries<Rational>;
using PsiSeries = TruncatedSeries<PsiPolynomial>;

} // namespace orbigenus
