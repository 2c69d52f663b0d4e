#pragma once

// Polynomials over Q in the formal power-operation symbols psi_T(x).

#include <compare>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "orbigenus/lattice.hpp"
#include "orbigenus/rational.hpp"

namespace orbigenus {

/// The indeterminate psi_T(family).  psi of the trivial orbit is the
/// degree-one symbol itself and prints as the bare family name.
struct PsiSymbol {
    std::string family;
    TransitiveOrbit orbit;

    std::string to_string() const;

    friend bool operator==(const PsiSymbol&, const PsiSymbol&) = default;
    friend std::strong_ordering operator<=>(const PsiSymbol& a, const PsiSymbol& b)
    {
        if (auto c = a.family <=> b.family; c != 0)
            return c;
        return a.orbit <=> b.orbit;
    }
};

/// A product of symbol powers, kept sorted by symbol with positive exponents.
class Monomial {
public:
    using Factor = std::pair<PsiSymbol, unsigned>;

    Monomial() = default;
    explicit Monomial(PsiSymbol symbol, unsigned exponent = 1);
    /// Merges repeated symbols and drops zero exponents.
    static Monomial from_factors(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    unsigned degree() const;

    std::string to_string() const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        return std::lexicographical_compare_three_way(a.factors_.begin(), a.factors_.end(),
                                                      b.factors_.begin(), b.factors_.end());
    }

private:
    std::vector<Factor> factors_;
};

class PsiPolynomial {
public:
    using Terms = std::map<Monomial, Rational>;

    PsiPolynomial() = default;
    PsiPolynomial(const Rational& constant);
    PsiPolynomial(int constant) : PsiPolynomial(Rational(constant)) {}
    explicit PsiPolynomial(const PsiSymbol& symbol);
    PsiPolynomial(const Monomial& monomial, const Rational& coefficient);

    static PsiPolynomial symbol(const std::string& family, const TransitiveOrbit& orbit)
    {
        return PsiPolynomial(PsiSymbol{family, orbit});
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the empty monomial.
    Rational constant_term() const;
    /// The value when constant, otherwise nullopt.
    std::optional<Rational> as_rational() const;
    Rational coefficient(const Monomial& m) const;

    Rational evaluate(const std::function<Rational(const PsiSymbol&)>& assignment) const;
    Rational evaluate(const std::map<PsiSymbol, Rational>& assignment) const;

    /// E.g. "1/2*x^2 + 1/2*x[1,0;0,2]"; "0" for the zero polynomial.
    std::string to_string() const;

    PsiPolynomial operator-() const;
    PsiPolynomial& operator+=(const PsiPolynomial& rhs);
    PsiPolynomial& operator-=(const PsiPolynomial& rhs);
    PsiPolynomial& operator*=(const PsiPolynomial& rhs);
    PsiPolynomial& operator*=(const Rational& rhs);

    /// this += coefficient * a * b, without forming the intermediate product.
    void add_product(const PsiPolynomial& a, const PsiPolynomial& b, const Rational& coefficient = 1);

    friend PsiPolynomial operator+(PsiPolynomial a, const PsiPolynomial& b) { return a += b; }
    friend PsiPolynomial operator-(PsiPolynomial a, const PsiPolynomial& b) { return a -= b; }
    friend PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b);
    friend PsiPolynomial operator*(PsiPolynomial a, const Rational& b) { return a *= b; }
    friend PsiPolynomial operator*(const Rational& a, PsiPolynomial b) { return b *= a; }

    friend bool operator==(const PsiPolynomial&, const PsiPolynomial&) = default;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PsiPolynomial& p);

inline bool is_zero(const PsiPolynomial& p) { return p.is_zero(); }
/// Inverse of a nonzero constant; nullopt for anything else.
std::optional<PsiPolynomial> unit_inverse(const PsiPolynomial& p);
inline std::string to_string(const PsiPolynomial& p) { return p.to_string(); }

} // namespace orbigenus
