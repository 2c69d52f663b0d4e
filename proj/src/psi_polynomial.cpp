#include "orbigenus/psi_polynomial.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace orbigenus {

std::string PsiSymbol::to_string() const
{
    if (orbit.is_trivial())
        return family;
    return family + orbit.to_string();
}

Monomial::Monomial(PsiSymbol symbol, unsigned exponent)
{
    if (exponent > 0)
        factors_.emplace_back(std::move(symbol), exponent);
}

Monomial Monomial::from_factors(std::vector<Factor> factors)
{
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (auto& f : factors) {
        if (f.second == 0)
            continue;
        if (!m.factors_.empty() && m.factors_.back().first == f.first)
            m.factors_.back().second += f.second;
        else
            m.factors_.push_back(std::move(f));
    }
    return m;
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

std::string Monomial::to_string() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [symbol, exponent] : factors_) {
        if (!out.empty())
            out += '*';
        out += symbol.to_string();
        if (exponent > 1)
            out += '^' + std::to_string(exponent);
    }
    return out;
}

Monomial operator*(const Monomial& a, const Monomial& b)
{
    Monomial out;
    out.factors_.reserve(a.factors_.size() + b.factors_.size());
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() && j != b.factors_.end()) {
        const auto c = i->first <=> j->first;
        if (c < 0)
            out.factors_.push_back(*i++);
        else if (c > 0)
            out.factors_.push_back(*j++);
        else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    out.factors_.insert(out.factors_.end(), i, a.factors_.end());
    out.factors_.insert(out.factors_.end(), j, b.factors_.end());
    return out;
}

PsiPolynomial::PsiPolynomial(const Rational& constant)
{
    if (!constant.is_zero())
        terms_.emplace(Monomial(), constant);
}

PsiPolynomial::PsiPolynomial(const PsiSymbol& symbol) { terms_.emplace(Monomial(symbol), Rational(1)); }

PsiPolynomial::PsiPolynomial(const Monomial& monomial, const Rational& coefficient)
{
    if (!coefficient.is_zero())
        terms_.emplace(monomial, coefficient);
}

bool PsiPolynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational PsiPolynomial::constant_term() const { return coefficient(Monomial()); }

std::optional<Rational> PsiPolynomial::as_rational() const
{
    if (!is_constant())
        return std::nullopt;
    return constant_term();
}

Rational PsiPolynomial::coefficient(const Monomial& m) const
{
    const auto it = terms_.find(m);
    return it == terms_.end() ? Rational() : it->second;
}

Rational PsiPolynomial::evaluate(const std::function<Rational(const PsiSymbol&)>& assignment) const
{
    Rational total;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [symbol, exponent] : m.factors()) {
            const Rational v = assignment(symbol);
            for (unsigned e = 0; e < exponent; ++e)
                term *= v;
        }
        total += term;
    }
    return total;
}

Rational PsiPolynomial::evaluate(const std::map<PsiSymbol, Rational>& assignment) const
{
    return evaluate([&](const PsiSymbol& s) {
        const auto it = assignment.find(s);
        if (it == assignment.end())
            throw std::invalid_argument("evaluate: no value for symbol " + s.to_string());
        return it->second;
    });
}

std::string PsiPolynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational shown = c;
        if (first) {
            if (c.sign() < 0) {
                os << '-';
                shown = -c;
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0)
                shown = -c;
        }
        first = false;
        if (m.is_one())
            os << shown;
        else if (shown.is_one())
            os << m.to_string();
        else
            os << shown << '*' << m.to_string();
    }
    return os.str();
}

void PsiPolynomial::add_term(const Monomial& m, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

PsiPolynomial PsiPolynomial::operator-() const
{
    PsiPolynomial out = *this;
    for (auto& [m, c] : out.terms_)
        c = -c;
    return out;
}

PsiPolynomial& PsiPolynomial::operator+=(const PsiPolynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

PsiPolynomial& PsiPolynomial::operator-=(const PsiPolynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

PsiPolynomial& PsiPolynomial::operator*=(const PsiPolynomial& rhs)
{
    *this = *this * rhs;
    return *this;
}

PsiPolynomial& PsiPolynomial::operator*=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_)
        c *= rhs;
    return *this;
}

void PsiPolynomial::add_product(const PsiPolynomial& a, const PsiPolynomial& b, const Rational& coefficient)
{
    if (coefficient.is_zero())
        return;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            add_term(ma * mb, coefficient * ca * cb);
}

PsiPolynomial operator*(const PsiPolynomial& a, const PsiPolynomial& b)
{
    PsiPolynomial out;
    out.add_product(a, b);
    return out;
}

std::ostream& operator<<(std::ostream& os, const PsiPolynomial& p) { return os << p.to_string(); }

std::optional<PsiPolynomial> unit_inverse(const PsiPolynomial& p)
{
    const auto value = p.as_rational();
    if (!value || value->is_zero())
        return std::nullopt;
    return PsiPolynomial(Rational(1) / *value);
}

} // namespace orbigenus
