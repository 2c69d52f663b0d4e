#include "orbigenus/genus.hpp"

#include <stdexcept>

namespace orbigenus {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace

Coefficient GenusModel::psi(const TransitiveOrbit& orbit) const
{
    return std::visit(overloaded{
                          [&](const SymbolicModel& m) {
                              Coefficient sum;
                              for (const auto& family : m.families)
                                  sum += Coefficient::symbol(family, orbit);
                              return sum;
                          },
                          [&](const IntegerModel& m) { return Coefficient(Rational(m.d)); },
                          [&](const TableModel& m) {
                              const auto it = m.psi.find(orbit);
                              if (it == m.psi.end())
                                  throw std::out_of_range("table model has no psi value for orbit " +
                                                          orbit.to_string());
                              return Coefficient(it->second);
                          },
                      },
                      model_);
}

std::string GenusModel::describe() const
{
    return std::visit(overloaded{
                          [](const SymbolicModel& m) {
                              std::string out = "symbolic";
                              for (std::size_t i = 0; i < m.families.size(); ++i)
                                  out += (i ? "+" : ":") + m.families[i];
                              return out;
                          },
                          [](const IntegerModel& m) { return "integer:" + to_string(m.d); },
                          [](const TableModel& m) { return "table(" + std::to_string(m.psi.size()) + " orbits)"; },
                      },
                      model_);
}

Coefficient psi_alpha(const GenusModel& model, const OrbitTypeMultiset& type)
{
    Coefficient result(Rational(1));
    for (const auto& [orbit, mult] : type.entries()) {
        const Coefficient value = model.psi(orbit);
        for (std::uint32_t i = 0; i < mult; ++i)
            result = result * value;
    }
    return result;
}

Coefficient sigma_n(const GenusModel& model, std::uint64_t n, int h, const OrderMode& mode)
{
    const auto list = class_list(h, n, mode);
    Coefficient total;
    for (std::size_t i = 0; i < list->size(); ++i)
        total += psi_alpha(model, (*list)[i]) * list->weight(i);
    return total;
}

PsiSeries total_symmetric_power(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode)
{
    std::vector<Coefficient> coeffs;
    for (std::uint64_t n = 0; n <= precision; ++n)
        coeffs.push_back(sigma_n(model, n, h, mode));
    return PsiSeries(std::move(coeffs), precision);
}

Coefficient hecke_operator(const GenusModel& model, int h, const OrderMode& mode, std::uint64_t n)
{
    if (n < 1)
        throw std::invalid_argument("hecke_operator: n must be >= 1");
    if (!mode.admits(n))
        throw std::invalid_argument("hecke_operator: " + std::to_string(n) + " is not a power of " +
                                    std::to_string(mode.prime()));
    Coefficient sum;
    for (const auto& orbit : enumerate_orbits(h, n, mode))
        sum += model.psi(orbit);
    return sum * Rational(Integer(1), Integer(static_cast<unsigned long>(n)));
}

PsiSeries exponential_side(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode)
{
    std::vector<Coefficient> exponent(precision + 1);
    for (std::uint64_t n = 1; n <= precision; ++n)
        if (mode.admits(n))
            exponent[n] = hecke_operator(model, h, mode, n);
    return series_exp(PsiSeries(std::move(exponent), precision));
}

GenusSeriesReport verify_dmvv(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode)
{
    auto lhs = total_symmetric_power(model, precision, h, mode);
    auto rhs = exponential_side(model, precision, h, mode);
    std::optional<std::size_t> mismatch;
    for (std::size_t n = 0; n <= precision; ++n)
        if (!(lhs[n] == rhs[n])) {
            mismatch = n;
            break;
        }
    return GenusSeriesReport{h, mode, std::move(lhs), std::move(rhs), precision, !mismatch, mismatch};
}

std::vector<Coefficient> hecke_from_log(const PsiSeries& s)
{
    const auto log_s = series_log(s);
    return {log_s.coefficients().begin() + 1, log_s.coefficients().end()};
}

PsiSeries lambda_operations(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode)
{
    return series_invert(total_symmetric_power(model, precision, h, mode).negate_variable());
}

std::vector<Coefficient> adams_operations(const PsiSeries& s)
{
    const auto log_side = series_log(s).t_ddt();
    return {log_side.coefficients().begin() + 1, log_side.coefficients().end()};
}

ClassFunction<Coefficient> equivariant_power_classfunction(const GenusModel& model, std::uint64_t n, int h,
                                                           const OrderMode& mode)
{
    const auto list = class_list(h, n, mode);
    std::vector<Coefficient> values;
    values.reserve(list->size());
    for (const auto& type : list->classes())
        values.push_back(psi_alpha(model, type));
    return ClassFunction<Coefficient>(list, std::move(values));
}

Rational to_rational(const Coefficient& c)
{
    const auto value = c.as_rational();
    if (!value)
        throw std::domain_error("coefficient " + c.to_string() + " is not a rational constant");
    return *value;
}

RationalSeries todd_orbifold_series(const Integer& d, std::uint64_t precision)
{
    const auto model = GenusModel::integer(d);
    const auto mode = OrderMode::all_orders();
    std::vector<Rational> coeffs;
    for (std::uint64_t n = 0; n <= precision; ++n)
        coeffs.push_back(to_rational(orbifold_genus(equivariant_power_classfunction(model, n, 1, mode))));
    return RationalSeries(std::move(coeffs), precision);
}

} // namespace orbigenus
