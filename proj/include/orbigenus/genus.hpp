#pragma once

// Power operations, symmetric powers and Hecke operators on a genus value.
//
// A GenusModel says what the internal power operation psi_T does to the
// value x being studied.  Everything downstream (sigma_n, S_t, T_n,
// Lambda_t, orbifold genera) is computed from psi_T and the class
// combinatorics alone.  Coefficients live in PsiPolynomial; integer and
// table models produce constant polynomials.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "orbigenus/class_function.hpp"
#include "orbigenus/psi_polynomial.hpp"
#include "orbigenus/series.hpp"

namespace orbigenus {

using Coefficient = PsiPolynomial;

/// psi_T(x) is the free symbol (family, T).  With several families the
/// modelled value is their sum, and psi_T is additive across them.
struct SymbolicModel {
    std::vector<std::string> families{"x"};
};

/// psi_T(x) = d for every T.
struct IntegerModel {
    Integer d;
};

/// psi_T(x) read from a table; x itself is the entry of the trivial orbit.
struct TableModel {
    std::map<TransitiveOrbit, Rational> psi;
};

class GenusModel {
public:
    using Variant = std::variant<SymbolicModel, IntegerModel, TableModel>;

    GenusModel(Variant model) : model_(std::move(model)) {}

    static GenusModel symbolic(std::string family = "x") { return GenusModel(SymbolicModel{{std::move(family)}}); }
    static GenusModel symbolic_sum(std::vector<std::string> families)
    {
        return GenusModel(SymbolicModel{std::move(families)});
    }
    static GenusModel integer(const Integer& d) { return GenusModel(IntegerModel{d}); }
    static GenusModel table(std::map<TransitiveOrbit, Rational> psi) { return GenusModel(TableModel{std::move(psi)}); }

    const Variant& variant() const { return model_; }

    /// psi_T(x).  Throws std::out_of_range for an orbit missing from a table.
    Coefficient psi(const TransitiveOrbit& orbit) const;

    std::string describe() const;

private:
    Variant model_;
};

/// prod_T psi_T(x)^{a_T}; 1 on the empty type.
Coefficient psi_alpha(const GenusModel& model, const OrbitTypeMultiset& type);

/// sigma_n(x) = sum over classes of degree n of psi_alpha / |C_alpha|.
Coefficient sigma_n(const GenusModel& model, std::uint64_t n, int h, const OrderMode& mode);

/// S_t(x) = sum_{n <= N} sigma_n t^n.
PsiSeries total_symmetric_power(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode);

/// T_n(x) = (1/n) sum over transitive orbits T of size n of psi_T(x).
/// Throws std::invalid_argument if n is not admissible for the mode.
Coefficient hecke_operator(const GenusModel& model, int h, const OrderMode& mode, std::uint64_t n);

/// exp[sum over admissible n <= N of T_n t^n].
PsiSeries exponential_side(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode);

struct GenusSeriesReport {
    int h;
    OrderMode mode;
    PsiSeries lhs;
    PsiSeries rhs;
    std::size_t precision;
    bool equal;
    std::optional<std::size_t> first_mismatch;
};

/// Compares S_t against exp[sum T_n t^n] coefficientwise.
GenusSeriesReport verify_dmvv(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode);

/// Coefficients T_1..T_N of log S.  Throws std::domain_error unless S has
/// constant term 1.
std::vector<Coefficient> hecke_from_log(const PsiSeries& s);

/// Lambda_t = 1 / S_{-t}.
PsiSeries lambda_operations(const GenusModel& model, std::uint64_t precision, int h, const OrderMode& mode);

/// psi^n = n T_n read off log S_t, for n = 1..N.
std::vector<Coefficient> adams_operations(const PsiSeries& s);

/// The class function alpha -> psi_alpha(x) on Hom(Z^h, Sigma_n).
ClassFunction<Coefficient> equivariant_power_classfunction(const GenusModel& model, std::uint64_t n, int h,
                                                           const OrderMode& mode);

/// Orbifold genus of an equivariant genus given as a class function: its
/// augmentation.
template <CoefficientRing R>
R orbifold_genus(const ClassFunction<R>& equivariant)
{
    return augmentation(equivariant);
}

/// sum_n orbifold_genus(P_n for the constant-d model at h = 1) t^n.
RationalSeries todd_orbifold_series(const Integer& d, std::uint64_t precision);

/// Rational value of a constant coefficient; throws std::domain_error otherwise.
Rational to_rational(const Coefficient& c);

} // namespace orbigenus
