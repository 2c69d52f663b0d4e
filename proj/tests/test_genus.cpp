#include "doctest.h"

#include "orbigenus/genus.hpp"
#include "support/oracles.hpp"

using namespace orbigenus;

namespace {

const OrderMode all = OrderMode::all_orders();
const OrderMode p2 = OrderMode::p_power(2);
const OrderMode p3 = OrderMode::p_power(3);

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

PsiPolynomial sym(const std::string& family, const TransitiveOrbit& orbit) { return PsiPolynomial::symbol(family, orbit); }

// Sum of psi_T over the orbits of a given size, in the named family.
PsiPolynomial orbit_sum(const std::string& family, int h, std::uint64_t n, const OrderMode& mode)
{
    PsiPolynomial out;
    for (const auto& t : enumerate_orbits(h, n, mode))
        out += sym(family, t);
    return out;
}

RationalSeries rational_series(const PsiSeries& s)
{
    std::vector<Rational> c;
    for (const auto& x : s.coefficients())
        c.push_back(to_rational(x));
    return RationalSeries(std::move(c), s.precision());
}

RationalSeries todd_expected(long d, std::size_t n)
{
    // (1 - t)^{-d}, built with the formal-algebra inverse.
    RationalSeries base = RationalSeries::one(n);
    for (long i = 0; i < d; ++i)
        base = base * RationalSeries({q(1), q(-1)}, n);
    return series_invert(base);
}

} // namespace

TEST_CASE("psi_alpha")
{
    const auto t1 = TransitiveOrbit::from_hnf(2, {1, 0, 0, 2});
    const auto t2 = TransitiveOrbit::from_hnf(2, {2, 0, 0, 1});
    const OrbitTypeMultiset empty(2, p2);
    CHECK(psi_alpha(GenusModel::symbolic(), empty) == PsiPolynomial(1));
    const auto type = OrbitTypeMultiset::from_entries(2, p2, {{t1, 2}, {t2, 1}});
    CHECK(psi_alpha(GenusModel::integer(Integer(3)), type) == PsiPolynomial(27));
    CHECK(psi_alpha(GenusModel::symbolic(), type) == sym("x", t1) * sym("x", t1) * sym("x", t2));
    CHECK(GenusModel::symbolic().psi(TransitiveOrbit::trivial(2)).to_string() == "x");

    const auto table = GenusModel::table({{TransitiveOrbit::trivial(2), q(2)}, {t1, q(1, 3)}});
    CHECK(psi_alpha(table, OrbitTypeMultiset::from_entries(2, p2, {{t1, 1}, {TransitiveOrbit::trivial(2), 1}})) ==
          PsiPolynomial(q(2, 3)));
    CHECK_THROWS_AS(psi_alpha(table, type), std::out_of_range);
}

TEST_CASE("sigma_n")
{
    const auto x = sym("x", TransitiveOrbit::trivial(2));
    CHECK(sigma_n(GenusModel::symbolic(), 0, 2, p2) == PsiPolynomial(1));
    CHECK(sigma_n(GenusModel::symbolic(), 1, 2, p2) == x);
    CHECK(sigma_n(GenusModel::symbolic(), 2, 2, p2) == x * x * q(1, 2) + orbit_sum("x", 2, 2, p2) * q(1, 2));

    SUBCASE("integer model at h = 1 gives multisets")
    {
        for (long d = 0; d <= 5; ++d)
            for (std::uint64_t n = 0; n <= 8; ++n)
                CHECK(sigma_n(GenusModel::integer(Integer(d)), n, 1, all) ==
                      PsiPolynomial(Rational(binomial(Integer(d + static_cast<long>(n)) - 1, n))));
    }

    SUBCASE("constant model 1")
    {
        // P_n(1) is the constant class function 1, so sigma_n(1) is its
        // augmentation |Hom| / n!.  That is 1 only at h = 1 with all orders.
        const auto one = GenusModel::integer(Integer(1));
        for (std::uint64_t n = 0; n <= 10; ++n)
            CHECK(sigma_n(one, n, 1, all) == PsiPolynomial(1));
        for (int h = 1; h <= 2; ++h)
            for (const auto& mode : {all, p2, p3})
                for (std::uint64_t n = 0; n <= 5; ++n) {
                    const auto p = equivariant_power_classfunction(one, n, h, mode);
                    CHECK(p == ClassFunction<Coefficient>::one(h, n, mode));
                    Integer tuples = 0;
                    for (const auto& c : brute_force_classes(h, n, mode))
                        tuples += c.tuple_count;
                    CHECK(sigma_n(one, n, h, mode) == PsiPolynomial(Rational(tuples, factorial(n))));
                }
        CHECK(sigma_n(one, 2, 2, p2) == PsiPolynomial(2));
    }
}

TEST_CASE("total_symmetric_power")
{
    CHECK(total_symmetric_power(GenusModel::integer(Integer(0)), 6, 2, p2) == PsiSeries::one(6));
    CHECK(rational_series(total_symmetric_power(GenusModel::integer(Integer(2)), 4, 1, all)) ==
          RationalSeries({q(1), q(2), q(3), q(4), q(5)}, 4));
    const auto s = total_symmetric_power(GenusModel::symbolic(), 2, 2, p2);
    const auto x = sym("x", TransitiveOrbit::trivial(2));
    CHECK(s == PsiSeries({PsiPolynomial(1), x, x * x * q(1, 2) + orbit_sum("x", 2, 2, p2) * q(1, 2)}, 2));
}

TEST_CASE("hecke_operator")
{
    const auto symbolic = GenusModel::symbolic();
    for (int h = 1; h <= 3; ++h)
        CHECK(hecke_operator(symbolic, h, p2, 1) == sym("x", TransitiveOrbit::trivial(h)));
    for (long d = 0; d <= 6; ++d)
        for (std::uint64_t n = 1; n <= 8; ++n)
            CHECK(hecke_operator(GenusModel::integer(Integer(d)), 1, all, n) ==
                  PsiPolynomial(Rational(Integer(d), Integer(static_cast<unsigned long>(n)))));
    CHECK(hecke_operator(symbolic, 2, p2, 2) == orbit_sum("x", 2, 2, p2) * q(1, 2));
    CHECK_THROWS_AS(hecke_operator(symbolic, 2, p2, 6), std::invalid_argument);
    CHECK_THROWS_AS(hecke_operator(symbolic, 2, all, 0), std::invalid_argument);
}

TEST_CASE("exponential_side")
{
    for (long d = 0; d <= 4; ++d)
        CHECK(rational_series(exponential_side(GenusModel::integer(Integer(d)), 10, 1, all)) == todd_expected(d, 10));
    const auto x = sym("x", TransitiveOrbit::trivial(2));
    CHECK(exponential_side(GenusModel::symbolic(), 2, 2, p2)[2] == x * x * q(1, 2) + hecke_operator(GenusModel::symbolic(), 2, p2, 2));
    CHECK(exponential_side(GenusModel::symbolic(), 0, 3, p2) == PsiSeries::one(0));
}

TEST_CASE("verify_dmvv")
{
    struct Case {
        int h;
        OrderMode mode;
        std::uint64_t n;
    };
    for (const auto& c : {Case{1, all, 10}, Case{1, p2, 12}, Case{2, p2, 8}, Case{2, p3, 9}, Case{3, p2, 8},
                          Case{2, all, 6}}) {
        CAPTURE(c.h);
        CAPTURE(c.mode.to_string());
        const auto report = verify_dmvv(GenusModel::symbolic(), c.n, c.h, c.mode);
        CHECK(report.equal);
        CHECK_FALSE(report.first_mismatch.has_value());
        CHECK(report.precision == c.n);
    }
    const auto five = verify_dmvv(GenusModel::integer(Integer(5)), 12, 1, all);
    CHECK(five.equal);
    for (std::uint64_t n = 0; n <= 12; ++n)
        CHECK(five.lhs[n] == PsiPolynomial(Rational(binomial(Integer(static_cast<unsigned long>(n + 4)), n))));

    SUBCASE("table model specialization")
    {
        std::map<TransitiveOrbit, Rational> psi;
        long v = 1;
        for (const auto& t : orbits_up_to(2, 4, p2))
            psi[t] = q(v++, 3);
        CHECK(verify_dmvv(GenusModel::table(psi), 4, 2, p2).equal);
    }
}

TEST_CASE("exponential property for a sum of two families")
{
    const auto sum = GenusModel::symbolic_sum({"x", "y"});
    const auto x = GenusModel::symbolic("x");
    const auto y = GenusModel::symbolic("y");
    for (std::uint64_t n = 0; n <= 6; ++n) {
        PsiPolynomial rhs;
        for (std::uint64_t i = 0; i <= n; ++i)
            rhs += sigma_n(x, i, 2, p2) * sigma_n(y, n - i, 2, p2);
        CHECK(sigma_n(sum, n, 2, p2) == rhs);
    }
}

TEST_CASE("hecke_from_log")
{
    CHECK(hecke_from_log(PsiSeries::one(4)) == std::vector<Coefficient>(4));
    for (long d = 0; d <= 4; ++d) {
        const auto t = hecke_from_log(total_symmetric_power(GenusModel::integer(Integer(d)), 6, 1, all));
        REQUIRE(t.size() == 6);
        for (std::size_t n = 1; n <= 6; ++n)
            CHECK(t[n - 1] == PsiPolynomial(Rational(Integer(d), Integer(static_cast<unsigned long>(n)))));
    }
    SUBCASE("round trip at h = 2, p = 3")
    {
        const auto model = GenusModel::symbolic();
        const auto t = hecke_from_log(total_symmetric_power(model, 9, 2, p3));
        REQUIRE(t.size() == 9);
        for (std::uint64_t n = 1; n <= 9; ++n) {
            CAPTURE(n);
            if (p3.admits(n))
                CHECK(t[n - 1] == hecke_operator(model, 2, p3, n));
            else
                CHECK(t[n - 1].is_zero());
        }
    }
    CHECK_THROWS_AS(hecke_from_log(PsiSeries({PsiPolynomial(2)}, 2)), std::domain_error);
}

TEST_CASE("lambda and Adams operations")
{
    for (long d = 0; d <= 6; ++d) {
        const auto lambda = rational_series(lambda_operations(GenusModel::integer(Integer(d)), 9, 1, all));
        for (std::uint64_t n = 0; n <= 9; ++n)
            CHECK(lambda[n] == Rational(binomial(Integer(d), n)));
        const auto adams = adams_operations(total_symmetric_power(GenusModel::integer(Integer(d)), 6, 1, all));
        for (const auto& a : adams)
            CHECK(a == PsiPolynomial(Rational(d)));
    }
    const auto lambda = lambda_operations(GenusModel::symbolic(), 3, 2, p2);
    CHECK(lambda[0] == PsiPolynomial(1));
    CHECK(lambda[1] == sym("x", TransitiveOrbit::trivial(2)));
    // Lambda_t S_{-t} = 1.
    CHECK(lambda * total_symmetric_power(GenusModel::symbolic(), 3, 2, p2).negate_variable() == PsiSeries::one(3));
}

TEST_CASE("orbifold genera")
{
    CHECK(orbifold_genus(ClassFunction<Rational>::constant(1, 1, all, q(7))) == q(7));
    CHECK(orbifold_genus(equivariant_power_classfunction(GenusModel::integer(Integer(2)), 3, 1, all)) ==
          PsiPolynomial(4));
    CHECK(orbifold_genus(ClassFunction<Rational>::indicator(
              OrbitTypeMultiset::from_entries(2, p2, {{TransitiveOrbit::trivial(2), 2}}))) == q(1, 2));
    CHECK(equivariant_power_classfunction(GenusModel::symbolic(), 0, 2, p2) ==
          ClassFunction<Coefficient>::one(2, 0, p2));

    SUBCASE("augmentation of P_n agrees with sigma_n")
    {
        for (int h = 1; h <= 2; ++h)
            for (const auto& mode : {all, p2, p3})
                for (std::uint64_t n = 0; n <= 6; ++n)
                    CHECK(orbifold_genus(equivariant_power_classfunction(GenusModel::symbolic(), n, h, mode)) ==
                          sigma_n(GenusModel::symbolic(), n, h, mode));
    }
}

TEST_CASE("todd_orbifold_series")
{
    CHECK(todd_orbifold_series(Integer(1), 6) == RationalSeries(std::vector<Rational>(7, q(1)), 6));
    CHECK(todd_orbifold_series(Integer(0), 6) == RationalSeries::one(6));
    CHECK(todd_orbifold_series(Integer(3), 4) == RationalSeries({q(1), q(3), q(6), q(10), q(15)}, 4));
    for (long d = 0; d <= 6; ++d)
        for (std::size_t n = 0; n <= 12; n += 4)
            CHECK(todd_orbifold_series(Integer(d), n) == todd_expected(d, n));
    CHECK_THROWS_AS(to_rational(sym("x", TransitiveOrbit::trivial(1))), std::domain_error);
}
