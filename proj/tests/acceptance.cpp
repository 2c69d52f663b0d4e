// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "orbigenus/genus.hpp"
#include "support/oracles.hpp"

using namespace orbigenus;

namespace {

using CF = ClassFunction<Rational>;

const OrderMode all = OrderMode::all_orders();
const OrderMode p2 = OrderMode::p_power(2);
const OrderMode p3 = OrderMode::p_power(3);

// Collects the first few failure descriptions of a criterion.
struct Check {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> notes;

    void expect(bool ok, const std::function<std::string()>& what)
    {
        if (ok) {
            ++passed;
            return;
        }
        ++failed;
        if (notes.size() < 5)
            notes.push_back(what());
    }
};

std::string mode_text(const OrderMode& mode) { return mode.to_string(); }

Check dmvv_identity()
{
    Check c;
    struct Case {
        int h;
        std::uint64_t p;
        std::uint64_t n;
    };
    for (const auto& k : {Case{1, 2, 12}, Case{2, 2, 8}, Case{2, 3, 9}, Case{3, 2, 8}}) {
        const auto report = verify_dmvv(GenusModel::symbolic(), k.n, k.h, OrderMode::p_power(k.p));
        c.expect(report.equal, [&] {
            return "h=" + std::to_string(k.h) + " p=" + std::to_string(k.p) + " mismatch at t^" +
                   std::to_string(report.first_mismatch.value_or(0));
        });
    }
    return c;
}

struct OracleCase {
    int h;
    OrderMode mode;
    std::uint64_t max_l;
};

const std::vector<OracleCase> oracle_cases{{1, all, 6}, {1, p2, 6}, {2, p2, 5}, {2, p3, 5}, {3, p2, 4}};

std::string instance(int h, const OrderMode& mode, std::uint64_t l)
{
    return "h=" + std::to_string(h) + " mode=" + mode_text(mode) + " l=" + std::to_string(l);
}

Check oracle_equivalence()
{
    Check c;
    for (const auto& k : oracle_cases)
        for (std::uint64_t l = 0; l <= k.max_l; ++l) {
            const auto oracle = brute_force_classes(k.h, l, k.mode);
            const auto classes = enumerate_classes(k.h, l, k.mode);
            bool same = oracle.size() == classes.size();
            for (std::size_t i = 0; same && i < classes.size(); ++i)
                same = oracle[i].type == classes[i] && oracle[i].tuple_count == class_size(classes[i]);
            c.expect(same, [&] { return instance(k.h, k.mode, l); });
        }
    return c;
}

Check mass_formula()
{
    Check c;
    for (const auto& k : oracle_cases)
        for (std::uint64_t l = 0; l <= k.max_l; ++l) {
            Integer mass = 0, hom = 0;
            for (const auto& type : enumerate_classes(k.h, l, k.mode))
                mass += class_size(type);
            for (const auto& entry : brute_force_classes(k.h, l, k.mode))
                hom += entry.tuple_count;
            c.expect(mass == hom, [&] { return instance(k.h, k.mode, l) + " mass " + to_string(mass); });
        }
    struct Spot {
        int h;
        OrderMode mode;
        std::uint64_t l;
        long tuples;
    };
    for (const auto& s : {Spot{2, p2, 2, 4}, Spot{2, p3, 3, 9}, Spot{2, p2, 4, 88}}) {
        Integer hom = 0;
        for (const auto& entry : brute_force_classes(s.h, s.l, s.mode))
            hom += entry.tuple_count;
        c.expect(hom == s.tuples, [&] { return instance(s.h, s.mode, s.l) + " oracle count " + to_string(hom); });
    }
    return c;
}

Check todd_product_formula()
{
    Check c;
    for (long d : {0, 1, 2, 5}) {
        // (1 - t)^{-d} as binomial(n + d - 1, n), independent of the series inverse.
        std::vector<Rational> expected;
        for (std::uint64_t n = 0; n <= 12; ++n)
            expected.emplace_back(binomial(Integer(d + static_cast<long>(n) - 1), n));
        c.expect(todd_orbifold_series(Integer(d), 12) == RationalSeries(expected, 12),
                 [&] { return "d=" + std::to_string(d); });
    }
    return c;
}

Check orbit_counts()
{
    Check c;
    for (int h = 1; h <= 3; ++h)
        for (std::uint64_t n = 1; n <= 16; ++n) {
            const auto found = enumerate_orbits(h, n, all).size();
            const auto expected = testing::count_index_n_subgroups(h, n);
            c.expect(found == expected, [&] {
                return "h=" + std::to_string(h) + " n=" + std::to_string(n) + ": " + std::to_string(found) +
                       " vs " + std::to_string(expected);
            });
        }
    for (int h = 1; h <= 3; ++h)
        for (std::uint64_t p : {2u, 3u})
            for (std::uint64_t k = 0; k <= 4; ++k) {
                std::uint64_t n = 1;
                for (std::uint64_t i = 0; i < k; ++i)
                    n *= p;
                const Integer found(static_cast<unsigned long>(enumerate_orbits(h, n, OrderMode::p_power(p)).size()));
                c.expect(found == testing::orbit_count_generating_function(h, p, k), [&] {
                    return "generating function h=" + std::to_string(h) + " n=" + std::to_string(n);
                });
            }
    return c;
}

Check frobenius_reciprocity()
{
    Check c;
    std::mt19937_64 rng(20261017);
    const std::vector<std::pair<std::uint64_t, std::uint64_t>> splits{{1, 1}, {1, 2}, {2, 2}, {2, 3}};
    for (const auto& [j, k] : splits)
        for (int h = 1; h <= 2; ++h)
            for (const auto& mode : {all, p2})
                for (int trial = 0; trial < 100; ++trial) {
                    const auto chi = testing::random_class_function(h, j, mode, rng);
                    const auto xi = testing::random_class_function(h, k, mode, rng);
                    const auto zeta = testing::random_class_function(h, j + k, mode, rng);
                    const auto ind = induce_young(chi, xi);
                    const bool reciprocity =
                        inner_product(ind, zeta) ==
                        inner_product(ProductClassFunction<Rational>::tensor(chi, xi), restrict_young(zeta, j));
                    const bool multiplicative = augmentation(ind) == augmentation(chi) * augmentation(xi);
                    c.expect(reciprocity && multiplicative, [&, j = j, k = k] {
                        return instance(h, mode, j + k) + " j=" + std::to_string(j) + " trial " +
                               std::to_string(trial) + (reciprocity ? " (multiplicativity)" : " (reciprocity)");
                    });
                }
    return c;
}

Check induction_consistency()
{
    Check c;
    std::mt19937_64 rng(7);
    for (int h = 1; h <= 2; ++h)
        for (const auto& mode : {all, p2, p3})
            for (std::uint64_t j = 0; j <= 5; ++j)
                for (std::uint64_t k = 0; j + k <= 5; ++k) {
                    // Every class indicator on each side plus one random pair.
                    std::vector<std::pair<CF, CF>> inputs;
                    for (const auto& a : enumerate_classes(h, j, mode))
                        for (const auto& b : enumerate_classes(h, k, mode))
                            inputs.emplace_back(CF::indicator(a), CF::indicator(b));
                    inputs.emplace_back(testing::random_class_function(h, j, mode, rng),
                                        testing::random_class_function(h, k, mode, rng));
                    for (const auto& [chi, xi] : inputs)
                        c.expect(induce_young(chi, xi) == induction_group_sum(chi, xi),
                                 [&] { return instance(h, mode, j + k) + " j=" + std::to_string(j); });
                }
    return c;
}

Check exponential_property()
{
    Check c;
    const auto sum = GenusModel::symbolic_sum({"x", "y"});
    const auto x = GenusModel::symbolic("x");
    const auto y = GenusModel::symbolic("y");
    for (std::uint64_t n = 0; n <= 6; ++n) {
        PsiPolynomial rhs;
        for (std::uint64_t i = 0; i <= n; ++i)
            rhs += sigma_n(x, i, 2, p2) * sigma_n(y, n - i, 2, p2);
        c.expect(sigma_n(sum, n, 2, p2) == rhs, [&] { return "n=" + std::to_string(n); });
    }
    return c;
}

Check lambda_and_round_trips()
{
    Check c;
    for (long d = 0; d <= 6; ++d) {
        const auto lambda = lambda_operations(GenusModel::integer(Integer(d)), 10, 1, all);
        for (std::uint64_t n = 0; n <= 10; ++n)
            c.expect(lambda[n] == PsiPolynomial(Rational(binomial(Integer(d), n))),
                     [&] { return "lambda d=" + std::to_string(d) + " n=" + std::to_string(n); });
    }
    const auto model = GenusModel::symbolic();
    const auto t = hecke_from_log(total_symmetric_power(model, 9, 2, p3));
    c.expect(t.size() == 9, [] { return std::string("hecke_from_log length"); });
    for (std::uint64_t n = 1; n <= t.size(); ++n) {
        const bool ok = p3.admits(n) ? t[n - 1] == hecke_operator(model, 2, p3, n) : t[n - 1].is_zero();
        c.expect(ok, [&] { return "T_" + std::to_string(n) + " = " + t[n - 1].to_string(); });
    }
    return c;
}

Check inner_product_values()
{
    Check c;
    struct Case {
        int h;
        OrderMode mode;
        std::uint64_t l;
        Rational expected;
    };
    for (const auto& k : {Case{2, p3, 3, Rational(Integer(3), Integer(2))}, Case{2, p2, 2, Rational(2)},
                          Case{1, all, 3, Rational(1)}}) {
        const auto one = CF::one(k.h, k.l, k.mode);
        const auto value = inner_product(one, one);
        c.expect(value == k.expected, [&] { return instance(k.h, k.mode, k.l) + " got " + value.to_string(); });
    }
    return c;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Check()>>> criteria{
        {"DMVV identity, symbolic model", dmvv_identity},
        {"class formulas match brute-force enumeration", oracle_equivalence},
        {"mass formula", mass_formula},
        {"level-1 Todd product formula", todd_product_formula},
        {"transitive orbit counts", orbit_counts},
        {"Frobenius reciprocity and multiplicative augmentation", frobenius_reciprocity},
        {"Young induction matches the group sum", induction_consistency},
        {"exponential property of S_t", exponential_property},
        {"lambda operations and Hecke round trip", lambda_and_round_trips},
        {"inner product values", inner_product_values},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Check result;
        std::string error;
        try {
            result = criteria[i].second();
        } catch (const std::exception& e) {
            error = e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool ok = error.empty() && result.failed == 0 && result.passed > 0;
        failures += ok ? 0 : 1;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << std::setw(2) << i + 1 << ". " << criteria[i].first << " ("
                  << result.passed << " checks, " << std::fixed << std::setprecision(2) << seconds << "s)\n";
        if (!error.empty())
            std::cout << "       exception: " << error << '\n';
        for (const auto& note : result.notes)
            std::cout << "       " << note << '\n';
    }
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << '\n';
    return failures == 0 ? 0 : 1;
}
