#include "orbigenus/cli.hpp"

#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "orbigenus/class_function.hpp"
#include "orbigenus/genus.hpp"
#include "orbigenus/io.hpp"

namespace orbigenus {

namespace {

using io::json;

// Documented bounds.
constexpr int max_h = 4;
constexpr std::uint64_t max_l = 16;
constexpr std::uint64_t max_precision = 16;
constexpr std::uint64_t max_size = 4096;
constexpr long max_abs_d = 1000;
constexpr std::uint64_t max_guard = 8;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Config {
    int h = 1;
    std::optional<std::uint64_t> p;
    std::uint64_t l = 0;
    std::uint64_t n = 8;
    std::uint64_t size = 1;
    long d = 1;
    std::string model = "symbolic";
    std::string format = "tsv";
    std::optional<std::uint64_t> guard;
    std::uint64_t trials = 20;
    std::uint64_t seed = 1;
    std::string chi_file;
    std::string xi_file;
};

OrderMode mode_of(const Config& c)
{
    if (!c.p)
        return OrderMode::all_orders();
    if (!is_prime(*c.p))
        throw UsageError("--p " + std::to_string(*c.p) + " is not prime");
    return OrderMode::p_power(*c.p);
}

void check_h(const Config& c)
{
    if (c.h < 1 || c.h > max_h)
        throw UsageError("--h must be in [1, " + std::to_string(max_h) + "]");
}

void check_l(const Config& c)
{
    if (c.l > max_l)
        throw UsageError("--l must be at most " + std::to_string(max_l));
}

void check_n(const Config& c)
{
    if (c.n > max_precision)
        throw UsageError("--n must be at most " + std::to_string(max_precision));
}

std::uint64_t guard_of(const Config& c)
{
    const std::uint64_t g = c.guard.value_or(default_guard(c.h));
    if (g > max_guard)
        throw UsageError("--guard must be at most " + std::to_string(max_guard));
    return g;
}

GenusModel model_of(const Config& c)
{
    const std::string& spec = c.model;
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string arg = colon == std::string::npos ? std::string() : spec.substr(colon + 1);
    if (kind == "symbolic") {
        if (arg.empty())
            return GenusModel::symbolic();
        std::vector<std::string> families;
        std::stringstream ss(arg);
        for (std::string f; std::getline(ss, f, '+');) {
            if (f.empty())
                throw UsageError("empty family name in --model " + spec);
            families.push_back(f);
        }
        return GenusModel::symbolic_sum(std::move(families));
    }
    if (kind == "integer") {
        Rational d;
        try {
            d = Rational::parse(arg);
        } catch (const std::invalid_argument&) {
            throw UsageError("--model integer:<d> needs an integer, got '" + arg + "'");
        }
        if (!d.is_integer() || abs(d.numerator()) > max_abs_d)
            throw UsageError("--model integer:<d> needs an integer with |d| <= " + std::to_string(max_abs_d));
        return GenusModel::integer(d.numerator());
    }
    if (kind == "table") {
        if (arg.empty())
            throw UsageError("--model table:<file> needs a file");
        auto table = io::load_table_model(arg);
        for (const auto& [orbit, value] : table.psi)
            if (orbit.rank() != c.h)
                throw UsageError("table model orbits have rank " + std::to_string(orbit.rank()) + ", expected --h " +
                                 std::to_string(c.h));
        return GenusModel::table(std::move(table.psi));
    }
    throw UsageError("unknown --model '" + spec + "' (symbolic[:x+y], integer:<d>, table:<file>)");
}

std::string hnf_text(const TransitiveOrbit& orbit) { return io::to_json(orbit).at("hnf").dump(); }

void write_row(std::ostream& out, const std::vector<std::string>& cells)
{
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "\t" : "") << cells[i];
    out << '\n';
}

bool want_json(const Config& c) { return c.format == "json"; }

// orbits ------------------------------------------------------------------

int cmd_orbits(const Config& c, std::ostream& out)
{
    check_h(c);
    if (c.size < 1 || c.size > max_size)
        throw UsageError("--size must be in [1, " + std::to_string(max_size) + "]");
    const auto mode = mode_of(c);
    if (!mode.admits(c.size))
        throw UsageError("--size " + std::to_string(c.size) + " is not a power of " + std::to_string(mode.prime()));
    const auto orbits = enumerate_orbits(c.h, c.size, mode);
    if (want_json(c)) {
        json arr = json::array();
        for (const auto& o : orbits)
            arr.push_back(io::to_json(o));
        out << arr.dump() << '\n';
    } else {
        write_row(out, {"h", "size", "hnf"});
        for (const auto& o : orbits)
            write_row(out, {std::to_string(o.rank()), to_string(o.size()), hnf_text(o)});
    }
    return exit_ok;
}

// classes -----------------------------------------------------------------

int cmd_classes(const Config& c, std::ostream& out)
{
    check_h(c);
    check_l(c);
    const auto mode = mode_of(c);
    const auto list = class_list(c.h, c.l, mode);
    Integer total = 0;
    for (const auto& type : list->classes())
        total += class_size(type);
    if (want_json(c)) {
        json classes = json::array();
        for (const auto& type : list->classes())
            classes.push_back(io::to_json(type));
        out << json{{"h", c.h},
                    {"mode", io::to_json(mode)},
                    {"l", c.l},
                    {"classes", classes},
                    {"class_count", list->size()},
                    {"total_tuples", to_string(total)}}
                   .dump()
            << '\n';
    } else {
        write_row(out, {"index", "type", "centralizer_order", "class_size"});
        for (std::size_t i = 0; i < list->size(); ++i)
            write_row(out, {std::to_string(i), (*list)[i].to_string(), to_string(list->centralizer(i)),
                            to_string(class_size((*list)[i]))});
        write_row(out, {"summary", "classes=" + std::to_string(list->size()), "tuples=" + to_string(total)});
    }
    return exit_ok;
}

// verify ------------------------------------------------------------------

int cmd_verify_dmvv(const Config& c, std::ostream& out)
{
    check_h(c);
    check_n(c);
    const auto mode = mode_of(c);
    const auto model = model_of(c);
    const auto report = verify_dmvv(model, c.n, c.h, mode);
    if (want_json(c)) {
        out << io::to_json(report).dump() << '\n';
    } else {
        write_row(out, {"n", "lhs", "rhs", "equal"});
        for (std::size_t k = 0; k <= report.precision; ++k)
            write_row(out, {std::to_string(k), report.lhs[k].to_string(), report.rhs[k].to_string(),
                            report.lhs[k] == report.rhs[k] ? "true" : "false"});
        if (report.equal)
            out << "dmvv: equal through t^" << report.precision << '\n';
        else
            out << "dmvv: mismatch at t^" << *report.first_mismatch << '\n';
    }
    return report.equal ? exit_ok : exit_mismatch;
}

int cmd_verify_oracle(const Config& c, std::ostream& out)
{
    check_h(c);
    check_l(c);
    const auto mode = mode_of(c);
    const auto oracle = brute_force_classes(c.h, c.l, mode, guard_of(c));
    const auto list = class_list(c.h, c.l, mode);

    bool match = oracle.size() == list->size();
    Integer total = 0;
    json rows = json::array();
    std::vector<std::vector<std::string>> tsv;
    for (const auto& entry : oracle)
        total += entry.tuple_count;
    for (std::size_t i = 0; i < std::max(oracle.size(), list->size()); ++i) {
        const OrbitTypeMultiset* type = i < list->size() ? &(*list)[i] : nullptr;
        const BruteForceClass* seen = i < oracle.size() ? &oracle[i] : nullptr;
        const bool same = type && seen && seen->type == *type && seen->tuple_count == class_size(*type);
        match = match && same;
        const std::string type_text = type ? type->to_string() : seen->type.to_string();
        const std::string expected = type ? to_string(class_size(*type)) : "-";
        const std::string observed = seen ? to_string(seen->tuple_count) : "-";
        rows.push_back({{"type", type_text}, {"class_size", expected}, {"oracle_count", observed}, {"match", same}});
        tsv.push_back({type_text, expected, observed, same ? "true" : "false"});
    }
    const std::string summary = std::to_string(list->size()) + " classes, " + to_string(total) + " tuples, " +
                                (match ? "match" : "mismatch");
    if (want_json(c)) {
        out << json{{"classes", list->size()},
                    {"oracle_classes", oracle.size()},
                    {"tuples", to_string(total)},
                    {"match", match},
                    {"rows", rows}}
                   .dump()
            << '\n';
    } else {
        write_row(out, {"type", "class_size", "oracle_count", "match"});
        for (const auto& r : tsv)
            write_row(out, r);
        out << summary << '\n';
    }
    return match ? exit_ok : exit_mismatch;
}

ClassFunction<Rational> random_class_function(int h, std::uint64_t l, const OrderMode& mode, std::mt19937_64& rng)
{
    auto list = class_list(h, l, mode);
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 5);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < list->size(); ++i)
        values.emplace_back(Integer(num(rng)), Integer(den(rng)));
    return ClassFunction<Rational>(list, std::move(values));
}

int cmd_verify_frobenius(const Config& c, std::ostream& out)
{
    check_h(c);
    check_l(c);
    const auto mode = mode_of(c);
    const std::uint64_t guard = guard_of(c);
    std::mt19937_64 rng(c.seed);
    bool all_ok = true;
    json rows = json::array();
    std::vector<std::vector<std::string>> tsv;
    for (std::uint64_t j = 0; j <= c.l; ++j) {
        const std::uint64_t k = c.l - j;
        bool reciprocity = true;
        bool multiplicative = true;
        for (std::uint64_t t = 0; t < c.trials; ++t) {
            const auto chi = random_class_function(c.h, j, mode, rng);
            const auto xi = random_class_function(c.h, k, mode, rng);
            const auto zeta = random_class_function(c.h, c.l, mode, rng);
            const auto induced = induce_young(chi, xi);
            reciprocity = reciprocity && inner_product(induced, zeta) ==
                                             inner_product(ProductClassFunction<Rational>::tensor(chi, xi),
                                                           restrict_young(zeta, j));
            multiplicative = multiplicative && augmentation(induced) == augmentation(chi) * augmentation(xi);
        }
        std::string group_sum = "skipped";
        if (c.l <= guard) {
            const auto chi = random_class_function(c.h, j, mode, rng);
            const auto xi = random_class_function(c.h, k, mode, rng);
            group_sum = induce_young(chi, xi) == induction_group_sum(chi, xi, guard) ? "true" : "false";
        }
        const bool ok = reciprocity && multiplicative && group_sum != "false";
        all_ok = all_ok && ok;
        rows.push_back({{"j", j},
                        {"k", k},
                        {"trials", c.trials},
                        {"reciprocity", reciprocity},
                        {"multiplicative", multiplicative},
                        {"group_sum", group_sum}});
        tsv.push_back({std::to_string(j), std::to_string(k), std::to_string(c.trials), reciprocity ? "true" : "false",
                       multiplicative ? "true" : "false", group_sum});
    }
    if (want_json(c)) {
        out << json{{"h", c.h}, {"mode", io::to_json(mode)}, {"l", c.l}, {"match", all_ok}, {"rows", rows}}.dump()
            << '\n';
    } else {
        write_row(out, {"j", "k", "trials", "reciprocity", "multiplicative", "induction_oracle"});
        for (const auto& r : tsv)
            write_row(out, r);
        out << "frobenius: " << (all_ok ? "match" : "mismatch") << '\n';
    }
    return all_ok ? exit_ok : exit_mismatch;
}

// genus -------------------------------------------------------------------

json coefficient_json(const Coefficient& c)
{
    if (const auto q = c.as_rational())
        return q->to_string();
    return io::to_json(c);
}

int emit_coefficients(const Config& c, std::ostream& out, const std::string& kind,
                      const std::vector<std::string>& headers, const std::vector<Coefficient>& values)
{
    if (want_json(c)) {
        json coeffs = json::array();
        json labels = json::array();
        for (std::size_t i = 0; i < values.size(); ++i) {
            coeffs.push_back(coefficient_json(values[i]));
            labels.push_back(headers[i]);
        }
        out << json{{"kind", kind}, {"labels", labels}, {"coefficients", coeffs}}.dump() << '\n';
    } else {
        std::vector<std::string> cells;
        for (const auto& v : values)
            cells.push_back(v.to_string());
        write_row(out, headers);
        write_row(out, cells);
    }
    return exit_ok;
}

int cmd_genus_sigma(const Config& c, std::ostream& out)
{
    check_h(c);
    check_n(c);
    const auto s = total_symmetric_power(model_of(c), c.n, c.h, mode_of(c));
    std::vector<std::string> headers;
    for (std::uint64_t i = 0; i <= c.n; ++i)
        headers.push_back("sigma_" + std::to_string(i));
    return emit_coefficients(c, out, "sigma", headers, s.coefficients());
}

int cmd_genus_hecke(const Config& c, std::ostream& out)
{
    check_h(c);
    check_n(c);
    const auto mode = mode_of(c);
    const auto model = model_of(c);
    std::vector<std::string> headers;
    std::vector<Coefficient> values;
    for (std::uint64_t i = 1; i <= c.n; ++i) {
        if (!mode.admits(i))
            continue;
        headers.push_back("T_" + std::to_string(i));
        values.push_back(hecke_operator(model, c.h, mode, i));
    }
    return emit_coefficients(c, out, "hecke", headers, values);
}

int cmd_genus_lambda(const Config& c, std::ostream& out)
{
    check_h(c);
    check_n(c);
    const auto s = lambda_operations(model_of(c), c.n, c.h, mode_of(c));
    std::vector<std::string> headers;
    for (std::uint64_t i = 0; i <= c.n; ++i)
        headers.push_back("lambda_" + std::to_string(i));
    return emit_coefficients(c, out, "lambda", headers, s.coefficients());
}

int cmd_genus_todd(const Config& c, std::ostream& out)
{
    check_n(c);
    if (c.d < -max_abs_d || c.d > max_abs_d)
        throw UsageError("--d must satisfy |d| <= " + std::to_string(max_abs_d));
    const auto s = todd_orbifold_series(Integer(c.d), c.n);
    std::vector<std::string> headers;
    std::vector<Coefficient> values;
    for (std::uint64_t i = 0; i <= c.n; ++i) {
        headers.push_back("t^" + std::to_string(i));
        values.emplace_back(s[i]);
    }
    return emit_coefficients(c, out, "todd", headers, values);
}

// inner-product -----------------------------------------------------------

int cmd_inner_product(const Config& c, std::ostream& out)
{
    check_h(c);
    check_l(c);
    const auto mode = mode_of(c);
    const auto load = [&](const std::string& file) {
        if (file.empty())
            return ClassFunction<Rational>::one(c.h, c.l, mode);
        auto f = io::class_function_from_json(io::read_json_file(file));
        if (!f.classes().same_parameters(*class_list(c.h, c.l, mode)))
            throw UsageError("class function in '" + file + "' does not match --h/--p/--l");
        return f;
    };
    const auto chi = load(c.chi_file);
    const auto xi = load(c.xi_file);
    const Rational value = inner_product(chi, xi);
    if (want_json(c))
        out << json{{"h", c.h}, {"mode", io::to_json(mode)}, {"l", c.l}, {"value", value.to_string()}}.dump() << '\n';
    else {
        write_row(out, {"inner_product"});
        write_row(out, {value.to_string()});
    }
    return exit_ok;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact class-function and power-series calculus for symmetric powers and Hecke operators",
                 "orbigenus"};
    // --h is the chromatic level, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);
    Config cfg;

    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
    };
    const auto add_hp = [&](CLI::App* sub) {
        sub->add_option("--h", cfg.h, "Number of commuting elements (chromatic level)");
        sub->add_option("--p", cfg.p, "Prime; omit for all orders");
    };

    int (*handler)(const Config&, std::ostream&) = nullptr;
    const auto bind = [&](CLI::App* sub, int (*fn)(const Config&, std::ostream&)) {
        sub->callback([&handler, fn] { handler = fn; });
    };

    auto* orbits = app.add_subcommand("orbits", "List transitive Z^h-sets of a given size");
    add_hp(orbits);
    orbits->add_option("--size", cfg.size, "Orbit size")->required();
    add_format(orbits);
    bind(orbits, cmd_orbits);

    auto* classes = app.add_subcommand("classes", "List conjugacy classes of commuting h-tuples in Sigma_l");
    add_hp(classes);
    classes->add_option("--l", cfg.l, "Degree of the symmetric group")->required();
    add_format(classes);
    bind(classes, cmd_classes);

    auto* verify = app.add_subcommand("verify", "Check an identity");
    verify->require_subcommand(1);
    auto* dmvv = verify->add_subcommand("dmvv", "S_t = exp(sum T_n t^n)");
    add_hp(dmvv);
    dmvv->add_option("--n", cfg.n, "Precision");
    dmvv->add_option("--model", cfg.model, "symbolic[:x+y] | integer:<d> | table:<file>");
    add_format(dmvv);
    bind(dmvv, cmd_verify_dmvv);
    auto* frobenius = verify->add_subcommand("frobenius", "Frobenius reciprocity and induction checks");
    add_hp(frobenius);
    frobenius->add_option("--l", cfg.l, "Total degree j + k")->required();
    frobenius->add_option("--trials", cfg.trials, "Random instances per splitting");
    frobenius->add_option("--seed", cfg.seed, "Random seed");
    frobenius->add_option("--guard", cfg.guard, "Largest degree for the literal induction sum");
    add_format(frobenius);
    bind(frobenius, cmd_verify_frobenius);
    auto* oracle = verify->add_subcommand("oracle", "Compare class formulas with brute-force enumeration");
    add_hp(oracle);
    oracle->add_option("--l", cfg.l, "Degree")->required();
    oracle->add_option("--guard", cfg.guard, "Largest degree the brute force accepts");
    add_format(oracle);
    bind(oracle, cmd_verify_oracle);

    auto* genus = app.add_subcommand("genus", "Symmetric powers, Hecke and lambda operations");
    genus->require_subcommand(1);
    auto* sigma = genus->add_subcommand("sigma", "sigma_0..sigma_n");
    auto* hecke = genus->add_subcommand("hecke", "T_1..T_n (admissible n only)");
    auto* lambda = genus->add_subcommand("lambda", "lambda_0..lambda_n");
    for (auto* sub : {sigma, hecke, lambda}) {
        add_hp(sub);
        sub->add_option("--n", cfg.n, "Precision");
        sub->add_option("--model", cfg.model, "symbolic[:x+y] | integer:<d> | table:<file>");
        add_format(sub);
    }
    bind(sigma, cmd_genus_sigma);
    bind(hecke, cmd_genus_hecke);
    bind(lambda, cmd_genus_lambda);
    auto* todd = genus->add_subcommand("todd", "Orbifold Todd series of symmetric powers, (1-t)^-d");
    todd->add_option("--d", cfg.d, "Todd genus of M")->required();
    todd->add_option("--n", cfg.n, "Precision");
    add_format(todd);
    bind(todd, cmd_genus_todd);

    auto* ip = app.add_subcommand("inner-product", "Strickland inner product of two class functions");
    add_hp(ip);
    ip->add_option("--l", cfg.l, "Degree")->required();
    ip->add_option("--chi", cfg.chi_file, "Class-function JSON (default: constant 1)");
    ip->add_option("--xi", cfg.xi_file, "Class-function JSON (default: constant 1)");
    add_format(ip);
    bind(ip, cmd_inner_product);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    try {
        return handler ? handler(cfg, out) : exit_usage;
    } catch (const GuardExceeded& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

} // namespace orbigenus
