#include "orbigenus/io.hpp"

#include <fstream>
#include <set>
#include <stdexcept>

namespace orbigenus::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw std::invalid_argument("json: " + what); }

const json& field(const json& j, const char* name)
{
    if (!j.is_object() || !j.contains(name))
        schema_error(std::string("missing field '") + name + "'");
    return j.at(name);
}

Rational rational_from_json(const json& j)
{
    if (j.is_string())
        return Rational::parse(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(j.get<long>());
    schema_error("expected a rational string");
}

} // namespace

json to_json(const TransitiveOrbit& orbit)
{
    json rows = json::array();
    for (const auto& r : orbit.rows())
        rows.push_back(r);
    return {{"h", orbit.rank()}, {"size", to_string(orbit.size())}, {"hnf", rows}};
}

TransitiveOrbit orbit_from_json(const json& j)
{
    try {
        const int h = field(j, "h").get<int>();
        const auto rows = field(j, "hnf").get<std::vector<LatticeVector>>();
        if (static_cast<int>(rows.size()) != h)
            schema_error("hnf row count differs from h");
        auto orbit = TransitiveOrbit::from_rows(rows);
        if (j.contains("size") && Rational::parse(j.at("size").get<std::string>()) != Rational(orbit.size()))
            schema_error("orbit size does not match hnf determinant");
        return orbit;
    } catch (const json::exception& e) {
        schema_error(std::string("bad orbit: ") + e.what());
    }
}

json to_json(const OrderMode& mode)
{
    if (mode.is_all_orders())
        return "all";
    return {{"p", mode.prime()}};
}

OrderMode mode_from_json(const json& j)
{
    if (j.is_string() && j.get<std::string>() == "all")
        return OrderMode::all_orders();
    if (j.is_object() && j.contains("p") && j.at("p").is_number_unsigned())
        return OrderMode::p_power(j.at("p").get<std::uint64_t>());
    schema_error("mode must be \"all\" or {\"p\":<prime>}");
}

json to_json(const OrbitTypeMultiset& type)
{
    json entries = json::array();
    for (const auto& [orbit, mult] : type.entries())
        entries.push_back({{"orbit", to_json(orbit)}, {"mult", mult}});
    return {{"type", entries},
            {"centralizer_order", to_string(centralizer_order(type))},
            {"class_size", to_string(class_size(type))}};
}

OrbitTypeMultiset type_from_json(int h, const OrderMode& mode, const json& j)
{
    const json& entries = field(j, "type");
    if (!entries.is_array())
        schema_error("class type must be an array");
    std::vector<OrbitTypeMultiset::Entry> out;
    for (const auto& e : entries) {
        const auto& mult = field(e, "mult");
        if (!mult.is_number_unsigned() || mult.get<std::uint32_t>() == 0)
            schema_error("multiplicity must be a positive integer");
        out.emplace_back(orbit_from_json(field(e, "orbit")), mult.get<std::uint32_t>());
    }
    return OrbitTypeMultiset::from_entries(h, mode, std::move(out));
}

json to_json(const ClassFunction<Rational>& f)
{
    json values = json::array();
    for (std::size_t i = 0; i < f.classes().size(); ++i)
        values.push_back({{"class", to_json(f.classes()[i])}, {"value", f[i].to_string()}});
    return {{"h", f.rank()}, {"mode", to_json(f.mode())}, {"l", f.degree()}, {"values", values}};
}

ClassFunction<Rational> class_function_from_json(const json& j)
{
    try {
        const int h = field(j, "h").get<int>();
        const OrderMode mode = mode_from_json(field(j, "mode"));
        const auto l = field(j, "l").get<std::uint64_t>();
        const auto list = class_list(h, l, mode);
        std::vector<Rational> values(list->size());
        std::vector<bool> seen(list->size(), false);
        for (const auto& entry : field(j, "values")) {
            const auto type = type_from_json(h, mode, field(entry, "class"));
            if (type.degree() != l)
                schema_error("class " + type.to_string() + " has wrong degree");
            const std::size_t i = list->index_of(type);
            if (seen[i])
                schema_error("class " + type.to_string() + " listed twice");
            seen[i] = true;
            values[i] = rational_from_json(field(entry, "value"));
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                schema_error("class function is missing class " + (*list)[i].to_string());
        return ClassFunction<Rational>(list, std::move(values));
    } catch (const json::exception& e) {
        schema_error(std::string("bad class function: ") + e.what());
    }
}

json to_json(const PsiPolynomial& p)
{
    json terms = json::array();
    for (const auto& [monomial, coefficient] : p.terms()) {
        json factors = json::array();
        for (const auto& [symbol, exponent] : monomial.factors())
            factors.push_back({{"family", symbol.family}, {"orbit", to_json(symbol.orbit)}, {"exp", exponent}});
        terms.push_back({{"monomial", factors}, {"value", coefficient.to_string()}});
    }
    return terms;
}

PsiPolynomial polynomial_from_json(const json& j)
{
    if (!j.is_array())
        schema_error("polynomial must be an array of terms");
    PsiPolynomial out;
    for (const auto& term : j) {
        std::vector<Monomial::Factor> factors;
        for (const auto& f : field(term, "monomial"))
            factors.emplace_back(PsiSymbol{field(f, "family").get<std::string>(), orbit_from_json(field(f, "orbit"))},
                                 field(f, "exp").get<unsigned>());
        out += PsiPolynomial(Monomial::from_factors(std::move(factors)), rational_from_json(field(term, "value")));
    }
    return out;
}

json to_json(const GenusSeriesReport& report)
{
    json lhs = json::array();
    json rhs = json::array();
    for (std::size_t n = 0; n <= report.precision; ++n) {
        lhs.push_back(to_json(report.lhs[n]));
        rhs.push_back(to_json(report.rhs[n]));
    }
    return {{"h", report.h},
            {"p", report.mode.is_all_orders() ? json(nullptr) : json(report.mode.prime())},
            {"precision", report.precision},
            {"equal", report.equal},
            {"first_mismatch", report.first_mismatch ? json(*report.first_mismatch) : json(nullptr)},
            {"lhs", lhs},
            {"rhs", rhs}};
}

TableModel table_model_from_json(const json& j)
{
    if (!j.is_array())
        schema_error("table model must be an array of {orbit, psi} records");
    TableModel model;
    std::set<int> ranks;
    for (const auto& entry : j) {
        auto orbit = orbit_from_json(field(entry, "orbit"));
        ranks.insert(orbit.rank());
        const Rational value = rational_from_json(field(entry, "psi"));
        if (!model.psi.emplace(std::move(orbit), value).second)
            schema_error("table model lists an orbit twice");
    }
    if (ranks.size() > 1)
        schema_error("table model mixes orbits of different rank");
    return model;
}

json read_json_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open '" + path.string() + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument("'" + path.string() + "' is not valid json: " + e.what());
    }
}

TableModel load_table_model(const std::filesystem::path& path) { return table_model_from_json(read_json_file(path)); }

} // namespace orbigenus::io
