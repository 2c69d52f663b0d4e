#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <random>

#include "orbigenus/io.hpp"
#include "support/oracles.hpp"

using namespace orbigenus;
using io::json;

TEST_CASE("orbit JSON")
{
    const auto t = TransitiveOrbit::from_hnf(2, {1, 1, 0, 2});
    CHECK(io::to_json(t).dump() == R"({"h":2,"size":"2","hnf":[[1,1],[0,2]]})");
    CHECK(io::orbit_from_json(io::to_json(t)) == t);
    for (const auto& o : orbits_up_to(3, 8, OrderMode::all_orders()))
        CHECK(io::orbit_from_json(json::parse(io::to_json(o).dump())) == o);
    CHECK_THROWS_AS(io::orbit_from_json(json::parse(R"({"h":2,"size":"3","hnf":[[1,1],[0,2]]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::orbit_from_json(json::parse(R"({"h":2,"hnf":[[1,2],[0,2]]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::orbit_from_json(json::parse(R"({"h":2,"hnf":[[1,0]]})")), std::invalid_argument);
    CHECK_THROWS_AS(io::orbit_from_json(json::parse(R"({"hnf":"x"})")), std::invalid_argument);
}

TEST_CASE("mode JSON")
{
    CHECK(io::to_json(OrderMode::all_orders()).dump() == R"("all")");
    CHECK(io::to_json(OrderMode::p_power(3)).dump() == R"({"p":3})");
    CHECK(io::mode_from_json(io::to_json(OrderMode::p_power(5))) == OrderMode::p_power(5));
    CHECK_THROWS_AS(io::mode_from_json(json::parse(R"({"p":4})")), std::invalid_argument);
    CHECK_THROWS_AS(io::mode_from_json(json::parse(R"("some")")), std::invalid_argument);
}

TEST_CASE("class function JSON round trip")
{
    std::mt19937_64 rng(9);
    for (const auto& mode : {OrderMode::all_orders(), OrderMode::p_power(2)}) {
        const auto f = testing::random_class_function(2, 4, mode, rng);
        const auto text = io::to_json(f).dump();
        CHECK(io::class_function_from_json(json::parse(text)) == f);
        CHECK(io::to_json(io::class_function_from_json(json::parse(text))).dump() == text);
    }

    auto j = io::to_json(ClassFunction<Rational>::one(1, 3, OrderMode::all_orders()));
    CHECK(j.at("values").at(0).at("value") == "1");
    auto missing = j;
    missing["values"].erase(missing["values"].begin());
    CHECK_THROWS_AS(io::class_function_from_json(missing), std::invalid_argument);
    auto doubled = j;
    doubled["values"].push_back(j["values"][0]);
    CHECK_THROWS_AS(io::class_function_from_json(doubled), std::invalid_argument);
    auto bad_value = j;
    bad_value["values"][0]["value"] = "1/0";
    CHECK_THROWS(io::class_function_from_json(bad_value));
}

TEST_CASE("polynomial and report JSON")
{
    const auto report = verify_dmvv(GenusModel::symbolic(), 4, 2, OrderMode::p_power(2));
    const auto j = io::to_json(report);
    CHECK(j.at("h") == 2);
    CHECK(j.at("p") == 2);
    CHECK(j.at("precision") == 4);
    CHECK(j.at("equal") == true);
    CHECK(j.at("first_mismatch").is_null());
    REQUIRE(j.at("lhs").size() == 5);
    for (std::size_t n = 0; n <= 4; ++n) {
        CHECK(io::polynomial_from_json(j.at("lhs").at(n)) == report.lhs[n]);
        CHECK(io::polynomial_from_json(j.at("rhs").at(n)) == report.rhs[n]);
    }
    const auto keys = std::vector<std::string>{"h", "p", "precision", "equal", "first_mismatch", "lhs", "rhs"};
    std::vector<std::string> order;
    for (const auto& item : j.items())
        order.push_back(item.key());
    CHECK(order == keys);
    CHECK(io::to_json(verify_dmvv(GenusModel::symbolic(), 2, 1, OrderMode::all_orders())).at("p").is_null());
    CHECK(io::to_json(PsiPolynomial()).dump() == "[]");
}

TEST_CASE("table model JSON")
{
    const auto trivial = io::to_json(TransitiveOrbit::trivial(2));
    const auto two = io::to_json(TransitiveOrbit::from_hnf(2, {1, 0, 0, 2}));
    const auto model = io::table_model_from_json(json::array({{{"orbit", trivial}, {"psi", "3"}}, {{"orbit", two}, {"psi", "1/2"}}}));
    CHECK(model.psi.size() == 2);
    CHECK(model.psi.at(TransitiveOrbit::trivial(2)) == Rational(3));

    CHECK_THROWS_AS(io::table_model_from_json(json::array({{{"orbit", trivial}, {"psi", "1"}}, {{"orbit", trivial}, {"psi", "2"}}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::table_model_from_json(json::array({{{"orbit", trivial}, {"psi", "1"}},
                                                           {{"orbit", io::to_json(TransitiveOrbit::trivial(1))}, {"psi", "1"}}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(io::table_model_from_json(json::object()), std::invalid_argument);
    CHECK_THROWS_AS(io::table_model_from_json(json::array({{{"orbit", trivial}}})), std::invalid_argument);

    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "orbigenus_io_table.json";
    {
        std::ofstream out(path);
        out << json::array({{{"orbit", trivial}, {"psi", "5"}}}).dump();
    }
    CHECK(io::load_table_model(path).psi.at(TransitiveOrbit::trivial(2)) == Rational(5));
    {
        std::ofstream out(path);
        out << "[{";
    }
    CHECK_THROWS_AS(io::load_table_model(path), std::invalid_argument);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(io::load_table_model(dir / "orbigenus_no_such_file.json"), std::invalid_argument);
}
