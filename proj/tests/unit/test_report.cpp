#include <doctest.h>

#include "kst/constructions.hpp"
#include "kst/report.hpp"

using namespace kst;
using nlohmann::json;

TEST_CASE("rounding to 12 significant digits")
{
    CHECK(round12(3.14159265358979) == 3.14159265359);
    CHECK(round12(0.0) == 0.0);
    CHECK(round12(1e-20) == 1e-20);
    CHECK(json(round12(4.0)).dump() == "4.0");
}

TEST_CASE("reports carry an ok flag")
{
    const json a = verify_fst_root_sandwich(20, 2, 2, 0.5);
    CHECK(a.at("ok").get<bool>());
    CHECK(a.at("sandwich_ok").get<bool>());
    const json b = verify_structure(extremal_gstar(22, StParams(2, 5)), 2, 5);
    CHECK(b.at("census").at("t_plus_1") == 1);
    const json c = brute_force_extremal(5, 2, 2, 0.5);
    CHECK(c.at("best_graph").is_string());
    CHECK(c.at("ok").get<bool>());
}

TEST_CASE("csv flattens scalar members")
{
    const json j = {{"a", 1}, {"b", "x"}, {"c", json::array({1, 2})}, {"d", nullptr}};
    CHECK(to_csv(j) == "a,b,d\n1,x,\n");
}
