#include "doctest.h"

#include <map>

#include "dpz/dp1.hpp"
#include "dpz/dp4.hpp"
#include "dpz/tables.hpp"
#include "dpz/verify.hpp"
#include "dpz/weyl.hpp"

using namespace dpz;

TEST_CASE("embedded table rows are internally consistent") {
    for (auto* table : {&tables::table_dp2(), &tables::table_dp1(), &tables::table_dp4(),
                        &tables::table_cubics()}) {
        for (auto& row : *table) {
            if (!row.same_as.empty()) continue;
            long total = 0;
            for (auto& cc : row.class_counts) total += cc.count;
            CHECK(total == row.order);
        }
    }
}

TEST_CASE("carter consistency report passes") {
    auto rep = verify::verify_carter_consistency();
    for (auto& r : rep.rows) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.status == "match");
    }
    CHECK(rep.ok());
}

TEST_CASE("implied histograms: Table 6 row I at characteristic 5") {
    const tables::ExpectedRow* row = nullptr;
    for (auto& r : tables::table_dp1())
        if (r.name == "I" && r.chars == "=5") row = &r;
    REQUIRE(row);
    auto hist = tables::implied_histogram(*row, 8);
    std::map<int, long> h(hist.begin(), hist.end());
    CHECK(h[5] == 24);   // 2A_4
    CHECK(h[30] == 48);  // E_8
    CHECK(h[24] == 120); // E_8(a_1)
    long total = 0;
    for (auto& [o, c] : h) total += c;
    CHECK(total == 720);
}

TEST_CASE("dp4 verification at p = 3 and p = 7") {
    for (uint32_t p : {3u, 7u}) {
        auto rep = verify::verify_table("dp4", p, 20240817, false);
        INFO(rep.summary());
        CHECK(rep.ok());
        // the general row must be a genuine match, not a skip
        bool general_matched = false;
        for (auto& r : rep.rows)
            if (r.name == "general" && r.status == "match") general_matched = true;
        CHECK(general_matched);
    }
}

TEST_CASE("recomputation in a larger field gives the same order") {
    // dp4 (zeta3, zeta3) at p = 7: zeta3 lives in F_7 already, and the order
    // is stable under extension of the search field
    const Fq& F7 = make_field(7, 1);
    const Fq& F49 = make_field(7, 2);
    Fq::Elem z7 = 0;
    for (uint32_t x = 0; x < 7; ++x)
        if (F7.add(F7.add(F7.mul(x, x), x), 1) == 0) z7 = x;
    auto small = dp4::aut_dp4(dp4::make_dp4(F7, z7, z7));
    Fq::Elem z49 = get_embedding(F7, F49).map(z7);
    auto big = dp4::aut_dp4(dp4::make_dp4(F49, z49, z49));
    CHECK(small.order == 96);
    CHECK(big.order == 96);

    // dp1: the order-20 surface computed over GF(25) and GF(125)
    const Fq& F5 = make_field(5, 1);
    auto W = dp1::make_family1(dp1::Family1::D10Char5, {1}, F5);
    CHECK(dp1::aut_dp1(W, make_field(5, 2)).order == 20);
    CHECK(dp1::aut_dp1(W, make_field(5, 3)).order == 20);
}

TEST_CASE("binary form stabilizer: P^1(F_5) configuration inside PGL_2(25)") {
    const Fq& F25 = make_field(5, 2);
    MultiPoly f = mp_embed(parse_poly(make_field(5, 1), 2, "t0*t1^5 - t0^5*t1"),
                           get_embedding(make_field(5, 1), F25));
    auto G = stabilizer_of_form(f, SearchStrategy::Plain);
    CHECK(G.order() == 120);
}

TEST_CASE("json report shape") {
    auto rep = verify::verify_carter_consistency();
    auto js = rep.to_json();
    CHECK(js.find("\"table\"") != std::string::npos);
    CHECK(js.find("\"rows\"") != std::string::npos);
    CHECK(js.find("\"status\"") != std::string::npos);
}
