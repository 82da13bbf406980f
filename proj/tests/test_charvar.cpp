#include <catch2/catch_amalgamated.hpp>

#include <sl2tqft/charvar.hpp>

using namespace sl2tqft;

namespace {
LaurentPoly parse(const std::string& s) { return LaurentPoly::parse(s); }
}  // namespace

TEST_CASE("spot values") {
    CHECK(e_char(CharVarQuery::free_group(1)) == LaurentPoly::q());
    CHECK(e_char(CharVarQuery::free_group(2)) == parse("q^3"));  // F_2 gives affine 3-space
    CHECK(e_char(CharVarQuery::surface(1)) == parse("q^2 + 1"));
    CHECK(e_char(CharVarQuery::surface(2)) == parse("q^6 + 17*q^4 + q^2 + 1"));
    CHECK(e_char(CharVarQuery::surface(3)) ==
          parse("q^12 - 4*q^10 + 74*q^8 + 375*q^6 + 16*q^4 + q^2 + 1"));
    CHECK(e_char(CharVarQuery::free_group(4)) ==
          parse("q^9 - 3*q^7 - q^6 + 6*q^5 - 2*q^4 + 3*q^2"));
    CHECK(e_char(CharVarQuery::abelian(3)) == parse("q^3 + 3*q"));
    CHECK(e_char(CharVarQuery::free_parabolic(2, 1)) == parse("q^5 - 2*q^3 + 4*q^2 - 3*q"));
    CHECK(e_char(CharVarQuery::free_parabolic(1, 2)) == parse("q^4 - 4*q + 3"));
}

TEST_CASE("abelian closed form") {
    for (int n = 1; n <= 6; ++n) {
        const LaurentPoly expected =
            exact_div(q_minus_1().pow(n) + q_plus_1().pow(n), LaurentPoly(2));
        CHECK(e_char(CharVarQuery::abelian(n)) == expected);
        CHECK(e_reducible_quotient(CharVarQuery::abelian(n)) == expected);
        CHECK(e_irreducible_quotient(CharVarQuery::abelian(n)).is_zero());
    }
}

TEST_CASE("parabolic surface values") {
    CHECK(e_char(CharVarQuery::parabolic_surface(1, 1, 0, 0)) == parse("q^2 - 2*q - 3"));
    CHECK(e_char(CharVarQuery::parabolic_surface(2, 1, 0, 0)) ==
          parse("q^8 - 3*q^6 - 4*q^5 - 39*q^4 - 4*q^3 - 15*q^2"));
    // twisted torus with one -Id puncture is rigid
    CHECK(e_char(CharVarQuery::parabolic_surface(1, 0, 0, 1)) == LaurentPoly(1));
    CHECK(e_char(CharVarQuery::parabolic_surface(2, 0, 0, 1)) ==
          parse("q^6 - 2*q^4 - 30*q^3 - 2*q^2 + 1"));
    CHECK(e_char(CharVarQuery::parabolic_surface(1, 2, 0, 0)) ==
          parse("q^4 + q^3 + 4*q^2 - q + 3"));
    CHECK(e_char(CharVarQuery::parabolic_surface(1, 1, 1, 0)) == parse("q^4 - 3*q^2 - 6*q"));
    CHECK(e_char(CharVarQuery::parabolic_surface(2, 1, 0, 1)) ==
          parse("q^8 - 3*q^6 + 15*q^5 + 6*q^4 + 45*q^3"));
    // sigma normalization: r = 0 with even t is the closed-surface case
    CHECK(e_char(CharVarQuery::parabolic_surface(2, 0, 0, 2)) == e_char(CharVarQuery::surface(2)));
    // one J- and one -Id is untwisted with r = 1
    CHECK(e_char(CharVarQuery::parabolic_surface(1, 0, 1, 1)) ==
          e_char(CharVarQuery::parabolic_surface(1, 1, 0, 0)));
}

TEST_CASE("reducible quotients") {
    CHECK(e_reducible_quotient(CharVarQuery::free_group(2)) == parse("q^2 + 1"));
    CHECK(e_reducible_quotient(CharVarQuery::surface(1)) == parse("q^2 + 1"));
    // twisted varieties carry no reducibles
    CHECK(e_reducible_quotient(CharVarQuery::parabolic_surface(2, 1, 0, 1)).is_zero());
    // frozen parabolic reducible quotients
    CHECK(e_reducible_quotient(CharVarQuery::parabolic_surface(1, 2, 0, 0)) ==
          parse("q^3 + q^2 - q + 3"));
    CHECK(e_reducible_quotient(CharVarQuery::parabolic_surface(2, 1, 0, 0)) ==
          parse("q^6 - 4*q^5 + 6*q^4 - 4*q^3 - 15*q^2"));
}

TEST_CASE("decomposition consistency on the acceptance grids") {
    for (int n = 1; n <= 6; ++n) {
        INFO("FreeGroup(" << n << ")");
        CHECK(consistency_check(CharVarQuery::free_group(n)));
    }
    for (int g = 1; g <= 4; ++g) {
        INFO("Surface(" << g << ")");
        CHECK(consistency_check(CharVarQuery::surface(g)));
    }
    for (int n = 1; n <= 3; ++n)
        for (int s = 0; s <= 3; ++s) {
            INFO("FreeParabolic(" << n << "," << s << ")");
            CHECK(consistency_check(CharVarQuery::free_parabolic(n, s)));
        }
    for (int g = 1; g <= 3; ++g)
        for (int r = 0; r <= 3; ++r)
            for (int t = 0; t <= 1; ++t) {
                INFO("ParabolicSurface(g=" << g << ", r=" << r << ", t=" << t << ")");
                CHECK(consistency_check(CharVarQuery::parabolic_surface(g, r, 0, t)));
            }
}

TEST_CASE("free-group stratum sum reconstructs the full space") {
    for (int n = 1; n <= 5; ++n) {
        const auto st = detail::free_group_strata(n);
        CHECK(st.xp_hat + st.xd_hat + st.xi + st.xtilde + st.xirr == sl2_class().pow(n));
    }
    // single matrices are never irreducible
    CHECK(detail::free_group_strata(1).xirr.is_zero());
}

TEST_CASE("stratum anchors") {
    // reducible total space of the parabolic free group at n = 2g = 2, s = 1
    CHECK(detail::pfree_xred(2, 1) == q_minus_1().pow(3) * q_plus_1() * LaurentPoly::q(2));
    // on the torus every representation is reducible, in two guises
    CHECK(e_irreducible_quotient(CharVarQuery::surface(1)).is_zero());
    CHECK(detail::surf_xred(1) == LaurentPoly::parse("q^4 + 4*q^3 - q^2 - 4*q"));
}

TEST_CASE("character varieties are affine: no negative exponents") {
    std::vector<CharVarQuery> queries;
    for (int n = 1; n <= 5; ++n) queries.push_back(CharVarQuery::free_group(n));
    for (int g = 1; g <= 3; ++g) queries.push_back(CharVarQuery::surface(g));
    for (int g = 1; g <= 2; ++g)
        for (int r = 0; r <= 3; ++r)
            for (int t = 0; t <= 1; ++t) queries.push_back(CharVarQuery::parabolic_surface(g, r, 0, t));
    for (const auto& query : queries) {
        for (const LaurentPoly& p :
             {e_char(query), e_reducible_quotient(query), e_irreducible_quotient(query)}) {
            if (!p.is_zero()) CHECK(p.min_exp() >= 0);
        }
    }
}

TEST_CASE("query validation") {
    CHECK_THROWS_AS(e_char(CharVarQuery::free_group(0)), std::invalid_argument);
    CHECK_THROWS_AS(e_char(CharVarQuery::surface(0)), std::invalid_argument);
    CHECK_THROWS_AS(e_char(CharVarQuery::parabolic_surface(0, 1, 0, 0)), std::invalid_argument);
}
