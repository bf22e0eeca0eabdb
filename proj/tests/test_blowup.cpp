#include "support.hpp"

#include "wchow/blowup.hpp"

#include <doctest.h>

using namespace wchow;
using namespace testing_support;

namespace {

std::string shape(const GradedPresentation& a, std::int64_t n) { return graded_piece(a, n).to_string(); }

}  // namespace

TEST_CASE("invariant ring of the weighted blow-up") {
    CHECK(invariant_ring_check(4, 6, 12));
    CHECK(invariant_ring_check(1, 1, 10));
    CHECK(invariant_ring_check(2, 3, 20));
    for (std::int64_t w1 = 1; w1 <= 6; ++w1)
        for (std::int64_t w2 = w1; w2 <= 6; ++w2) CHECK(invariant_ring_check(w1, w2, 15));
    CHECK_THROWS_AS(invariant_ring_check(4, 6, 0), std::invalid_argument);
    CHECK_THROWS_AS(invariant_ring_check(0, 6, 5), std::invalid_argument);
}

TEST_CASE("invariant monomials: enumeration oracle") {
    // Independently of the library: x^i y^j u^k is invariant iff
    // k = i*w1 + j*w2, and then it is the product (u^w1 x)^i (u^w2 y)^j.
    BlowupData b(2, 3);
    auto g = b.grading();
    int invariant = 0;
    for (long i = 0; i <= 20; ++i)
        for (long j = 0; i + j <= 20; ++j)
            for (long k = 0; i + j + k <= 20; ++k) {
                auto m = Monomial::variable("x", static_cast<std::uint32_t>(i)) *
                         Monomial::variable("y", static_cast<std::uint32_t>(j)) *
                         Monomial::variable("u", static_cast<std::uint32_t>(k));
                bool inv = m.weighted_degree(g) == 0;
                CHECK(inv == (k == 2 * i + 3 * j));
                invariant += inv;
            }
    // (i,j) with 3i + 4j <= 20.
    int expected = 0;
    for (long i = 0; 3 * i <= 20; ++i)
        for (long j = 0; 3 * i + 4 * j <= 20; ++j) ++expected;
    CHECK(invariant == expected);
    auto m = parse_polynomial("x^3*y^2*u^12");
    CHECK(m == parse_polynomial("(u^2*x)^3*(u^3*y)^2"));
}

TEST_CASE("charts") {
    auto c1 = chart(BlowupData(4, 6), 1);
    CHECK(c1.group() == "mu_4");
    CHECK(c1.action_weights == std::pair<std::int64_t, std::int64_t>{-4, 1});
    REQUIRE(c1.alpha.size() == 3);
    CHECK(c1.alpha[0] == Polynomial(1));
    CHECK(c1.alpha[1] == parse_polynomial("a"));
    CHECK(c1.alpha[2] == parse_polynomial("b"));
    CHECK(c1.blowdown[0] == parse_polynomial("b^4"));
    CHECK(c1.blowdown[1] == parse_polynomial("a*b^6"));
    CHECK(c1.ambiguous);
    CHECK(c1.beta == "xi -> xi^(-i)");

    auto c2 = chart(BlowupData(4, 6), 2);
    CHECK(c2.group() == "mu_6");
    CHECK(c2.alpha[1] == Polynomial(1));
    CHECK(c2.blowdown[1] == parse_polynomial("b^6"));

    auto plain = chart(BlowupData(1, 1), 1);
    CHECK(plain.group() == "mu_1");
    CHECK(plain.blowdown[1] == parse_polynomial("a*b"));
    CHECK_THROWS_AS(chart(BlowupData(4, 6), 3), std::invalid_argument);

    // The blow-down composed with alpha is the invariant map
    // (u^w1 x, u^w2 y) restricted to the chart.
    BlowupData b(4, 6);
    for (int which : {1, 2}) {
        auto c = chart(b, which);
        std::map<std::string, Polynomial> s{{"x", c.alpha[0]}, {"y", c.alpha[1]}, {"u", c.alpha[2]}};
        CHECK(parse_polynomial("u^4*x").substitute(s) == c.blowdown[0]);
        CHECK(parse_polynomial("u^6*y").substitute(s) == c.blowdown[1]);
    }
}

TEST_CASE("exceptional divisor classes") {
    auto s = exceptional_selfintersection(BlowupData(4, 6));
    CHECK(s.e_squared_on_e.to_string() == "-t");
    REQUIRE(s.degree_two.size() == 3);
    CHECK(s.degree_two[0].source.to_string() == "x^2");
    CHECK(s.degree_two[0].exceptional_part.to_string() == "t");
    CHECK(s.degree_two[0].open_part.to_string() == "t^2");
    CHECK(s.degree_two[1].exceptional_part.value().is_zero());
    CHECK(s.degree_two[1].open_part.value().is_zero());
    CHECK(s.degree_two[2].exceptional_part.to_string() == "-t");
    CHECK(s.degree_two[2].open_part.value().is_zero());
    CHECK_THROWS_AS(exceptional_selfintersection(BlowupData(2, 3)), std::invalid_argument);
}

TEST_CASE("open part U") {
    CHECK(cusp_class().to_string() == "24t^2");
    auto u = cusp_complement_chow();
    CHECK(shape(u, 0) == "Z");
    CHECK(shape(u, 1) == "Z");
    for (std::int64_t n = 2; n <= 8; ++n) CHECK(shape(u, n) == "Z/24");
}

TEST_CASE("assembly of the compactified ring") {
    auto a = m12bar_chow();
    CHECK(a.to_string() == "Z[x,y]/(xy,24x^2+24y^2)");
    auto rows = assembly_table(a, 8);
    REQUIRE(rows.size() == 9);
    CHECK(rows[0].exceptional_piece.is_trivial());
    CHECK(rows[1].expected.to_string() == "Z^2");
    CHECK(rows[2].expected.to_string() == "Z + Z/24");
    CHECK(rows[5].expected.to_string() == "Z/24 + Z/24");
    for (const auto& r : rows) CHECK(r.matches);

    auto bad = assembly_table(m12bar_presentation(23), 8);
    CHECK(bad[0].matches);
    CHECK(bad[1].matches);
    for (std::size_t n = 2; n < bad.size(); ++n) CHECK_FALSE(bad[n].matches);
    CHECK_FALSE(assembly_table(m12bar_presentation(12), 3)[2].matches);
}

TEST_CASE("Phi in degree two") {
    auto ok = phi_degree_two_check(m12bar_presentation());
    CHECK(ok.matches);
    CHECK(ok.kernel.size() == 2);
    CHECK_FALSE(phi_degree_two_check(m12bar_presentation(48)).matches);
    CHECK_FALSE(phi_degree_two_check(m12bar_presentation(23)).matches);
}

TEST_CASE("open two-pointed ring") {
    auto removed = open_part_removed_classes();
    REQUIRE(removed.size() == 3);
    CHECK(removed[0].to_string() == "12t");
    CHECK(removed[1].to_string() == "12t^2");
    auto a = m12_open_chow();
    CHECK(a.to_string() == "Z[t]/(12t)");
    CHECK(shape(a, 0) == "Z");
    for (std::int64_t n = 1; n <= 8; ++n) CHECK(shape(a, n) == "Z/12");
    // The degree-1 piece has order exactly 12.
    CHECK(graded_piece(a, 1) != AbelianGroupShape::cyclic(6));
    CHECK(graded_piece(a, 1) != AbelianGroupShape::cyclic(24));
    // Without the curve class the quotient would be different.
    auto partial = quotient(cusp_complement_chow(), {removed[1], removed[2]});
    CHECK(shape(partial, 1) == "Z");
}

TEST_CASE("restriction homomorphism") {
    auto h = restriction_hom();
    CHECK(h.to_string() == "Z[x,y]/(xy,24x^2+24y^2) -> Z[t]/(12t): x -> t, y -> 0");
    // Degree 0 is the identity on Z: both pieces are Z and 1 -> 1.
    CHECK(graded_piece(h.source, 0) == graded_piece(h.target, 0));

    auto target = h.target;
    try {
        certify(h.source, target, {{"x", generator(target, "t")}, {"y", generator(target, "t")}});
        FAIL("x -> t, y -> t must be rejected");
    } catch (const HomCheckError& e) {
        REQUIRE(e.failing().size() == 1);
        CHECK(e.failing()[0] == parse_polynomial("x*y"));
    }
    // 24t^2 = 2t * 12t, so the quadric maps to zero.
    CHECK(is_zero(element(target, "24*t^2")));
    CHECK_FALSE(is_zero(element(target, "t^2")));
}
