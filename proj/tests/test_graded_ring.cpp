#include "support.hpp"

#include "wchow/graded_ring.hpp"

#include <doctest.h>

#include <future>

using namespace wchow;
using namespace testing_support;

namespace {

GradedPresentation two_pointed(long c) {
    return GradedPresentation({{"x", 1}, {"y", 1}},
                              {parse_polynomial("x*y"), parse_polynomial(std::to_string(c) + "*x^2 + " +
                                                                         std::to_string(c) + "*y^2")});
}

std::string shape(const GradedPresentation& a, std::int64_t n) { return graded_piece(a, n).to_string(); }

// Number of (e1..ek) >= 0 with sum e_i d_i = n.
std::size_t count_solutions(const std::vector<std::int64_t>& d, std::int64_t n, std::size_t i = 0) {
    if (i == d.size()) return n == 0 ? 1 : 0;
    std::size_t total = 0;
    for (std::int64_t e = 0; e * d[i] <= n; ++e) total += count_solutions(d, n - e * d[i], i + 1);
    return total;
}

}  // namespace

TEST_CASE("construction is validated") {
    CHECK_THROWS_AS(GradedPresentation({{"x", 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(GradedPresentation({{"x", 1}, {"x", 2}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(GradedPresentation({{"x", 1}}, {parse_polynomial("x/2")}), std::invalid_argument);
    CHECK_THROWS_AS(GradedPresentation({{"x", 1}}, {parse_polynomial("y")}), std::invalid_argument);
    CHECK_THROWS_AS(GradedPresentation({{"x", 1}}, {parse_polynomial("x^2 + x")}), InhomogeneousError);
    GradedPresentation a({{"x", 1}}, {Polynomial(), parse_polynomial("2*x")});
    CHECK(a.relations().size() == 1);
}

TEST_CASE("monomial bases have the right size") {
    GradedPresentation a({{"a", 2}, {"b", 3}, {"c", 4}}, {});
    for (std::int64_t n = 0; n <= 20; ++n) {
        auto basis = a.monomial_basis(n);
        CHECK(basis.size() == count_solutions({2, 3, 4}, n));
        for (const auto& m : basis) CHECK(m.weighted_degree(a.grading()) == n);
    }
    CHECK(a.monomial_basis(-1).empty());
    auto xy = two_pointed(24).monomial_basis(2);
    REQUIRE(xy.size() == 3);
    CHECK(xy[0].to_string() == "x^2");
    CHECK(xy[1].to_string() == "x*y");
    CHECK(xy[2].to_string() == "y^2");
}

TEST_CASE("pieces of Z[x,y]/(xy, 24x^2+24y^2)") {
    auto a = two_pointed(24);
    CHECK(a.to_string() == "Z[x,y]/(xy,24x^2+24y^2)");
    CHECK(shape(a, 0) == "Z");
    CHECK(shape(a, 1) == "Z^2");
    CHECK(shape(a, 2) == "Z + Z/24");
    for (std::int64_t n = 3; n <= 8; ++n) CHECK(shape(a, n) == "Z/24 + Z/24");
    CHECK(shape(a, -2) == "0");
}

TEST_CASE("pieces of Z[x,y]/(xy, c x^2 + c y^2) for other c") {
    // Degree n >= 3: x^n and y^n with c x^n = c y^n = 0 (from x^{n-2}
    // times the quadric and xy = 0), so (Z/c)^2.
    for (long c = 1; c <= 30; ++c) {
        auto a = two_pointed(c);
        auto zc = AbelianGroupShape::cyclic(c);
        CHECK(graded_piece(a, 2) == direct_sum(AbelianGroupShape::free_abelian(1), zc));
        CHECK(graded_piece(a, 3) == direct_sum(zc, zc));
        CHECK(graded_piece(a, 6) == direct_sum(zc, zc));
    }
}

TEST_CASE("relations with unequal degrees") {
    GradedPresentation u({{"t", 1}}, {parse_polynomial("24*t^3"), parse_polynomial("24*t^2")});
    CHECK(u.to_string() == "Z[t]/(24t^3,24t^2)");
    std::vector<std::string> want{"Z", "Z", "Z/24", "Z/24", "Z/24"};
    for (std::int64_t n = 0; n < 5; ++n) CHECK(shape(u, n) == want[static_cast<std::size_t>(n)]);
    GradedPresentation w({{"a", 2}, {"b", 3}}, {parse_polynomial("6*a^3 - 6*b^2")});
    CHECK(shape(w, 6) == "Z + Z/6");
    CHECK(shape(w, 5) == "Z");
    CHECK(shape(w, 1) == "0");
}

TEST_CASE("is_zero recognizes the ideal") {
    auto a = two_pointed(24);
    CHECK(is_zero(element(a, "24*x^2 + 24*y^2")));
    CHECK(is_zero(element(a, "x*y")));
    CHECK(is_zero(element(a, "24*x^3")));
    CHECK_FALSE(is_zero(element(a, "12*x^3")));
    CHECK_FALSE(is_zero(element(a, "x^2")));
    CHECK(is_zero(zero_element(a, 5)));

    // Random combinations of multiples of relations.
    Rng rng(8);
    for (int i = 0; i < 100; ++i) {
        std::int64_t n = uniform(rng, 2, 6);
        Polynomial sum;
        for (const auto& r : a.relations()) {
            for (const auto& m : a.monomial_basis(n - 2)) sum += Polynomial(m, Rational(uniform(rng, -5, 5))) * r;
        }
        CHECK(is_zero(GradedElement(a, sum, n)));
        auto extra = Polynomial(a.monomial_basis(n)[0]);
        CHECK_FALSE(is_zero(GradedElement(a, sum + extra, n)));
    }
}

TEST_CASE("graded pieces do not change when redundant relations are added") {
    Rng rng(13);
    auto a = two_pointed(24);
    for (int i = 0; i < 30; ++i) {
        std::vector<GradedElement> extra;
        std::int64_t d = uniform(rng, 0, 3);
        Polynomial combo;
        for (const auto& m : a.monomial_basis(d)) combo += Polynomial(m, Rational(uniform(rng, -4, 4))) * a.relations()[1];
        combo += Polynomial(uniform(rng, -3, 3)) * a.relations()[0] * Polynomial(a.monomial_basis(d).front());
        if (combo.is_zero()) continue;
        extra.emplace_back(a, combo, d + 2);
        auto b = quotient(a, extra);
        CHECK(pieces_equal(a, b, 8));
        CHECK(same_ideal(a, b));
    }
}

TEST_CASE("elements and degree checks") {
    auto a = two_pointed(24);
    auto x = generator(a, "x");
    auto y = generator(a, "y");
    CHECK((x * y).degree() == 2);
    CHECK((x + y).to_string() == "x+y");
    CHECK_THROWS_AS(x + x * y, DegreeMismatchError);
    CHECK_THROWS_AS(GradedElement(a, parse_polynomial("x"), 2), DegreeMismatchError);
    CHECK_THROWS_AS(element(a, "x + x^2"), InhomogeneousError);
    CHECK_THROWS_AS(element(a, "z"), std::invalid_argument);
}

TEST_CASE("homomorphism checks") {
    auto source = two_pointed(24);
    GradedPresentation target({{"t", 1}}, {parse_polynomial("12*t")});
    auto t = generator(target, "t");
    CHECK(hom_check(source, target, {{"x", t}, {"y", zero_element(target, 1)}}));
    auto failing = hom_failures(source, target, {{"x", t}, {"y", t}});
    REQUIRE(failing.size() == 1);
    CHECK(failing[0] == parse_polynomial("x*y"));
    CHECK_THROWS_AS(hom_check(source, target, {{"x", t * t}, {"y", t}}), DegreeMismatchError);
    CHECK_THROWS_AS(hom_check(source, target, {{"x", t}}), std::invalid_argument);
    // Into a ring where 24 t^2 survives, y -> 0 is not a map.
    GradedPresentation free_t({{"t", 1}}, {});
    CHECK_FALSE(hom_check(source, free_t, {{"x", generator(free_t, "t")}, {"y", zero_element(free_t, 1)}}));
}

TEST_CASE("ideal comparison") {
    GradedPresentation a({{"t", 1}}, {parse_polynomial("12*t")});
    GradedPresentation b({{"t", 1}}, {parse_polynomial("12*t"), parse_polynomial("36*t^2")});
    GradedPresentation c({{"t", 1}}, {parse_polynomial("24*t")});
    CHECK(same_ideal(a, b));
    CHECK_FALSE(same_ideal(a, c));
    CHECK(pieces_equal(a, b, 6));
    CHECK_FALSE(pieces_equal(a, c, 2));
}

TEST_CASE("JSON round trip") {
    auto a = two_pointed(24);
    auto j = to_json(a);
    CHECK(j["generators"][0]["name"] == "x");
    CHECK(j["relations"].size() == 2);
    auto b = presentation_from_json(j);
    CHECK(a == b);
    CHECK(pieces_equal(a, b, 5));
    GradedPresentation w({{"a2", 2}, {"a3", 3}}, {parse_polynomial("6*a2^3 - 6*a3^2")});
    CHECK(presentation_from_json(nlohmann::json::parse(to_json(w).dump())) == w);
}

TEST_CASE("graded pieces are consistent across threads") {
    auto a = two_pointed(24);
    std::vector<std::future<std::vector<AbelianGroupShape>>> jobs;
    for (int i = 0; i < 8; ++i) jobs.push_back(std::async(std::launch::async, [a] { return pieces(a, 10); }));
    auto reference = pieces(two_pointed(24), 10);
    for (auto& j : jobs) CHECK(j.get() == reference);
}
