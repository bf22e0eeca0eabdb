#include "wchow/curves.hpp"

#include <algorithm>
#include <set>

namespace wchow {

SingularCurveError::SingularCurveError(const Rational& discriminant)
    : std::domain_error("singular fiber: discriminant 4*beta4^3 + 27*beta6^2 = " + to_string(discriminant)),
      discriminant_(discriminant) {}

namespace {

Polynomial var(const char* name) { return Polynomial::variable(name); }

// y^2 z + a3 y z^2 - (x^3 + a2 x^2 z + a4 x z^2), with a2, a3, a4 given as
// polynomials (symbols or constants).
Polynomial marked_cubic(const Polynomial& a2, const Polynomial& a3, const Polynomial& a4) {
    Polynomial x = var("x"), y = var("y"), z = var("z");
    return y.pow(2) * z + a3 * y * z.pow(2) - (x.pow(3) + a2 * x.pow(2) * z + a4 * x * z.pow(2));
}

// Y^2 Z - X^3 - b4 X Z^2 - b6 Z^3
Polynomial short_cubic(const Polynomial& b4, const Polynomial& b6) {
    Polynomial X = var("X"), Y = var("Y"), Z = var("Z");
    return Y.pow(2) * Z - X.pow(3) - b4 * X * Z.pow(2) - b6 * Z.pow(3);
}

Polynomial completion_residual(const Polynomial& a2, const Polynomial& a3, const Polynomial& a4) {
    const Rational third(1, 3);
    const Rational half(1, 2);
    Polynomial alpha2 = a2 * Polynomial(third);
    Polynomial alpha3 = a3 * Polynomial(half);
    Polynomial alpha4 = a4 - a2.pow(2) * Polynomial(third);
    Polynomial beta6 = alpha3.pow(2) - alpha2.pow(3) - alpha2 * alpha4;
    std::map<std::string, Polynomial> change{
        {"x", var("X") - alpha2 * var("Z")},
        {"y", var("Y") - alpha3 * var("Z")},
        {"z", var("Z")},
    };
    return marked_cubic(a2, a3, a4).substitute(change, /*allow_partial=*/true) - short_cubic(alpha4, beta6);
}

// Exact k-th root of a rational, if it exists. For even k the positive root.
std::optional<Rational> rational_root(const Rational& q, unsigned long k) {
    if (q == 0) return Rational(0);
    bool negative = q < 0;
    if (negative && k % 2 == 0) return std::nullopt;
    Integer num = abs(q.get_num());
    Integer den = q.get_den();
    Integer rn, rd;
    if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k) == 0) return std::nullopt;
    Rational r(rn, rd);
    r.canonicalize();
    return negative ? Rational(-r) : r;
}

Rational power(const Rational& q, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= q;
    return r;
}

std::vector<Integer> positive_divisors(Integer n) {
    n = abs(n);
    std::vector<Integer> small, large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// coeffs[i] is the coefficient of x^i.
Rational eval_univariate(const std::vector<Rational>& coeffs, const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
}

// Divides by (x - r); r must be a root.
std::vector<Rational> deflate(const std::vector<Rational>& coeffs, const Rational& r) {
    std::vector<Rational> out(coeffs.size() - 1);
    Rational carry = 0;
    for (std::size_t i = coeffs.size() - 1; i >= 1; --i) {
        carry = coeffs[i] + carry * r;
        out[i - 1] = carry;
    }
    return out;
}

}  // namespace

ShortWeierstrass F_map(const IntermediateCoeffs& a) {
    return {a.alpha4, a.alpha3 * a.alpha3 - a.alpha2 * a.alpha2 * a.alpha2 - a.alpha2 * a.alpha4};
}

ShortFormResult to_short_form(const MarkedCurveCoeffs& c) {
    require_base_ring(c.a2, "a2");
    require_base_ring(c.a3, "a3");
    require_base_ring(c.a4, "a4");
    IntermediateCoeffs alpha{c.a2 / 3, c.a3 / 2, c.a4 - c.a2 * c.a2 / 3};
    ShortWeierstrass beta = F_map(alpha);
    Polynomial residual = marked_cubic(c.a2, c.a3, c.a4)
                              .substitute({{"x", var("X") - Polynomial(alpha.alpha2) * var("Z")},
                                           {"y", var("Y") - Polynomial(alpha.alpha3) * var("Z")},
                                           {"z", var("Z")}}) -
                          short_cubic(beta.beta4, beta.beta6);
    if (!residual.is_zero()) {
        throw std::logic_error("Weierstrass completion left residual " + residual.to_string());
    }
    return {alpha, beta};
}

Rational discriminant(const ShortWeierstrass& s) {
    return 4 * s.beta4 * s.beta4 * s.beta4 + 27 * s.beta6 * s.beta6;
}

Rational discriminant(const IntermediateCoeffs& a) {
    Rational correction = a.alpha3 * a.alpha3 - a.alpha2 * a.alpha2 * a.alpha2 - a.alpha2 * a.alpha4;
    return 4 * a.alpha4 * a.alpha4 * a.alpha4 + 27 * correction * correction;
}

Rational j_invariant(const ShortWeierstrass& s) {
    Rational disc = discriminant(s);
    if (disc == 0) throw SingularCurveError(disc);
    return 1728 * 4 * s.beta4 * s.beta4 * s.beta4 / disc;
}

std::optional<Rational> iso_test(const MarkedCurveCoeffs& c, const MarkedCurveCoeffs& c_prime) {
    const std::array<const Rational*, 3> lhs{&c.a2, &c.a3, &c.a4};
    const std::array<const Rational*, 3> rhs{&c_prime.a2, &c_prime.a3, &c_prime.a4};
    const std::array<unsigned, 3> weight{2, 3, 4};
    std::array<std::optional<Rational>, 3> ratio;
    for (std::size_t i = 0; i < 3; ++i) {
        if ((*lhs[i] == 0) != (*rhs[i] == 0)) return std::nullopt;
        if (*lhs[i] != 0) ratio[i] = *lhs[i] / *rhs[i];
    }

    std::optional<Rational> lambda;
    if (ratio[0] && ratio[1]) {
        lambda = *ratio[1] / *ratio[0];  // lambda^3 / lambda^2
    } else if (ratio[1] && ratio[2]) {
        lambda = *ratio[2] / *ratio[1];  // lambda^4 / lambda^3
    } else if (ratio[1]) {
        lambda = rational_root(*ratio[1], 3);
    } else if (ratio[0]) {
        lambda = rational_root(*ratio[0], 2);
    } else if (ratio[2]) {
        lambda = rational_root(*ratio[2], 4);
    } else {
        lambda = Rational(1);
    }
    if (!lambda || *lambda == 0) return std::nullopt;
    for (std::size_t i = 0; i < 3; ++i) {
        if (*lhs[i] != power(*lambda, weight[i]) * *rhs[i]) return std::nullopt;
    }
    return lambda;
}

Polynomial fiber_curve(const ShortWeierstrass& s) {
    Polynomial x = var("x"), y = var("y");
    return y.pow(2) - x.pow(3) - Polynomial(s.beta4) * x - Polynomial(s.beta6);
}

std::vector<FixedPoint> mu2_fixed_points(const ShortWeierstrass& s) {
    std::vector<Rational> work{s.beta6, s.beta4, 0, 1};
    std::vector<FixedPoint> out;
    auto take_root = [&](const Rational& r) {
        unsigned mult = 0;
        while (work.size() > 1 && eval_univariate(work, r) == 0) {
            work = deflate(work, r);
            ++mult;
        }
        if (mult > 0) out.push_back({r, mult, {r, Rational(0), s.beta4}});
    };

    take_root(0);
    if (work.size() > 1) {
        // Primitive integer model of what is left; candidates p/q with
        // p | constant term, q | leading coefficient.
        Integer lcm = 1;
        for (const auto& c : work) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
        std::vector<Integer> ints;
        for (const auto& c : work) ints.push_back(Rational(c * lcm).get_num());
        std::set<Rational> candidates;
        for (const auto& p : positive_divisors(ints.front())) {
            for (const auto& q : positive_divisors(ints.back())) {
                Rational r(p, q);
                r.canonicalize();
                candidates.insert(r);
                candidates.insert(-r);
            }
        }
        for (const auto& r : candidates) {
            if (work.size() == 1) break;
            take_root(r);
        }
    }
    std::sort(out.begin(), out.end(), [](const FixedPoint& a, const FixedPoint& b) { return a.x > b.x; });
    return out;
}

Polynomial weierstrass_residual() { return completion_residual(var("a2"), var("a3"), var("a4")); }

Polynomial discriminant_polynomial() {
    Polynomial a2 = var("a2"), a3 = var("a3"), a4 = var("a4");
    return Polynomial(4) * a4.pow(3) + Polynomial(27) * (a3.pow(2) - a2.pow(3) - a2 * a4).pow(2);
}

std::string to_string(const IntermediateCoeffs& a) {
    return "(" + to_string(a.alpha2) + "," + to_string(a.alpha3) + "," + to_string(a.alpha4) + ")";
}

std::string to_string(const ShortWeierstrass& s) { return "(" + to_string(s.beta4) + "," + to_string(s.beta6) + ")"; }

}  // namespace wchow
