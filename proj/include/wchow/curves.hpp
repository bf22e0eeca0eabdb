#pragma once

#include "wchow/polynomial.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wchow {

/// Coefficients of the two-pointed cubic
///   y^2 z + a3 y z^2 = x^3 + a2 x^2 z + a4 x z^2
/// with marked points [0,1,0] and [0,0,1]; a point of P(2,3,4).
struct MarkedCurveCoeffs {
    Rational a2, a3, a4;
    friend bool operator==(const MarkedCurveCoeffs&, const MarkedCurveCoeffs&) = default;
};

/// Coordinates (alpha2, alpha3, alpha4) on A^3 with weights (2,3,4).
struct IntermediateCoeffs {
    Rational alpha2, alpha3, alpha4;
    friend bool operator==(const IntermediateCoeffs&, const IntermediateCoeffs&) = default;
};

/// Y^2 Z = X^3 + beta4 X Z^2 + beta6 Z^3; a point of P(4,6).
struct ShortWeierstrass {
    Rational beta4, beta6;
    friend bool operator==(const ShortWeierstrass&, const ShortWeierstrass&) = default;
};

class SingularCurveError : public std::domain_error {
public:
    explicit SingularCurveError(const Rational& discriminant);
    const Rational& discriminant() const { return discriminant_; }

private:
    Rational discriminant_;
};

struct ShortFormResult {
    IntermediateCoeffs intermediate;
    ShortWeierstrass short_form;
};

/// alpha2 = a2/3, alpha3 = a3/2, alpha4 = a4 - a2^2/3, then F_map. The
/// coefficients must lie in Z[1/6] (BaseRingError otherwise). The result is
/// checked by substituting x = X - (a2/3) Z, y = Y - (a3/2) Z into the cubic.
ShortFormResult to_short_form(const MarkedCurveCoeffs& c);

/// (alpha2, alpha3, alpha4) -> (alpha4, alpha3^2 - alpha2^3 - alpha2*alpha4).
/// Equivariant for weights (2,3,4) -> (4,6).
ShortWeierstrass F_map(const IntermediateCoeffs& a);

/// 4 alpha4^3 + 27 (alpha3^2 - alpha2^3 - alpha2 alpha4)^2.
Rational discriminant(const IntermediateCoeffs& a);
Rational discriminant(const ShortWeierstrass& s);

/// j = 1728 * 4 beta4^3 / (4 beta4^3 + 27 beta6^2). Throws
/// SingularCurveError when the discriminant vanishes.
Rational j_invariant(const ShortWeierstrass& s);

/// A rational lambda != 0 with a2 = lambda^2 a2', a3 = lambda^3 a3',
/// a4 = lambda^4 a4'. Only rational scalings are searched: nullopt does
/// not exclude an isomorphism over an extension field. When only even
/// powers constrain lambda the positive root is returned.
std::optional<Rational> iso_test(const MarkedCurveCoeffs& c, const MarkedCurveCoeffs& c_prime);

/// The affine fiber y^2 - x^3 - beta4 x - beta6 over (beta4, beta6).
Polynomial fiber_curve(const ShortWeierstrass& s);

struct FixedPoint {
    Rational x;
    unsigned multiplicity = 1;
    /// [alpha2, alpha3, alpha4] = [x, 0, beta4] in P(2,3,4).
    std::array<Rational, 3> coords;
};

/// Rational points with y = 0 on the fiber, i.e. the fixed points of
/// y -> -y: rational roots of x^3 + beta4 x + beta6, largest first.
std::vector<FixedPoint> mu2_fixed_points(const ShortWeierstrass& s);

/// The symbolic residual of the Weierstrass completion: the marked cubic
/// after the substitution, minus Y^2 Z - X^3 - beta4 X Z^2 - beta6 Z^3 with beta
/// expressed through a2, a3, a4. It is identically zero.
Polynomial weierstrass_residual();

/// Generic discriminant polynomial in a2, a3, a4 (read as the coordinates
/// alpha2, alpha3, alpha4 of P(2,3,4)).
Polynomial discriminant_polynomial();

std::string to_string(const IntermediateCoeffs& a);
std::string to_string(const ShortWeierstrass& s);

}  // namespace wchow
