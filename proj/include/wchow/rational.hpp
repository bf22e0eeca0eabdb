#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wchow {

using Integer = mpz_class;
using Rational = mpq_class;

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Thrown when a coefficient leaves Z[1/6], the base ring of the Weierstrass
/// transforms.
class BaseRingError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Parses "p", "-p" or "p/q" into a canonical rational.
Rational parse_rational(std::string_view text);

std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

/// True iff the (canonical) denominator has no prime factors besides 2 and 3.
bool in_base_ring(const Rational& q);

inline void require_base_ring(const Rational& q, std::string_view what) {
    if (!in_base_ring(q)) {
        throw BaseRingError(std::string(what) + " = " + to_string(q) +
                            " has a denominator outside {2,3}");
    }
}

}  // namespace wchow
