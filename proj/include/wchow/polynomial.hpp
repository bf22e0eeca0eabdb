#pragma once

#include "wchow/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wchow {

/// Assigns an integer weight to each variable name. Weights are normally
/// positive; a negative weight is allowed for the auxiliary coordinate of a
/// weighted blow-up.
class WeightedGrading {
public:
    WeightedGrading() = default;
    WeightedGrading(std::initializer_list<std::pair<const std::string, std::int64_t>> weights);
    explicit WeightedGrading(std::map<std::string, std::int64_t> weights);

    /// Grading that assigns weights[i] to names[i].
    static WeightedGrading from_lists(const std::vector<std::string>& names,
                                      const std::vector<std::int64_t>& weights);

    bool has(const std::string& var) const { return weights_.count(var) != 0; }
    std::int64_t weight(const std::string& var) const;
    const std::map<std::string, std::int64_t>& weights() const { return weights_; }

private:
    std::map<std::string, std::int64_t> weights_;
};

/// A power product of named variables. Exponents are strictly positive and
/// the factors are kept sorted by variable name.
class Monomial {
public:
    using Factor = std::pair<std::string, std::uint32_t>;

    Monomial() = default;
    explicit Monomial(std::vector<Factor> factors);
    static Monomial variable(std::string name, std::uint32_t exponent = 1);

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    std::uint32_t exponent(std::string_view var) const;
    std::uint64_t total_degree() const;
    std::int64_t weighted_degree(const WeightedGrading& g) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;

    std::string to_string(bool compact = false) const;

private:
    std::vector<Factor> factors_;
};

/// Lexicographic comparison with variables ordered by name, larger exponent
/// first: returns negative if a precedes b.
int lex_compare(const Monomial& a, const Monomial& b);

/// Storage order: total degree descending, then lex.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

class InhomogeneousError : public std::domain_error {
public:
    explicit InhomogeneousError(std::set<std::int64_t> degrees);
    const std::set<std::int64_t>& degrees() const { return degrees_; }

private:
    std::set<std::int64_t> degrees_;
};

/// Sparse multivariate polynomial with exact rational coefficients. Zero
/// coefficients are never stored, so structural equality is ring equality.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT: implicit by intent
    Polynomial(long constant) : Polynomial(Rational(constant)) {}  // NOLINT
    Polynomial(int constant) : Polynomial(Rational(constant)) {}   // NOLINT
    Polynomial(Monomial m, const Rational& coefficient = 1);

    static Polynomial variable(const std::string& name) { return Polynomial(Monomial::variable(name)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t size() const { return terms_.size(); }
    Rational coefficient(const Monomial& m) const;
    std::set<std::string> variables() const;
    bool has_integer_coefficients() const;

    /// Constant term value if the polynomial is constant.
    std::optional<Rational> constant_value() const;

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial pow(std::uint32_t exponent) const;

    /// Replaces every variable by its image. Variables missing from the
    /// assignment are an error unless allow_partial is set, in which case
    /// they are kept as they are.
    Polynomial substitute(const std::map<std::string, Polynomial>& assignment,
                          bool allow_partial = false) const;

    /// Evaluates a polynomial whose variables are all assigned.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    /// The common weighted degree of every term; throws InhomogeneousError
    /// listing the distinct degrees otherwise. Requires a nonzero polynomial.
    std::int64_t weighted_degree(const WeightedGrading& g) const;
    bool is_homogeneous(const WeightedGrading& g) const;

    /// Text form: terms by weighted degree (or total degree when no grading
    /// is given) descending, lex tie-break. `compact` drops '*' and spaces,
    /// which is only unambiguous for single-letter variable names.
    std::string to_string(const std::optional<WeightedGrading>& g = std::nullopt, bool compact = false) const;

private:
    void add_term(const Monomial& m, const Rational& c);

    Terms terms_;
};

/// Accepts integers, rational literals p/q, identifiers, + - * ^ and
/// parentheses. Division is only allowed by a nonzero constant.
Polynomial parse_polynomial(std::string_view text);

/// Weighted degree of a nonzero polynomial (free-function form).
inline std::int64_t weighted_degree(const Polynomial& p, const WeightedGrading& g) { return p.weighted_degree(g); }

}  // namespace wchow
