#pragma once

#include "wchow/int_linalg.hpp"
#include "wchow/polynomial.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace wchow {

struct Generator {
    std::string name;
    std::int64_t degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

class DegreeMismatchError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A commutative graded Z-algebra Z[g1..gk]/(r1..rm) with generators of
/// positive degree and homogeneous integer relations.
///
/// Every graded piece is a finite integer-linear problem: the degree-n part
/// of the polynomial ring has a finite monomial basis, and the degree-n part
/// of the ideal is spanned by m*r over relations r and monomials m of
/// complementary degree. No Groebner basis is needed.
///
/// The presentation is immutable; copies share storage and a per-degree
/// cache of graded pieces, so copying is cheap and concurrent reads are safe.
class GradedPresentation {
public:
    GradedPresentation(std::vector<Generator> generators, std::vector<Polynomial> relations);

    const std::vector<Generator>& generators() const { return data_->generators; }
    const std::vector<Polynomial>& relations() const { return data_->relations; }
    const WeightedGrading& grading() const { return data_->grading; }
    std::int64_t generator_degree(const std::string& name) const;
    bool has_generator(const std::string& name) const { return data_->grading.has(name); }

    /// Monomials of degree n in graded-lex order.
    std::vector<Monomial> monomial_basis(std::int64_t n) const;
    /// Coordinates of a degree-n polynomial over monomial_basis(n).
    IntVector coordinates(const Polynomial& p, std::int64_t n) const;
    /// Rows spanning the degree-n part of the relation ideal.
    std::vector<IntVector> relation_lattice(std::int64_t n) const;

    /// "Z[x,y]/(xy,24x^2+24y^2)"; '*' is kept when a generator name has
    /// more than one character.
    std::string to_string() const;

    /// Same generators (names and degrees) in the same order.
    bool same_generators(const GradedPresentation& other) const;

    friend bool operator==(const GradedPresentation& a, const GradedPresentation& b);

    struct PieceCache;

private:
    friend AbelianGroupShape graded_piece(const GradedPresentation& a, std::int64_t n);

    struct Data {
        std::vector<Generator> generators;
        std::vector<Polynomial> relations;
        WeightedGrading grading;
        std::shared_ptr<PieceCache> cache;
    };
    std::shared_ptr<const Data> data_;
};

/// A homogeneous element of a presentation.
class GradedElement {
public:
    GradedElement(GradedPresentation ambient, Polynomial value, std::int64_t degree);
    /// Degree inferred from the value; the value must be nonzero.
    GradedElement(GradedPresentation ambient, Polynomial value);

    const GradedPresentation& ambient() const { return ambient_; }
    const Polynomial& value() const { return value_; }
    std::int64_t degree() const { return degree_; }

    std::string to_string() const;

    friend GradedElement operator*(const GradedElement& a, const GradedElement& b);
    friend GradedElement operator+(const GradedElement& a, const GradedElement& b);

private:
    GradedPresentation ambient_;
    Polynomial value_;
    std::int64_t degree_;
};

/// Parses `text` as an element of `ambient`.
GradedElement element(const GradedPresentation& ambient, const std::string& text);
GradedElement generator(const GradedPresentation& ambient, const std::string& name);
GradedElement zero_element(const GradedPresentation& ambient, std::int64_t degree);

/// The degree-n piece as an abelian group.
AbelianGroupShape graded_piece(const GradedPresentation& a, std::int64_t n);

/// True iff e lies in the degree-deg(e) part of the relation ideal.
bool is_zero(const GradedElement& e);

/// Same generators, relations extended by `extra`.
GradedPresentation quotient(const GradedPresentation& a, const std::vector<GradedElement>& extra);

using GeneratorImages = std::map<std::string, GradedElement>;

/// Relations of `source` whose image under the generator assignment is not
/// zero in `target`. Throws DegreeMismatchError if an image has the wrong
/// degree or lives in another ring.
std::vector<Polynomial> hom_failures(const GradedPresentation& source, const GradedPresentation& target,
                                     const GeneratorImages& images);

/// True iff the generator assignment extends to a graded ring map.
bool hom_check(const GradedPresentation& source, const GradedPresentation& target, const GeneratorImages& images);

/// Degreewise group comparison for 0 <= n <= up_to. Equal pieces do not
/// imply isomorphic rings; pair this with hom_check for ring-level claims.
bool pieces_equal(const GradedPresentation& a, const GradedPresentation& b, std::int64_t up_to);

/// Both presentations have the same generators and each relation of one
/// vanishes in the other, i.e. the two ideals coincide.
bool same_ideal(const GradedPresentation& a, const GradedPresentation& b);

/// Graded pieces 0..up_to.
std::vector<AbelianGroupShape> pieces(const GradedPresentation& a, std::int64_t up_to);

/// {"generators": [{"name", "degree"}], "relations": [string]}
nlohmann::json to_json(const GradedPresentation& a);
GradedPresentation presentation_from_json(const nlohmann::json& j);

}  // namespace wchow
