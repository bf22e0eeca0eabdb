#pragma once

#include "wchow/graded_ring.hpp"
#include "wchow/wps.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wchow {

/// Weighted blow-up of A^2 at the origin with weights (w1, w2), presented
/// as [A^3 - V(x,y) / Gm] with Gm acting on (x, y, u) by (w1, w2, -1).
struct BlowupData {
    std::int64_t w1 = 4;
    std::int64_t w2 = 6;

    BlowupData() = default;
    BlowupData(std::int64_t w1, std::int64_t w2);

    /// {x: w1, y: w2, u: -1}
    WeightedGrading grading() const;
    /// P(w1,w2), the exceptional divisor.
    WeightedProjectiveStack exceptional() const { return WeightedProjectiveStack({w1, w2}); }
};

class AssemblyMismatchError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Every Gm-invariant monomial x^i y^j u^k with i + j + k <= D, i.e. with
/// k = i*w1 + j*w2, equals (u^w1 x)^i (u^w2 y)^j.
bool invariant_ring_check(std::int64_t w1, std::int64_t w2, std::int64_t degree_bound);

/// Chart of the blow-up where the chosen coordinate is invertible:
/// [A^2 / mu_w]. The homomorphism mu_w -> Gm and the action weights are
/// stored as given in the source construction; the exponent i in
/// "xi -> xi^(-i)" is not determined there, which `ambiguous` records.
struct ChartData {
    int which = 1;
    std::int64_t group_order = 1;
    std::pair<std::int64_t, std::int64_t> action_weights;
    /// Images of (x, y, u) as polynomials in the chart coordinates a, b.
    std::vector<Polynomial> alpha;
    /// The blow-down (x, y) in terms of a, b.
    std::vector<Polynomial> blowdown;
    std::string beta;
    bool ambiguous = true;
    std::string note;

    /// "mu_4"
    std::string group() const { return "mu_" + std::to_string(group_order); }
};

ChartData chart(const BlowupData& b, int which);

/// Image of a class of the blow-up under (pi_*, j^*), a pair in
/// A^{n-1}(P(w1,w2)) x A^n(U).
struct PhiImage {
    Monomial source;
    GradedElement exceptional_part;
    GradedElement open_part;
};

struct SelfIntersection {
    /// E^2 = iota_*(c1 O_E(-1)) = iota_*(-t_E): the element -t_E.
    GradedElement e_squared_on_e;
    /// Images of x^2, xy, y^2 in degree 2.
    std::vector<PhiImage> degree_two;
};

/// The class-level facts about the exceptional divisor used when assembling
/// the ring of the blow-up. Only the weights (4,6) carry the open part
/// A(U) = Z[t]/(24t^2); other weights throw std::invalid_argument.
SelfIntersection exceptional_selfintersection(const BlowupData& b);

/// Z[x,y]/(xy, c x^2 + c y^2); c = 24 is the real ring, other values are
/// used to exercise the assembly check.
GradedPresentation m12bar_presentation(const Integer& coefficient = 24);

/// A(U) = A(P(2,3,4) - cusp locus) = Z[t]/(24t^3, 24t^2).
GradedPresentation cusp_complement_chow();
/// The cusp class 24t^2 in A(P(2,3,4)).
GradedElement cusp_class();

struct AssemblyRow {
    std::int64_t degree = 0;
    AbelianGroupShape ring_piece;
    AbelianGroupShape exceptional_piece;
    AbelianGroupShape open_piece;
    AbelianGroupShape expected;
    bool matches = false;
};

/// For n = 0..bound, compares the degree-n piece of `pres` with
/// A^{n-1}(P(4,6)) + A^n(U).
std::vector<AssemblyRow> assembly_table(const GradedPresentation& pres, std::int64_t bound);

/// m12bar_presentation() after its assembly check up to `bound`. Throws
/// AssemblyMismatchError on any disagreement.
GradedPresentation m12bar_chow(std::int64_t bound = 8);

/// The degree-2 part of Phi = (pi_*, j^*) on Z{x^2, xy, y^2}: the kernel of
/// Z^3 -> Z + Z/24 must equal the relation lattice in degree 2.
struct PhiKernelCheck {
    std::vector<IntVector> kernel;
    std::vector<IntVector> relations;
    bool matches = false;
};
PhiKernelCheck phi_degree_two_check(const GradedPresentation& pres);

/// The classes removed from U to reach the open part: the curve class 12t
/// and the two stacky point classes 12t^2.
std::vector<GradedElement> open_part_removed_classes();

/// Quotient of A(U) by the removed classes, checked against Z[t]/(12t) up
/// to `bound` and as ideals. Returns Z[t]/(12t).
GradedPresentation m12_open_chow(std::int64_t bound = 8);

/// A homomorphism whose relations have been checked to map to zero.
struct CertifiedHom {
    GradedPresentation source;
    GradedPresentation target;
    GeneratorImages images;

    std::string to_string() const;
};

class HomCheckError : public std::logic_error {
public:
    HomCheckError(const std::string& what, std::vector<Polynomial> failing)
        : std::logic_error(what), failing_(std::move(failing)) {}
    const std::vector<Polynomial>& failing() const { return failing_; }

private:
    std::vector<Polynomial> failing_;
};

/// Checks `images` and returns it as a certified map; HomCheckError lists
/// the relations that do not map to zero.
CertifiedHom certify(const GradedPresentation& source, const GradedPresentation& target, GeneratorImages images);

/// x -> t, y -> 0 from A(M12bar) to A(M12).
CertifiedHom restriction_hom(std::int64_t bound = 8);

}  // namespace wchow
