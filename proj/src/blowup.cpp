#include "wchow/blowup.hpp"

#include <algorithm>

namespace wchow {

namespace {

Polynomial var(const std::string& name) { return Polynomial::variable(name); }

Polynomial monomial(const char* v, std::int64_t e) {
    return Polynomial(Monomial::variable(v, static_cast<std::uint32_t>(e)));
}

GradedElement scaled_t(const GradedPresentation& ring, long coefficient, std::int64_t exponent) {
    return GradedElement(ring, Polynomial(coefficient) * monomial("t", exponent), exponent);
}

const WeightedProjectiveStack& p46() {
    static const WeightedProjectiveStack p({4, 6});
    return p;
}

const WeightedProjectiveStack& p234() {
    static const WeightedProjectiveStack p({2, 3, 4});
    return p;
}

}  // namespace

BlowupData::BlowupData(std::int64_t w1_, std::int64_t w2_) : w1(w1_), w2(w2_) {
    if (w1 < 1 || w2 < 1) throw std::invalid_argument("blow-up weights must be positive");
}

WeightedGrading BlowupData::grading() const { return WeightedGrading{{"x", w1}, {"y", w2}, {"u", -1}}; }

bool invariant_ring_check(std::int64_t w1, std::int64_t w2, std::int64_t degree_bound) {
    BlowupData b(w1, w2);
    if (degree_bound < 1) throw std::invalid_argument("invariant_ring_check: degree bound must be at least 1");
    auto g = b.grading();
    Polynomial gx = monomial("u", w1) * var("x");
    Polynomial gy = monomial("u", w2) * var("y");
    for (std::int64_t i = 0; i <= degree_bound; ++i) {
        for (std::int64_t j = 0; i + j <= degree_bound; ++j) {
            for (std::int64_t k = 0; i + j + k <= degree_bound; ++k) {
                Polynomial m = monomial("x", i) * monomial("y", j) * monomial("u", k);
                if (m.weighted_degree(g) != 0) continue;
                auto ui = static_cast<std::uint32_t>(i), uj = static_cast<std::uint32_t>(j);
                if (!(gx.pow(ui) * gy.pow(uj) == m)) return false;
            }
        }
    }
    return true;
}

ChartData chart(const BlowupData& b, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("chart index must be 1 or 2");
    ChartData c;
    c.which = which;
    Polynomial a = var("a"), bb = var("b");
    if (which == 1) {
        c.group_order = b.w1;
        c.action_weights = {-b.w1, 1};
        c.alpha = {Polynomial(1), a, bb};
        c.blowdown = {monomial("b", b.w1), a * monomial("b", b.w2)};
    } else {
        c.group_order = b.w2;
        c.action_weights = {-b.w2, 1};
        c.alpha = {a, Polynomial(1), bb};
        c.blowdown = {a * monomial("b", b.w1), monomial("b", b.w2)};
    }
    c.beta = "xi -> xi^(-i)";
    c.ambiguous = true;
    std::int64_t other = which == 1 ? b.w2 : b.w1;
    c.note = "exponent i unspecified; weight " + std::to_string(-c.group_order) + " is trivial mod " +
             std::to_string(c.group_order) + " (stabilizer of the chart point acts on the other coordinates by (" +
             std::to_string(other) + ",-1))";
    return c;
}

GradedPresentation cusp_complement_chow() {
    static const GradedPresentation u = chow_of_complement(p234(), {cusp_class()});
    return u;
}

GradedElement cusp_class() { return line_image_class(p234(), {1, 2}, {3}); }

SelfIntersection exceptional_selfintersection(const BlowupData& b) {
    auto e_ring = chow_ring(b.exceptional());
    SelfIntersection s{scaled_t(e_ring, -1, 1), {}};
    if (b.w1 != 4 || b.w2 != 6) {
        throw std::invalid_argument("the open part is only known for the weights (4,6)");
    }
    auto u = cusp_complement_chow();
    s.degree_two.push_back({Monomial::variable("x", 2), scaled_t(e_ring, 1, 1), scaled_t(u, 1, 2)});
    s.degree_two.push_back({Monomial::variable("x") * Monomial::variable("y"), zero_element(e_ring, 1),
                            zero_element(u, 2)});
    s.degree_two.push_back({Monomial::variable("y", 2), s.e_squared_on_e, zero_element(u, 2)});
    return s;
}

GradedPresentation m12bar_presentation(const Integer& coefficient) {
    Polynomial x = var("x"), y = var("y");
    Polynomial c{Rational(coefficient)};
    return GradedPresentation({{"x", 1}, {"y", 1}}, {x * y, c * x.pow(2) + c * y.pow(2)});
}

std::vector<AssemblyRow> assembly_table(const GradedPresentation& pres, std::int64_t bound) {
    auto e = chow_ring(p46());
    auto u = cusp_complement_chow();
    std::vector<AssemblyRow> rows;
    for (std::int64_t n = 0; n <= bound; ++n) {
        AssemblyRow r;
        r.degree = n;
        r.ring_piece = graded_piece(pres, n);
        r.exceptional_piece = graded_piece(e, n - 1);
        r.open_piece = graded_piece(u, n);
        r.expected = direct_sum(r.exceptional_piece, r.open_piece);
        r.matches = r.ring_piece == r.expected;
        rows.push_back(std::move(r));
    }
    return rows;
}

GradedPresentation m12bar_chow(std::int64_t bound) {
    auto pres = m12bar_presentation();
    for (const auto& r : assembly_table(pres, bound)) {
        if (!r.matches) {
            throw AssemblyMismatchError("degree " + std::to_string(r.degree) + ": ring piece " +
                                        r.ring_piece.to_string() + " but the split sequence gives " +
                                        r.expected.to_string());
        }
    }
    return pres;
}

PhiKernelCheck phi_degree_two_check(const GradedPresentation& pres) {
    auto s = exceptional_selfintersection(BlowupData(4, 6));
    auto e = chow_ring(p46());
    auto u = cusp_complement_chow();
    auto basis = pres.monomial_basis(2);
    const std::size_t be = e.monomial_basis(1).size();
    const std::size_t bu = u.monomial_basis(2).size();
    const std::size_t width = be + bu;

    // Rows: images of the basis monomials, then the relations of the target.
    std::vector<IntVector> rows;
    for (const auto& m : basis) {
        auto it = std::find_if(s.degree_two.begin(), s.degree_two.end(),
                               [&](const PhiImage& img) { return img.source == m; });
        if (it == s.degree_two.end()) throw std::logic_error("no image for " + m.to_string());
        IntVector row = e.coordinates(it->exceptional_part.value(), 1);
        auto tail = u.coordinates(it->open_part.value(), 2);
        row.insert(row.end(), tail.begin(), tail.end());
        rows.push_back(std::move(row));
    }
    for (const auto& r : e.relation_lattice(1)) {
        IntVector row = r;
        row.resize(width);
        rows.push_back(std::move(row));
    }
    for (const auto& r : u.relation_lattice(2)) {
        IntVector row(be);
        row.insert(row.end(), r.begin(), r.end());
        rows.push_back(std::move(row));
    }

    PhiKernelCheck check;
    for (const auto& k : left_kernel(IntMatrix::from_rows(rows, width))) {
        IntVector head(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(basis.size()));
        bool zero = std::all_of(head.begin(), head.end(), [](const Integer& z) { return z == 0; });
        if (!zero) check.kernel.push_back(std::move(head));
    }
    check.relations = pres.relation_lattice(2);
    auto as_matrix = [&](const std::vector<IntVector>& v) { return IntMatrix::from_rows(v, basis.size()); };
    check.matches = same_row_lattice(as_matrix(check.kernel), as_matrix(check.relations));
    return check;
}

std::vector<GradedElement> open_part_removed_classes() {
    auto u = cusp_complement_chow();
    return {scaled_t(u, 12, 1), scaled_t(u, 12, 2), scaled_t(u, 12, 2)};
}

GradedPresentation m12_open_chow(std::int64_t bound) {
    GradedPresentation target({{"t", 1}}, {Polynomial(12) * var("t")});
    auto computed = quotient(cusp_complement_chow(), open_part_removed_classes());
    for (std::int64_t n = 0; n <= bound; ++n) {
        auto got = graded_piece(computed, n);
        auto want = graded_piece(target, n);
        if (!(got == want)) {
            throw AssemblyMismatchError("degree " + std::to_string(n) + ": quotient piece " + got.to_string() +
                                        " differs from " + want.to_string());
        }
    }
    if (!same_ideal(computed, target)) throw AssemblyMismatchError("quotient ideal differs from (12t)");
    return target;
}

std::string CertifiedHom::to_string() const {
    std::string s = source.to_string() + " -> " + target.to_string() + ": ";
    bool first = true;
    for (const auto& [name, img] : images) {
        s += (first ? "" : ", ") + name + " -> " + (img.value().is_zero() ? std::string("0") : img.to_string());
        first = false;
    }
    return s;
}

CertifiedHom certify(const GradedPresentation& source, const GradedPresentation& target, GeneratorImages images) {
    auto failing = hom_failures(source, target, images);
    if (!failing.empty()) {
        std::string list;
        for (const auto& r : failing) list += (list.empty() ? "" : ", ") + r.to_string(source.grading(), true);
        throw HomCheckError("relations not sent to zero: " + list, std::move(failing));
    }
    return {source, target, std::move(images)};
}

CertifiedHom restriction_hom(std::int64_t bound) {
    auto source = m12bar_chow(bound);
    auto target = m12_open_chow(bound);
    GeneratorImages images{{"x", generator(target, "t")}, {"y", zero_element(target, 1)}};
    return certify(source, target, std::move(images));
}

}  // namespace wchow
