#include "wchow/wps.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>

namespace wchow {

namespace {

const char* const kClassVar = "t";

GradedElement scaled_power(const GradedPresentation& ring, const Integer& coefficient, std::size_t exponent) {
    Polynomial value(Monomial::variable(kClassVar, static_cast<std::uint32_t>(exponent)), Rational(coefficient));
    return GradedElement(ring, value, static_cast<std::int64_t>(exponent));
}

}  // namespace

WeightedProjectiveStack::WeightedProjectiveStack(std::vector<std::int64_t> weights) : weights_(std::move(weights)) {
    if (weights_.empty()) throw std::invalid_argument("a weighted projective stack needs at least one weight");
    for (auto w : weights_) {
        if (w < 1) throw std::invalid_argument("weights must be positive, got " + std::to_string(w));
    }
}

Integer WeightedProjectiveStack::weight_product() const {
    Integer prod = 1;
    for (auto w : weights_) prod *= w;
    return prod;
}

std::string WeightedProjectiveStack::to_string() const {
    std::string s = "P(";
    for (std::size_t i = 0; i < weights_.size(); ++i) s += (i ? "," : "") + std::to_string(weights_[i]);
    return s + ")";
}

GradedPresentation chow_ring(const WeightedProjectiveStack& p) {
    Polynomial top(Monomial::variable(kClassVar, static_cast<std::uint32_t>(p.dimension_count())),
                   Rational(p.weight_product()));
    return GradedPresentation({{kClassVar, 1}}, {top});
}

GradedElement point_class(const WeightedProjectiveStack& p, std::size_t j) {
    const auto& w = p.weights();
    if (j < 1 || j > w.size()) {
        throw std::out_of_range("coordinate index " + std::to_string(j) + " outside 1.." + std::to_string(w.size()));
    }
    Integer coefficient = 1;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i + 1 != j) coefficient *= w[i];
    }
    return scaled_power(chow_ring(p), coefficient, w.size() - 1);
}

GradedElement line_image_class(const WeightedProjectiveStack& p, const std::vector<std::size_t>& used,
                               const std::vector<std::size_t>& remaining) {
    const auto& w = p.weights();
    if (used.empty()) throw std::invalid_argument("line_image_class: the power map needs at least one coordinate");
    std::set<std::size_t> seen;
    for (auto idx : used) seen.insert(idx);
    for (auto idx : remaining) seen.insert(idx);
    if (seen.size() != used.size() + remaining.size() || seen.size() != w.size() || *seen.begin() != 1 ||
        *seen.rbegin() != w.size()) {
        throw std::invalid_argument("line_image_class: used and remaining must partition the coordinates 1.." +
                                    std::to_string(w.size()));
    }
    Integer power_map = 1;
    for (auto idx : used) power_map *= w[idx - 1];
    Integer top_chern = 1;
    for (auto idx : remaining) top_chern *= w[idx - 1];
    return scaled_power(chow_ring(p), power_map * top_chern, remaining.size() + used.size() - 1);
}

GradedPresentation chow_of_complement(const WeightedProjectiveStack& p, const std::vector<GradedElement>& removed) {
    return quotient(chow_ring(p), removed);
}

PicComplementResult pic_complement(const HypersurfaceComplementInput& h) {
    if (h.f.is_zero()) throw std::invalid_argument("pic_complement: the defining polynomial must be nonzero");
    for (auto w : h.weights) {
        if (w < 1) throw std::invalid_argument("pic_complement: ambient weights must be positive");
    }
    auto grading = WeightedGrading::from_lists(h.variables, h.weights);
    PicComplementResult result;
    result.character_degree = h.f.weighted_degree(grading);
    result.group = AbelianGroupShape::cyclic(Integer(static_cast<long>(std::llabs(result.character_degree))));
    result.assumption = "Pic([A^n/Gm]) = Z and V(f) reduced and irreducible (not verified)";
    return result;
}

}  // namespace wchow
