#pragma once

#include "wchow/graded_ring.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace wchow {

/// The weighted projective stack [(A^n - 0)/Gm] with positive weights
/// a1..an acting on the coordinates.
class WeightedProjectiveStack {
public:
    explicit WeightedProjectiveStack(std::vector<std::int64_t> weights);

    const std::vector<std::int64_t>& weights() const { return weights_; }
    std::size_t dimension_count() const { return weights_.size(); }
    Integer weight_product() const;

    /// "P(2,3,4)"
    std::string to_string() const;

private:
    std::vector<std::int64_t> weights_;
};

/// Z[t]/(a1*...*an * t^n) with t = c1(O(1)) in degree 1.
GradedPresentation chow_ring(const WeightedProjectiveStack& p);

/// Class of the coordinate point [0,..,1,..,0] (1 in position j, 1-based),
/// whose stabilizer is mu_{a_j}: the product of c1(O(a_i)) over i != j,
/// i.e. (prod_{i != j} a_i) t^{n-1}.
GradedElement point_class(const WeightedProjectiveStack& p, std::size_t j);

/// Pushforward of [A^1/Gm] (weight 1) along s -> (s^{a_i}) on the `used`
/// coordinates and 0 on the `remaining` ones: the power map contributes
/// prod_{used} a_i * t^{|used|-1}, and the vanishing coordinates contribute
/// their top Chern class prod_{remaining} a_k t. Indices are 1-based and
/// must partition 1..n; `used` is nonempty.
///
/// On P(2,3,4) with used = {1,2} this is the class 24t^2 of the cusp locus
/// {[s^2, s^3, 0]}.
GradedElement line_image_class(const WeightedProjectiveStack& p, const std::vector<std::size_t>& used,
                               const std::vector<std::size_t>& remaining);

/// Chow ring of the complement of the given classes: the localization
/// sequence A(C) -> A(X) -> A(X - C) -> 0 makes it a quotient.
GradedPresentation chow_of_complement(const WeightedProjectiveStack& p, const std::vector<GradedElement>& removed);

/// A hypersurface V(f) in [A^n/Gm]; variables[i] carries weights[i].
struct HypersurfaceComplementInput {
    std::vector<std::int64_t> weights;
    std::vector<std::string> variables;
    Polynomial f;
};

struct PicComplementResult {
    AbelianGroupShape group;
    /// d with f(lambda x) = lambda^d f(x).
    std::int64_t character_degree = 0;
    /// The formula Pic = Z/d assumes Pic([A^n/Gm]) = Z and V(f) reduced
    /// and irreducible. The latter is not checked.
    bool assumes_irreducible = true;
    std::string assumption;
};

/// Pic([A^n - V(f) / Gm]) = Z/d where d is the weighted degree of f.
/// Throws InhomogeneousError when f is not homogeneous.
PicComplementResult pic_complement(const HypersurfaceComplementInput& h);

}  // namespace wchow
