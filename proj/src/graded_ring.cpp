#include "wchow/graded_ring.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <shared_mutex>

namespace wchow {

struct GradedPresentation::PieceCache {
    std::shared_mutex mutex;
    std::map<std::int64_t, AbelianGroupShape> pieces;
};

namespace {

void check_integral(const Polynomial& p, const std::string& what) {
    if (!p.has_integer_coefficients()) throw std::invalid_argument(what + " '" + p.to_string() + "' has non-integer coefficients");
}

void check_variables(const Polynomial& p, const WeightedGrading& g, const std::string& what) {
    for (const auto& v : p.variables()) {
        if (!g.has(v)) throw std::invalid_argument(what + " uses '" + v + "', which is not a generator");
    }
}

}  // namespace

GradedPresentation::GradedPresentation(std::vector<Generator> generators, std::vector<Polynomial> relations) {
    std::set<std::string> seen;
    std::map<std::string, std::int64_t> weights;
    for (const auto& g : generators) {
        if (g.name.empty()) throw std::invalid_argument("generator with empty name");
        if (g.degree < 1) throw std::invalid_argument("generator '" + g.name + "' must have positive degree");
        if (!seen.insert(g.name).second) throw std::invalid_argument("duplicate generator '" + g.name + "'");
        weights.emplace(g.name, g.degree);
    }
    WeightedGrading grading(std::move(weights));
    std::vector<Polynomial> kept;
    for (auto& r : relations) {
        if (r.is_zero()) continue;
        check_integral(r, "relation");
        check_variables(r, grading, "relation '" + r.to_string() + "'");
        r.weighted_degree(grading);  // throws InhomogeneousError
        kept.push_back(std::move(r));
    }
    auto data = std::make_shared<Data>();
    data->generators = std::move(generators);
    data->relations = std::move(kept);
    data->grading = std::move(grading);
    data->cache = std::make_shared<PieceCache>();
    data_ = std::move(data);
}

std::int64_t GradedPresentation::generator_degree(const std::string& name) const { return data_->grading.weight(name); }

std::vector<Monomial> GradedPresentation::monomial_basis(std::int64_t n) const {
    std::vector<Monomial> out;
    if (n < 0) return out;
    const auto& gens = data_->generators;
    std::vector<Monomial::Factor> factors;
    // Depth-first over generators, spending the remaining degree.
    auto recurse = [&](auto&& self, std::size_t i, std::int64_t remaining) -> void {
        if (i == gens.size()) {
            if (remaining == 0) out.emplace_back(factors);
            return;
        }
        for (std::int64_t e = remaining / gens[i].degree; e >= 0; --e) {
            if (e > 0) factors.emplace_back(gens[i].name, static_cast<std::uint32_t>(e));
            self(self, i + 1, remaining - e * gens[i].degree);
            if (e > 0) factors.pop_back();
        }
    };
    recurse(recurse, 0, n);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return lex_compare(a, b) < 0; });
    return out;
}

IntVector GradedPresentation::coordinates(const Polynomial& p, std::int64_t n) const {
    auto basis = monomial_basis(n);
    IntVector v(basis.size());
    for (const auto& [m, c] : p.terms()) {
        if (c.get_den() != 1) throw std::invalid_argument("element has non-integer coefficients");
        auto it = std::find(basis.begin(), basis.end(), m);
        if (it == basis.end()) {
            throw std::invalid_argument("monomial " + m.to_string() + " is not of degree " + std::to_string(n));
        }
        v[static_cast<std::size_t>(it - basis.begin())] = c.get_num();
    }
    return v;
}

std::vector<IntVector> GradedPresentation::relation_lattice(std::int64_t n) const {
    std::vector<IntVector> rows;
    for (const auto& r : data_->relations) {
        std::int64_t d = r.weighted_degree(data_->grading);
        if (d > n) continue;
        for (const auto& m : monomial_basis(n - d)) rows.push_back(coordinates(Polynomial(m) * r, n));
    }
    return rows;
}

std::string GradedPresentation::to_string() const {
    bool compact = std::all_of(data_->generators.begin(), data_->generators.end(),
                               [](const Generator& g) { return g.name.size() == 1; });
    std::string s = "Z[";
    for (std::size_t i = 0; i < data_->generators.size(); ++i) s += (i ? "," : "") + data_->generators[i].name;
    s += "]";
    if (data_->relations.empty()) return s;
    s += "/(";
    for (std::size_t i = 0; i < data_->relations.size(); ++i) {
        s += (i ? "," : "") + data_->relations[i].to_string(data_->grading, compact);
    }
    return s + ")";
}

bool GradedPresentation::same_generators(const GradedPresentation& other) const {
    return data_ == other.data_ || data_->generators == other.data_->generators;
}

bool operator==(const GradedPresentation& a, const GradedPresentation& b) {
    return a.data_ == b.data_ ||
           (a.data_->generators == b.data_->generators && a.data_->relations == b.data_->relations);
}

// ---------------------------------------------------------------------------
// Elements

GradedElement::GradedElement(GradedPresentation ambient, Polynomial value, std::int64_t degree)
    : ambient_(std::move(ambient)), value_(std::move(value)), degree_(degree) {
    check_integral(value_, "element");
    check_variables(value_, ambient_.grading(), "element '" + value_.to_string() + "'");
    if (!value_.is_zero()) {
        auto d = value_.weighted_degree(ambient_.grading());
        if (d != degree_) {
            throw DegreeMismatchError("element '" + value_.to_string() + "' has degree " + std::to_string(d) +
                                      ", expected " + std::to_string(degree_));
        }
    }
}

namespace {

std::int64_t inferred_degree(const GradedPresentation& ambient, const Polynomial& value) {
    check_variables(value, ambient.grading(), "element '" + value.to_string() + "'");
    return value.weighted_degree(ambient.grading());
}

}  // namespace

GradedElement::GradedElement(GradedPresentation ambient, Polynomial value)
    : GradedElement(ambient, value, inferred_degree(ambient, value)) {}

std::string GradedElement::to_string() const {
    bool compact = std::all_of(ambient_.generators().begin(), ambient_.generators().end(),
                               [](const Generator& g) { return g.name.size() == 1; });
    return value_.to_string(ambient_.grading(), compact);
}

GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    if (!a.ambient_.same_generators(b.ambient_)) throw std::invalid_argument("product of elements of different rings");
    return GradedElement(a.ambient_, a.value_ * b.value_, a.degree_ + b.degree_);
}

GradedElement operator+(const GradedElement& a, const GradedElement& b) {
    if (!a.ambient_.same_generators(b.ambient_)) throw std::invalid_argument("sum of elements of different rings");
    if (a.degree_ != b.degree_) throw DegreeMismatchError("sum of elements of different degrees");
    return GradedElement(a.ambient_, a.value_ + b.value_, a.degree_);
}

GradedElement element(const GradedPresentation& ambient, const std::string& text) {
    return GradedElement(ambient, parse_polynomial(text));
}

GradedElement generator(const GradedPresentation& ambient, const std::string& name) {
    return GradedElement(ambient, Polynomial::variable(name), ambient.generator_degree(name));
}

GradedElement zero_element(const GradedPresentation& ambient, std::int64_t degree) {
    return GradedElement(ambient, Polynomial(), degree);
}

// ---------------------------------------------------------------------------
// Operations

AbelianGroupShape graded_piece(const GradedPresentation& a, std::int64_t n) {
    if (n < 0) return {};
    auto& cache = *a.data_->cache;
    {
        std::shared_lock lock(cache.mutex);
        auto it = cache.pieces.find(n);
        if (it != cache.pieces.end()) return it->second;
    }
    auto shape = cokernel(a.relation_lattice(n), a.monomial_basis(n).size());
    std::unique_lock lock(cache.mutex);
    return cache.pieces.emplace(n, std::move(shape)).first->second;
}

bool is_zero(const GradedElement& e) {
    if (e.value().is_zero()) return true;
    const auto& a = e.ambient();
    auto target = a.coordinates(e.value(), e.degree());
    auto rows = a.relation_lattice(e.degree());
    if (rows.empty()) return false;
    return solve_integer(IntMatrix::from_rows(rows, target.size()), target).has_value();
}

GradedPresentation quotient(const GradedPresentation& a, const std::vector<GradedElement>& extra) {
    std::vector<Polynomial> relations = a.relations();
    for (const auto& e : extra) {
        if (!e.ambient().same_generators(a)) throw std::invalid_argument("quotient by an element of another ring");
        relations.push_back(e.value());
    }
    return GradedPresentation(a.generators(), std::move(relations));
}

std::vector<Polynomial> hom_failures(const GradedPresentation& source, const GradedPresentation& target,
                                     const GeneratorImages& images) {
    std::map<std::string, Polynomial> assignment;
    for (const auto& g : source.generators()) {
        auto it = images.find(g.name);
        if (it == images.end()) throw std::invalid_argument("no image given for generator '" + g.name + "'");
        const GradedElement& img = it->second;
        if (!img.ambient().same_generators(target)) {
            throw DegreeMismatchError("image of '" + g.name + "' does not live in the target ring");
        }
        if (img.degree() != g.degree) {
            throw DegreeMismatchError("image of '" + g.name + "' has degree " + std::to_string(img.degree()) +
                                      ", expected " + std::to_string(g.degree));
        }
        assignment.emplace(g.name, img.value());
    }
    std::vector<Polynomial> failing;
    for (const auto& r : source.relations()) {
        GradedElement image(target, r.substitute(assignment), r.weighted_degree(source.grading()));
        if (!is_zero(image)) failing.push_back(r);
    }
    return failing;
}

bool hom_check(const GradedPresentation& source, const GradedPresentation& target, const GeneratorImages& images) {
    return hom_failures(source, target, images).empty();
}

bool pieces_equal(const GradedPresentation& a, const GradedPresentation& b, std::int64_t up_to) {
    for (std::int64_t n = 0; n <= up_to; ++n) {
        if (!(graded_piece(a, n) == graded_piece(b, n))) return false;
    }
    return true;
}

bool same_ideal(const GradedPresentation& a, const GradedPresentation& b) {
    if (!a.same_generators(b)) return false;
    auto contained = [](const GradedPresentation& from, const GradedPresentation& in) {
        return std::all_of(from.relations().begin(), from.relations().end(),
                           [&](const Polynomial& r) { return is_zero(GradedElement(in, r)); });
    };
    return contained(a, b) && contained(b, a);
}

std::vector<AbelianGroupShape> pieces(const GradedPresentation& a, std::int64_t up_to) {
    std::vector<AbelianGroupShape> out;
    for (std::int64_t n = 0; n <= up_to; ++n) out.push_back(graded_piece(a, n));
    return out;
}

nlohmann::json to_json(const GradedPresentation& a) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : a.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
    nlohmann::json rels = nlohmann::json::array();
    for (const auto& r : a.relations()) rels.push_back(r.to_string(a.grading()));
    return {{"generators", gens}, {"relations", rels}};
}

GradedPresentation presentation_from_json(const nlohmann::json& j) {
    std::vector<Generator> gens;
    for (const auto& g : j.at("generators")) gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<std::int64_t>()});
    std::vector<Polynomial> rels;
    for (const auto& r : j.at("relations")) rels.push_back(parse_polynomial(r.get<std::string>()));
    return GradedPresentation(std::move(gens), std::move(rels));
}

}  // namespace wchow
