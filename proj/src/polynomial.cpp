#include "wchow/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace wchow {

// ---------------------------------------------------------------------------
// WeightedGrading

WeightedGrading::WeightedGrading(std::initializer_list<std::pair<const std::string, std::int64_t>> weights)
    : weights_(weights) {}

WeightedGrading::WeightedGrading(std::map<std::string, std::int64_t> weights) : weights_(std::move(weights)) {}

WeightedGrading WeightedGrading::from_lists(const std::vector<std::string>& names,
                                            const std::vector<std::int64_t>& weights) {
    if (names.size() != weights.size()) {
        throw std::invalid_argument("grading needs one weight per variable");
    }
    std::map<std::string, std::int64_t> w;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!w.emplace(names[i], weights[i]).second) {
            throw std::invalid_argument("duplicate variable '" + names[i] + "' in grading");
        }
    }
    return WeightedGrading(std::move(w));
}

std::int64_t WeightedGrading::weight(const std::string& var) const {
    auto it = weights_.find(var);
    if (it == weights_.end()) throw std::out_of_range("variable '" + var + "' has no weight in the grading");
    return it->second;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<Factor> factors) {
    std::sort(factors.begin(), factors.end(), [](const Factor& a, const Factor& b) { return a.first < b.first; });
    for (auto& f : factors) {
        if (f.second == 0) continue;
        if (!factors_.empty() && factors_.back().first == f.first) {
            factors_.back().second += f.second;
        } else {
            factors_.push_back(std::move(f));
        }
    }
}

Monomial Monomial::variable(std::string name, std::uint32_t exponent) {
    Monomial m;
    if (exponent > 0) m.factors_.emplace_back(std::move(name), exponent);
    return m;
}

std::uint32_t Monomial::exponent(std::string_view var) const {
    for (const auto& [name, e] : factors_) {
        if (name == var) return e;
    }
    return 0;
}

std::uint64_t Monomial::total_degree() const {
    std::uint64_t d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
}

std::int64_t Monomial::weighted_degree(const WeightedGrading& g) const {
    std::int64_t d = 0;
    for (const auto& [name, e] : factors_) d += g.weight(name) * static_cast<std::int64_t>(e);
    return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
        if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
            out.factors_.push_back(*i++);
        } else if (i == a.factors_.end() || j->first < i->first) {
            out.factors_.push_back(*j++);
        } else {
            out.factors_.emplace_back(i->first, i->second + j->second);
            ++i;
            ++j;
        }
    }
    return out;
}

std::string Monomial::to_string(bool compact) const {
    std::string s;
    for (const auto& [name, e] : factors_) {
        if (!s.empty() && !compact) s += '*';
        s += name;
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

int lex_compare(const Monomial& a, const Monomial& b) {
    const auto& fa = a.factors();
    const auto& fb = b.factors();
    std::size_t i = 0, j = 0;
    while (i < fa.size() && j < fb.size()) {
        if (fa[i].first != fb[j].first) {
            // The side carrying the alphabetically smaller variable has the
            // larger exponent there (the other side has 0).
            return fa[i].first < fb[j].first ? -1 : 1;
        }
        if (fa[i].second != fb[j].second) return fa[i].second > fb[j].second ? -1 : 1;
        ++i;
        ++j;
    }
    if (i < fa.size()) return -1;
    if (j < fb.size()) return 1;
    return 0;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    auto da = a.total_degree();
    auto db = b.total_degree();
    if (da != db) return da > db;
    return lex_compare(a, b) < 0;
}

// ---------------------------------------------------------------------------
// InhomogeneousError

namespace {

std::string describe_degrees(const std::set<std::int64_t>& degrees) {
    std::ostringstream os;
    os << "polynomial is not homogeneous; term degrees {";
    bool first = true;
    for (auto d : degrees) {
        if (!first) os << ',';
        os << d;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace

InhomogeneousError::InhomogeneousError(std::set<std::int64_t> degrees)
    : std::domain_error(describe_degrees(degrees)), degrees_(std::move(degrees)) {}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) terms_.emplace(Monomial(), constant);
}

Polynomial::Polynomial(Monomial m, const Rational& coefficient) {
    if (coefficient != 0) terms_.emplace(std::move(m), coefficient);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

std::optional<Rational> Polynomial::constant_value() const {
    if (!is_constant()) return std::nullopt;
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::set<std::string> Polynomial::variables() const {
    std::set<std::string> vars;
    for (const auto& [m, c] : terms_) {
        for (const auto& f : m.factors()) vars.insert(f.first);
    }
    return vars;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.get_den() == 1; });
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial operator-(const Polynomial& a) {
    Polynomial out = a;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial Polynomial::pow(std::uint32_t exponent) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<std::string, Polynomial>& assignment, bool allow_partial) const {
    // Powers of each image are reused across terms.
    std::map<std::pair<std::string, std::uint32_t>, Polynomial> power_cache;
    auto image_power = [&](const std::string& var, std::uint32_t e) -> const Polynomial& {
        auto key = std::make_pair(var, e);
        auto it = power_cache.find(key);
        if (it != power_cache.end()) return it->second;
        auto a = assignment.find(var);
        Polynomial value;
        if (a == assignment.end()) {
            if (!allow_partial) throw std::invalid_argument("substitute: variable '" + var + "' is not assigned");
            value = Polynomial(Monomial::variable(var, e));
        } else {
            value = a->second.pow(e);
        }
        return power_cache.emplace(key, std::move(value)).first->second;
    };

    Polynomial out;
    for (const auto& [m, c] : terms_) {
        Polynomial term(c);
        for (const auto& [var, e] : m.factors()) term *= image_power(var, e);
        out += term;
    }
    return out;
}

Rational Polynomial::evaluate(const std::map<std::string, Rational>& values) const {
    Rational total = 0;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (const auto& [var, e] : m.factors()) {
            auto it = values.find(var);
            if (it == values.end()) throw std::invalid_argument("evaluate: variable '" + var + "' has no value");
            Rational p = 1;
            for (std::uint32_t k = 0; k < e; ++k) p *= it->second;
            term *= p;
        }
        total += term;
    }
    return total;
}

std::int64_t Polynomial::weighted_degree(const WeightedGrading& g) const {
    if (terms_.empty()) throw std::domain_error("weighted degree of the zero polynomial is undefined");
    std::set<std::int64_t> degrees;
    for (const auto& [m, c] : terms_) degrees.insert(m.weighted_degree(g));
    if (degrees.size() != 1) throw InhomogeneousError(std::move(degrees));
    return *degrees.begin();
}

bool Polynomial::is_homogeneous(const WeightedGrading& g) const {
    if (terms_.empty()) return true;
    auto d = terms_.begin()->first.weighted_degree(g);
    return std::all_of(terms_.begin(), terms_.end(), [&](const auto& t) { return t.first.weighted_degree(g) == d; });
}

std::string Polynomial::to_string(const std::optional<WeightedGrading>& g, bool compact) const {
    if (terms_.empty()) return "0";
    std::vector<const Terms::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& t : terms_) order.push_back(&t);
    if (g) {
        std::stable_sort(order.begin(), order.end(), [&](auto* a, auto* b) {
            auto da = a->first.weighted_degree(*g);
            auto db = b->first.weighted_degree(*g);
            if (da != db) return da > db;
            return lex_compare(a->first, b->first) < 0;
        });
    }

    const char* plus = compact ? "+" : " + ";
    const char* minus = compact ? "-" : " - ";
    std::string out;
    bool first = true;
    for (const auto* t : order) {
        const Monomial& m = t->first;
        Rational c = t->second;
        bool negative = c < 0;
        if (negative) c = -c;
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? minus : plus;
        }
        first = false;
        if (m.is_one()) {
            out += wchow::to_string(c);
        } else {
            if (c != 1) {
                out += wchow::to_string(c);
                if (!compact) out += '*';
            }
            out += m.to_string(compact);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what + " in '" +
                         std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Polynomial expression() {
        Polynomial acc = term();
        for (;;) {
            if (accept('+')) {
                acc += term();
            } else if (accept('-')) {
                acc -= term();
            } else {
                return acc;
            }
        }
    }

    Polynomial term() {
        Polynomial acc = unary();
        for (;;) {
            if (accept('*')) {
                acc *= unary();
            } else if (accept('/')) {
                Polynomial divisor = unary();
                auto c = divisor.constant_value();
                if (!c || *c == 0) fail("division by a non-constant or zero");
                acc *= Polynomial(Rational(1) / *c);
            } else {
                return acc;
            }
        }
    }

    Polynomial unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    Polynomial power() {
        Polynomial base = primary();
        if (accept('^')) {
            skip_space();
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (start == pos_) fail("expected a non-negative integer exponent");
            auto e = std::stoul(std::string(text_.substr(start, pos_ - start)));
            return base.pow(static_cast<std::uint32_t>(e));
        }
        return base;
    }

    Polynomial primary() {
        skip_space();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial inner = expression();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            return Polynomial(Rational(Integer(std::string(text_.substr(start, pos_ - start)), 10)));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                ++pos_;
            }
            return Polynomial::variable(std::string(text_.substr(start, pos_ - start)));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text) { return Parser(text).parse(); }

}  // namespace wchow
