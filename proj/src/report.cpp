#include "wchow/report.hpp"

#include "wchow/blowup.hpp"
#include "wchow/curves.hpp"
#include "wchow/wps.hpp"

#include <functional>
#include <future>
#include <sstream>

namespace wchow {

namespace {

const char* status_name(Status s) { return s == Status::pass ? "pass" : "fail"; }

Status parse_status(const std::string& s) {
    if (s == "pass") return Status::pass;
    if (s == "fail") return Status::fail;
    throw std::invalid_argument("unknown status '" + s + "'");
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
    return out;
}

std::string pieces_string(const GradedPresentation& a, std::int64_t bound) {
    std::vector<std::string> parts;
    for (const auto& p : pieces(a, bound)) parts.push_back(p.to_string());
    return join(parts, ", ");
}

// Literal expectations, written out degree by degree.
std::string expected_pieces(std::int64_t bound, const std::function<std::string(std::int64_t)>& at) {
    std::vector<std::string> parts;
    for (std::int64_t n = 0; n <= bound; ++n) parts.push_back(at(n));
    return join(parts, ", ");
}

std::string element_string(const GradedElement& e) { return e.value().is_zero() ? "0" : e.to_string(); }

std::string failures_string(const std::vector<Polynomial>& failing, const GradedPresentation& source) {
    if (failing.empty()) return "pass";
    std::vector<std::string> parts;
    for (const auto& r : failing) parts.push_back(r.to_string(source.grading(), true));
    return "fail: " + join(parts, ", ");
}

std::string vectors_string(const std::vector<IntVector>& rows) {
    std::vector<std::string> parts;
    for (const auto& r : rows) {
        std::vector<std::string> entries;
        for (const auto& z : r) entries.push_back(to_string(z));
        parts.push_back("(" + join(entries, ",") + ")");
    }
    return join(parts, " ");
}

using Check = std::function<ReportItem()>;

std::vector<Check> build_checks(const VerifyOptions& opt) {
    const std::int64_t bound = opt.bound;
    const Integer coefficient = opt.self_test ? 23 : 24;
    std::vector<Check> checks;

    checks.push_back([=] {
        auto a = chow_ring(WeightedProjectiveStack({2, 3, 4}));
        return make_item("p234-chow", "graded pieces of A(P(2,3,4)) = Z[t]/(24t^3)",
                         expected_pieces(bound, [](std::int64_t n) { return n < 3 ? "Z" : "Z/24"; }),
                         pieces_string(a, bound), "Z[t]/(a1...an t^n)");
    });
    checks.push_back([=] {
        auto a = chow_ring(WeightedProjectiveStack({4, 6}));
        return make_item("p46-chow", "graded pieces of A(P(4,6)) = Z[t]/(24t^2)",
                         expected_pieces(bound, [](std::int64_t n) { return n < 2 ? "Z" : "Z/24"; }),
                         pieces_string(a, bound), "A(M11bar) = Z[t]/24t^2");
    });
    checks.push_back([=] {
        auto u = cusp_complement_chow();
        GradedPresentation ref({{"t", 1}}, {parse_polynomial("24*t^2")});
        std::string actual = pieces_string(u, bound) + (same_ideal(u, ref) ? "" : " (ideal differs from (24t^2))");
        return make_item("u-chow", "A(U) for U = P(2,3,4) minus the cusp locus is Z[t]/(24t^2)",
                         expected_pieces(bound, [](std::int64_t n) { return n < 2 ? "Z" : "Z/24"; }), actual,
                         "A(U) = Z[t]/24t^2");
    });
    checks.push_back([=] {
        auto u = cusp_complement_chow();
        auto v = quotient(u, {element(u, "12*t^2"), element(u, "12*t^2")});
        GradedPresentation ref({{"t", 1}}, {parse_polynomial("12*t^2")});
        std::string actual = pieces_string(v, bound) + (same_ideal(v, ref) ? "" : " (ideal differs from (12t^2))");
        return make_item("v-chow", "removing the two stacky points of the nodal fiber gives Z[t]/(12t^2)",
                         expected_pieces(bound, [](std::int64_t n) { return n < 2 ? "Z" : "Z/12"; }), actual,
                         "A(V) = Z[t]/12t^2");
    });
    checks.push_back([=] {
        return make_item("m12bar-ring", "presentation of the Chow ring of the two-pointed compactification",
                         "Z[x,y]/(xy,24x^2+24y^2)", m12bar_presentation(coefficient).to_string(),
                         "Z[x,y]/(24x^2+24y^2,xy)");
    });
    checks.push_back([=] {
        auto rows = assembly_table(m12bar_presentation(coefficient), bound);
        std::vector<std::string> bad;
        for (const auto& r : rows) {
            if (!r.matches) {
                bad.push_back("degree " + std::to_string(r.degree) + ": " + r.ring_piece.to_string() + " vs " +
                              r.expected.to_string());
            }
        }
        std::string agree = "degrees 0.." + std::to_string(bound) + " agree";
        return make_item("m12bar-assembly", "each piece equals A^{n-1}(P(4,6)) + A^n(U) (split exact sequence)",
                         agree, bad.empty() ? agree : join(bad, "; "), "split pi_* + j^*");
    });
    checks.push_back([=] {
        return make_item("m12bar-pieces", "graded pieces of Z[x,y]/(xy,24x^2+24y^2)",
                         expected_pieces(bound,
                                         [](std::int64_t n) -> std::string {
                                             if (n == 0) return "Z";
                                             if (n == 1) return "Z^2";
                                             if (n == 2) return "Z + Z/24";
                                             return "Z/24 + Z/24";
                                         }),
                         pieces_string(m12bar_presentation(coefficient), bound), "A^{n-1}(M11bar) = Z/24");
    });
    checks.push_back([=] {
        auto k = phi_degree_two_check(m12bar_presentation(coefficient));
        std::string actual = k.matches ? "kernel = relations" : "kernel " + vectors_string(k.kernel) +
                                                                    " vs relations " + vectors_string(k.relations);
        return make_item("m12bar-phi-degree2",
                         "kernel of (pi_*, j^*) on x^2, xy, y^2 is spanned by xy and 24x^2+24y^2",
                         "kernel = relations", actual, "Phi(x^2) = (t, t^2), Phi(xy) = 0, Phi(y^2) = (-t, 0)");
    });
    checks.push_back([=] {
        auto q = quotient(cusp_complement_chow(), open_part_removed_classes());
        GradedPresentation ref({{"t", 1}}, {parse_polynomial("12*t")});
        std::string actual = pieces_string(q, bound) + (same_ideal(q, ref) ? "" : " (ideal differs from (12t))");
        return make_item("m12-open-chow", "A(U) modulo [C] = 12t and the point classes 12t^2 is Z[t]/(12t)",
                         expected_pieces(bound, [](std::int64_t n) { return n == 0 ? "Z" : "Z/12"; }), actual,
                         "A(M12) = Z[t]/12t");
    });
    checks.push_back([=] {
        auto source = m12bar_presentation(coefficient);
        auto target = m12_open_chow(bound);
        GeneratorImages images{{"x", generator(target, "t")}, {"y", zero_element(target, 1)}};
        return make_item("restriction-hom", "x -> t, y -> 0 is a ring map Z[x,y]/(xy,24x^2+24y^2) -> Z[t]/(12t)",
                         "pass", failures_string(hom_failures(source, target, images), source),
                         "y -> 0, x -> t");
    });
    checks.push_back([=] {
        auto source = m12bar_presentation(coefficient);
        auto target = m12_open_chow(bound);
        GeneratorImages images{{"x", generator(target, "t")}, {"y", generator(target, "t")}};
        return make_item("restriction-hom-mutated", "x -> t, y -> t is rejected", "fail: xy",
                         failures_string(hom_failures(source, target, images), source),
                         "xy -> t^2, not in (12t)");
    });
    checks.push_back([=] {
        auto g = WeightedGrading{{"a2", 2}, {"a3", 3}, {"a4", 4}};
        return make_item("discriminant-degree", "weighted degree of the discriminant under (2,3,4)", "12",
                         std::to_string(discriminant_polynomial().weighted_degree(g)), "lambda -> lambda^12");
    });
    checks.push_back([=] {
        auto r = pic_complement({{2, 3, 4}, {"a2", "a3", "a4"}, discriminant_polynomial()});
        return make_item("pic-complement", "Pic of P(2,3,4) minus the discriminant locus", "Z/12",
                         r.group.to_string(), "Pic = Z/12Z");
    });
    checks.push_back([=] {
        auto r = pic_complement({{2, 3, 4}, {"a2", "a3", "a4"}, discriminant_polynomial()});
        auto u = cusp_complement_chow();
        GradedElement curve(u, Polynomial(r.character_degree) * Polynomial::variable("t"), 1);
        return make_item("curve-class", "class of the discriminant curve in A^1(U)", "12t", element_string(curve),
                         "[C] = 12t");
    });
    checks.push_back([=] {
        return make_item("weierstrass-identity", "completing the square and cube leaves no residual", "0",
                         weierstrass_residual().to_string(), "beta6 = alpha3^2 - alpha2^3 - alpha2 alpha4");
    });
    checks.push_back([=] {
        std::vector<std::string> pts;
        for (const auto& p : mu2_fixed_points({Rational(-3), Rational(2)})) {
            pts.push_back("[" + to_string(p.coords[0]) + "," + to_string(p.coords[1]) + "," + to_string(p.coords[2]) +
                          "]");
        }
        return make_item("mu2-fixed-points", "points with nontrivial stabilizer on the nodal fiber y^2 = x^3 - 3x + 2",
                         "[1,0,-3]; [-2,0,-3]", join(pts, "; "), "p = [1,0,-3], q = [-2,0,-3]");
    });
    checks.push_back([=] {
        return make_item("nodal-discriminant", "the nodal fiber point (1,0,-3) lies on the discriminant", "0",
                         to_string(discriminant(IntermediateCoeffs{1, 0, -3})), "nodal cubic y^2 - x^3 + 3x - 2");
    });
    checks.push_back([=] {
        return make_item("cusp-indeterminacy", "F is undefined on the cusp locus {[s^2, s^3, 0]}", "(0,0)",
                         to_string(F_map(IntermediateCoeffs{1, 1, 0})), "Z = {[s^2, s^3, 0]}");
    });
    checks.push_back([=] {
        return make_item("point-class-p46", "class of the mu_4 point of P(4,6)", "6t",
                         element_string(point_class(WeightedProjectiveStack({4, 6}), 1)),
                         "(pi alpha j)_* = 6 c1(O(1))");
    });
    checks.push_back([=] {
        return make_item("point-class-p234", "class of the mu_2 point of P(2,3,4)", "12t^2",
                         element_string(point_class(WeightedProjectiveStack({2, 3, 4}), 1)), "= 12t^2");
    });
    checks.push_back([=] {
        return make_item("cusp-class", "class of the cusp locus in A(P(2,3,4))", "24t^2", element_string(cusp_class()),
                         "A(U) = Z[t]/24t^2");
    });
    checks.push_back([=] {
        std::vector<std::string> bad;
        for (std::int64_t w1 = 1; w1 <= 6; ++w1) {
            for (std::int64_t w2 = w1; w2 <= 6; ++w2) {
                if (!invariant_ring_check(w1, w2, 15)) bad.push_back("(" + std::to_string(w1) + "," + std::to_string(w2) + ")");
            }
        }
        return make_item("invariant-ring", "invariants of (w1,w2,-1) are generated by u^w1 x, u^w2 y for w1 <= w2 <= 6",
                         "true", bad.empty() ? "true" : "false at " + join(bad, " "),
                         "ring of invariants R[u^w1 x, u^w2 y]");
    });
    return checks;
}

}  // namespace

ReportSummary VerificationReport::summary() const {
    ReportSummary s;
    for (const auto& item : items) (item.status == Status::pass ? s.pass : s.fail)++;
    return s;
}

const ReportItem* VerificationReport::find(const std::string& id) const {
    for (const auto& item : items) {
        if (item.id == id) return &item;
    }
    return nullptr;
}

ReportItem make_item(std::string id, std::string description, std::string expected, std::string actual,
                     std::string reference) {
    ReportItem item{std::move(id), std::move(description), Status::fail, std::move(expected), std::move(actual),
                    std::move(reference)};
    item.status = item.expected == item.actual ? Status::pass : Status::fail;
    return item;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json items = nlohmann::json::array();
    for (const auto& item : r.items) {
        items.push_back({{"id", item.id},
                         {"description", item.description},
                         {"status", status_name(item.status)},
                         {"expected", item.expected},
                         {"actual", item.actual},
                         {"reference", item.reference}});
    }
    auto s = r.summary();
    return {{"schema", r.schema},
            {"version", r.version},
            {"bound", r.bound},
            {"items", items},
            {"summary", {{"pass", s.pass}, {"fail", s.fail}}}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    try {
        r.schema = j.at("schema").get<int>();
        if (r.schema != kReportSchema) throw std::invalid_argument("unsupported report schema " + std::to_string(r.schema));
        r.version = j.at("version").get<std::string>();
        r.bound = j.at("bound").get<std::int64_t>();
        for (const auto& it : j.at("items")) {
            r.items.push_back({it.at("id").get<std::string>(), it.at("description").get<std::string>(),
                               parse_status(it.at("status").get<std::string>()), it.at("expected").get<std::string>(),
                               it.at("actual").get<std::string>(), it.at("reference").get<std::string>()});
        }
        ReportSummary stored{j.at("summary").at("pass").get<std::size_t>(), j.at("summary").at("fail").get<std::size_t>()};
        if (!(stored == r.summary())) throw std::invalid_argument("report summary does not match its items");
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string render_text(const VerificationReport& r) {
    std::ostringstream out;
    out << "wchow " << r.version << "  verification report (degree bound " << r.bound << ")\n\n";
    for (const auto& item : r.items) {
        out << (item.status == Status::pass ? "PASS  " : "FAIL  ") << item.id << "\n";
        out << "      " << item.description << "\n";
        out << "      expected: " << item.expected << "\n";
        if (item.status == Status::fail) out << "      actual:   " << item.actual << "\n";
        out << "      ref:      " << item.reference << "\n";
    }
    auto s = r.summary();
    out << "\n" << s.pass << " passed, " << s.fail << " failed\n";
    return out.str();
}

VerificationReport run_verification(const VerifyOptions& options) {
    if (options.bound < 4) throw std::invalid_argument("verification needs a degree bound of at least 4");
    VerificationReport report;
    report.bound = options.bound;
    auto checks = build_checks(options);

    // A check that throws is reported as a failure carrying the message.
    auto guarded = [](const Check& c, std::size_t index) {
        try {
            return c();
        } catch (const std::exception& e) {
            return make_item("check-" + std::to_string(index), "check raised an exception", "no exception",
                             e.what(), "");
        }
    };
    if (options.parallel) {
        std::vector<std::future<ReportItem>> futures;
        for (std::size_t i = 0; i < checks.size(); ++i) {
            futures.push_back(std::async(std::launch::async, guarded, std::cref(checks[i]), i));
        }
        for (auto& f : futures) report.items.push_back(f.get());
    } else {
        for (std::size_t i = 0; i < checks.size(); ++i) report.items.push_back(guarded(checks[i], i));
    }
    return report;
}

}  // namespace wchow
