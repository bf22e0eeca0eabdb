// wchow: command-line front end for the Chow ring toolkit.

#include "wchow/blowup.hpp"
#include "wchow/curves.hpp"
#include "wchow/report.hpp"
#include "wchow/wps.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace wchow;

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void print_pieces(const GradedPresentation& a, std::int64_t max_degree) {
    std::cout << "degree  piece\n";
    for (std::int64_t n = 0; n <= max_degree; ++n) {
        std::string d = std::to_string(n);
        std::cout << d << std::string(8 - std::min<std::size_t>(d.size(), 7), ' ') << graded_piece(a, n).to_string()
                  << "\n";
    }
}

std::vector<Rational> parse_rationals(const std::vector<std::string>& args, std::size_t expected,
                                      bool base_ring) {
    if (args.size() != expected) {
        throw UsageError("expected " + std::to_string(expected) + " rational arguments, got " +
                         std::to_string(args.size()));
    }
    std::vector<Rational> out;
    for (const auto& a : args) {
        Rational q = parse_rational(a);
        if (base_ring) require_base_ring(q, "argument " + a);
        out.push_back(q);
    }
    return out;
}

MarkedCurveCoeffs marked(const std::vector<Rational>& v, std::size_t at = 0) { return {v[at], v[at + 1], v[at + 2]}; }

std::string point_string(const FixedPoint& p) {
    return "[" + to_string(p.coords[0]) + "," + to_string(p.coords[1]) + "," + to_string(p.coords[2]) + "]";
}

std::string join_polys(const std::vector<Polynomial>& ps) {
    std::string s = "(";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i].to_string(std::nullopt, true);
    return s + ")";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Chow rings of weighted projective stacks and the moduli of two-pointed genus one curves"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kVersion));

    // chow
    auto* chow = app.add_subcommand("chow", "Chow ring of P(a1,...,an) and its graded pieces");
    std::vector<std::int64_t> chow_weights;
    std::int64_t chow_max = 4;
    chow->add_option("weights", chow_weights, "positive weights")->required();
    chow->add_option("--max-degree", chow_max, "last degree to print")->check(CLI::NonNegativeNumber);

    // blowup
    auto* blowup = app.add_subcommand("blowup", "weighted blow-up and the two-pointed genus one rings");
    blowup->require_subcommand(1);
    std::int64_t blowup_max = 8;
    auto* b_bar = blowup->add_subcommand("m12bar", "Z[x,y]/(xy,24x^2+24y^2) with its assembly table");
    b_bar->add_option("--max-degree", blowup_max, "assembly bound")->check(CLI::NonNegativeNumber);
    auto* b_open = blowup->add_subcommand("m12", "the open part Z[t]/(12t)");
    b_open->add_option("--max-degree", blowup_max, "check bound")->check(CLI::NonNegativeNumber);
    auto* b_res = blowup->add_subcommand("restriction", "the restriction map x -> t, y -> 0");
    b_res->add_option("--max-degree", blowup_max, "check bound")->check(CLI::NonNegativeNumber);
    auto* b_chart = blowup->add_subcommand("chart", "chart data of the blow-up with weights (w1,w2)");
    std::int64_t cw1 = 4, cw2 = 6;
    int which = 1;
    b_chart->add_option("w1", cw1)->check(CLI::PositiveNumber);
    b_chart->add_option("w2", cw2)->check(CLI::PositiveNumber);
    b_chart->add_option("--which", which, "1 (x invertible) or 2 (y invertible)")->check(CLI::IsMember({1, 2}));
    auto* b_inv = blowup->add_subcommand("invariants", "check the invariant ring of (w1,w2,-1)");
    std::int64_t iw1 = 4, iw2 = 6, idegree = 12;
    b_inv->add_option("w1", iw1)->check(CLI::PositiveNumber);
    b_inv->add_option("w2", iw2)->check(CLI::PositiveNumber);
    b_inv->add_option("--degree", idegree, "bound on i+j+k")->check(CLI::PositiveNumber);

    // curve
    auto* curve = app.add_subcommand("curve", "marked Weierstrass curves (use -- before negative arguments)");
    curve->require_subcommand(1);
    std::vector<std::string> curve_args;
    auto* c_norm = curve->add_subcommand("normalize", "a2 a3 a4 -> alpha, beta");
    auto* c_disc = curve->add_subcommand("disc", "discriminant of beta4 beta6, or of alpha2 alpha3 alpha4");
    auto* c_j = curve->add_subcommand("j", "j-invariant of beta4 beta6");
    auto* c_iso = curve->add_subcommand("iso", "a2 a3 a4 a2' a3' a4' -> scaling lambda");
    auto* c_fixed = curve->add_subcommand("fixed", "mu2-fixed points on the fiber over beta4 beta6");
    for (auto* c : {c_norm, c_disc, c_j, c_iso, c_fixed}) c->add_option("values", curve_args)->required();

    // pic-complement
    auto* pic = app.add_subcommand("pic-complement", "Pic of [A^n - V(f) / Gm]");
    std::vector<std::int64_t> pic_weights{2, 3, 4};
    std::vector<std::string> pic_vars{"a2", "a3", "a4"};
    std::string pic_poly;
    pic->add_option("--weights", pic_weights, "weights of the variables");
    pic->add_option("--vars", pic_vars, "variable names");
    pic->add_option("--poly", pic_poly, "homogeneous polynomial (default: the discriminant)");

    // verify-paper
    auto* verify = app.add_subcommand("verify-paper", "run every identity check and write a report");
    std::int64_t verify_max = 8;
    std::string format = "text";
    std::string output;
    bool self_test = false;
    verify->add_option("--max-degree", verify_max, "degree bound (at least 4)")->check(CLI::Range(4, 64));
    verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--output", output, "write the report here instead of stdout");
    verify->add_flag("--self-test", self_test, "corrupt a relation; the run must then fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*chow) {
            auto a = chow_ring(WeightedProjectiveStack(chow_weights));
            std::cout << a.to_string() << "\n";
            print_pieces(a, chow_max);
        } else if (*b_bar) {
            auto pres = m12bar_presentation();
            std::cout << pres.to_string() << "\n";
            std::cout << "degree  ring          A^(n-1)(P(4,6)) + A^n(U)\n";
            bool ok = true;
            for (const auto& r : assembly_table(pres, blowup_max)) {
                std::string d = std::to_string(r.degree);
                std::string ring = r.ring_piece.to_string();
                std::cout << d << std::string(8 - std::min<std::size_t>(d.size(), 7), ' ') << ring
                          << std::string(14 - std::min<std::size_t>(ring.size(), 13), ' ')
                          << r.exceptional_piece.to_string() << " + " << r.open_piece.to_string()
                          << (r.matches ? "" : "  MISMATCH") << "\n";
                ok = ok && r.matches;
            }
            if (!ok) return kExitFailure;
        } else if (*b_open) {
            auto a = m12_open_chow(blowup_max);
            std::cout << a.to_string() << "\n";
            print_pieces(a, blowup_max);
        } else if (*b_res) {
            std::cout << restriction_hom(blowup_max).to_string() << "\n";
        } else if (*b_chart) {
            auto c = chart(BlowupData(cw1, cw2), which);
            std::cout << "group: " << c.group() << "\n"
                      << "action weights: (" << c.action_weights.first << "," << c.action_weights.second << ")\n"
                      << "alpha: (a,b) -> " << join_polys(c.alpha) << "\n"
                      << "blow-down: (a,b) -> " << join_polys(c.blowdown) << "\n"
                      << "beta: " << c.beta << "\n";
            if (c.ambiguous) std::cout << "note: " << c.note << "\n";
        } else if (*b_inv) {
            bool ok = invariant_ring_check(iw1, iw2, idegree);
            std::cout << (ok ? "true" : "false") << "\n";
            if (!ok) return kExitFailure;
        } else if (*c_norm) {
            auto r = to_short_form(marked(parse_rationals(curve_args, 3, true)));
            std::cout << "alpha = " << to_string(r.intermediate) << "\n"
                      << "beta = " << to_string(r.short_form) << "\n";
        } else if (*c_disc) {
            if (curve_args.size() == 3) {
                auto v = parse_rationals(curve_args, 3, true);
                std::cout << to_string(discriminant(IntermediateCoeffs{v[0], v[1], v[2]})) << "\n";
            } else {
                auto v = parse_rationals(curve_args, 2, true);
                std::cout << to_string(discriminant(ShortWeierstrass{v[0], v[1]})) << "\n";
            }
        } else if (*c_j) {
            auto v = parse_rationals(curve_args, 2, true);
            std::cout << to_string(j_invariant(ShortWeierstrass{v[0], v[1]})) << "\n";
        } else if (*c_iso) {
            auto v = parse_rationals(curve_args, 6, true);
            auto lambda = iso_test(marked(v, 0), marked(v, 3));
            if (lambda) {
                std::cout << "lambda = " << to_string(*lambda) << "\n";
            } else {
                std::cout << "no rational lambda\n";
                return kExitFailure;
            }
        } else if (*c_fixed) {
            auto v = parse_rationals(curve_args, 2, true);
            auto points = mu2_fixed_points(ShortWeierstrass{v[0], v[1]});
            if (points.empty()) std::cout << "no rational fixed points\n";
            for (const auto& p : points) {
                std::cout << "x = " << to_string(p.x) << "  " << point_string(p);
                if (p.multiplicity > 1) std::cout << "  (multiplicity " << p.multiplicity << ")";
                std::cout << "\n";
            }
        } else if (*pic) {
            if (pic_weights.size() != pic_vars.size()) throw UsageError("--weights and --vars differ in length");
            Polynomial f = pic_poly.empty() ? discriminant_polynomial() : parse_polynomial(pic_poly);
            auto r = pic_complement({pic_weights, pic_vars, f});
            std::cout << "degree: " << r.character_degree << "\n"
                      << "Pic: " << r.group.to_string() << "\n"
                      << "assumes: " << r.assumption << "\n";
        } else if (*verify) {
            VerifyOptions opt;
            opt.bound = verify_max;
            opt.self_test = self_test;
            auto report = run_verification(opt);
            std::string text = format == "json" ? to_json(report).dump(2) + "\n" : render_text(report);
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output);
                if (!out) throw std::runtime_error("cannot open " + output + " for writing");
                out << text;
                if (!out) throw std::runtime_error("failed writing " + output);
            }
            return report.all_passed() ? 0 : kExitFailure;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BaseRingError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return 0;
}
