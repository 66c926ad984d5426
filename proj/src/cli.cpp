#include "tautring/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <sstream>

#include "tautring/family.hpp"
#include "tautring/json_io.hpp"
#include "tautring/kappa.hpp"
#include "tautring/phi.hpp"
#include "tautring/relations.hpp"
#include "tautring/verify.hpp"

namespace tautring {

namespace {

std::string coeff_factor_str(const Poly& p) {
    if (p.term_count() == 1) {
        Rational c = p.terms().begin()->second;
        bool is_const = true;
        for (int e : p.terms().begin()->first)
            if (e != 0) is_const = false;
        if (is_const && c == Rational(1)) return "";
        if (is_const && c == Rational(-1)) return "-";
        return p.str() + "*";
    }
    return "(" + p.str() + ")*";
}

std::string ring_element_str(const RingElement& e) {
    std::vector<std::string> parts;
    if (!e.c0().is_zero()) parts.push_back(e.c0().str());
    for (int i = 1; i <= e.presentation()->n(); ++i)
        if (!e.cx(i).is_zero())
            parts.push_back(coeff_factor_str(e.cx(i)) + "x" + std::to_string(i));
    if (!e.cnu().is_zero()) parts.push_back(coeff_factor_str(e.cnu()) + "nu");
    if (parts.empty()) return "0";
    std::string out = parts[0];
    for (size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
    return out;
}

std::string poly_csv(const Poly& p) {
    std::ostringstream os;
    for (const auto& [e, c] : p.terms()) {
        os << c.str();
        for (int x : e) os << "," << x;
        os << "\n";
    }
    return os.str();
}

std::string relation_text(const RelationVector& r) {
    std::ostringstream os;
    bool first = true;
    for (size_t j = 0; j < r.coeffs.size(); ++j) {
        if (r.coeffs[j] == 0) continue;
        Integer mag = r.coeffs[j] < 0 ? Integer(-r.coeffs[j]) : r.coeffs[j];
        if (first) {
            if (r.coeffs[j] < 0) os << "-";
            first = false;
        } else {
            os << (r.coeffs[j] < 0 ? " - " : " + ");
        }
        os << mag.get_str() << "*kappa[" << r.labels[j] << "]";
    }
    if (first) os << "0";
    os << " = 0";
    return os.str();
}

struct Options {
    std::string format = "text";
    std::string output;
};

int emit(const Options& opt, const std::string& text, std::ostream& out, std::ostream& err) {
    if (opt.output.empty()) {
        out << text;
        return 0;
    }
    std::ofstream f(opt.output, std::ios::binary);
    if (!f) {
        err << "error: cannot open output file '" << opt.output << "'\n";
        return 2;
    }
    f << text;
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact symbolic calculus of tautological classes for definite 4-manifold "
                 "families"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--output", opt.output, "Write output to a file instead of standard output");

    // phi
    int phi_a = 0, phi_b = 0;
    CLI::App* phi_cmd = app.add_subcommand("phi", "Compute phi_{a,b}(x,y)");
    phi_cmd->add_option("-a", phi_a, "p1 exponent")->required();
    phi_cmd->add_option("-b", phi_b, "e exponent")->required();

    // kappa
    int kn = 1, ka = 0, kb = 0, kchoice = 1;
    CLI::App* kappa_cmd = app.add_subcommand("kappa", "Compute kappa_{p1^a e^b} for b_2 = n");
    kappa_cmd->add_option("-n", kn, "b_2 of the fibre")->required();
    kappa_cmd->add_option("-a", ka, "p1 exponent")->required();
    kappa_cmd->add_option("-b", kb, "e exponent")->required();
    kappa_cmd->add_option("--choice-i", kchoice, "choice index for odd e-powers (default 1)");

    // ring
    int rn = 1;
    std::string rmode = "constrained";
    bool rtable = false, robstructions = false;
    CLI::App* ring_cmd = app.add_subcommand("ring", "Print the ring table or its obstructions");
    ring_cmd->add_option("-n", rn, "b_2 of the fibre")->required();
    ring_cmd->add_option("--mode", rmode, "Coefficient mode")
        ->check(CLI::IsMember({"free", "constrained"}))
        ->capture_default_str();
    ring_cmd->add_flag("--table", rtable, "Print the basis product table (default)");
    ring_cmd->add_flag("--obstructions", robstructions, "Print associativity residuals");

    // relations
    int rel_d = 2;
    std::string rel_source = "phi";
    CLI::App* rel_cmd = app.add_subcommand("relations", "Linear relations among kappa classes");
    rel_cmd->add_option("--degree", rel_d, "Total degree d")->required();
    rel_cmd->add_option("--source", rel_source, "Relation source")
        ->check(CLI::IsMember({"phi", "signature"}))
        ->capture_default_str();

    // lgenus
    int lk = 1;
    CLI::App* lgenus_cmd =
        app.add_subcommand("lgenus", "L-polynomial restricted to two Pontryagin variables");
    lgenus_cmd->add_option("-k", lk, "Degree index (component of degree 4k)")->required();

    // verify
    bool verify_all_flag = false;
    std::string verify_id;
    int max_degree = 12;
    CLI::App* verify_cmd = app.add_subcommand("verify", "Run the verification suite");
    verify_cmd->add_flag("--all", verify_all_flag, "Run every check (default)");
    verify_cmd->add_option("--check", verify_id, "Run a single check by id");
    verify_cmd->add_option("--max-degree", max_degree,
                           "Degree cap for the phi-family checks (kernel bound runs to cap+8)")
        ->capture_default_str();

    std::vector<std::string> argv_copy = args;
    std::reverse(argv_copy.begin(), argv_copy.end());
    try {
        app.parse(argv_copy);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }

    try {
        if (*phi_cmd) {
            if (phi_a < 0 || phi_b < 0) {
                err << "error: phi requires a, b >= 0\n";
                return 2;
            }
            Poly p = phi(phi_a, phi_b);
            std::string text;
            if (opt.format == "text")
                text = p.str() + "\n";
            else if (opt.format == "json")
                text = poly_to_json(p).dump(2) + "\n";
            else
                text = poly_csv(p);
            return emit(opt, text, out, err);
        }

        if (*kappa_cmd) {
            std::optional<int> choice;
            if (kappa_cmd->count("--choice-i")) choice = kchoice;
            KappaExpression k = kappa(kn, ka, kb, choice);
            std::string text;
            if (opt.format == "text")
                text = k.value.str() + "\n";
            else if (opt.format == "json")
                text = kappa_to_json(k).dump(2) + "\n";
            else
                text = poly_csv(k.value);
            return emit(opt, text, out, err);
        }

        if (*ring_cmd) {
            if (opt.format == "csv") {
                err << "error: csv output is not defined for ring tables\n";
                return 2;
            }
            FamilyPtr pres = rmode == "free" ? FamilyPresentation::free_mode(rn)
                                             : FamilyPresentation::constrained(rn);
            std::string text;
            if (robstructions && !rtable) {
                auto obstructions = associativity_obstructions(pres);
                if (opt.format == "json") {
                    Json j;
                    j["n"] = rn;
                    j["mode"] = rmode;
                    j["obstructions"] = Json::array();
                    for (const auto& o : obstructions)
                        j["obstructions"].push_back({{"triple", o.triple},
                                                     {"zero", o.residual.is_zero()},
                                                     {"residual", ring_element_to_json(o.residual)}});
                    text = j.dump(2) + "\n";
                } else {
                    std::ostringstream os;
                    for (const auto& o : obstructions)
                        os << o.triple << ": " << ring_element_str(o.residual) << "\n";
                    text = os.str();
                }
            } else {
                std::vector<std::pair<std::string, RingElement>> products;
                for (int i = 1; i <= rn; ++i)
                    for (int j = i; j <= rn; ++j)
                        products.emplace_back("x" + std::to_string(i) + "*x" + std::to_string(j),
                                              RingElement::x(pres, i) * RingElement::x(pres, j));
                for (int i = 1; i <= rn; ++i)
                    products.emplace_back("x" + std::to_string(i) + "*nu",
                                          RingElement::x(pres, i) * RingElement::nu(pres));
                products.emplace_back("nu*nu",
                                      RingElement::nu(pres) * RingElement::nu(pres));
                if (opt.format == "json") {
                    Json j;
                    j["n"] = rn;
                    j["mode"] = rmode;
                    j["products"] = Json::array();
                    for (const auto& [lhs, val] : products)
                        j["products"].push_back({{"lhs", lhs}, {"value", ring_element_to_json(val)}});
                    text = j.dump(2) + "\n";
                } else {
                    std::ostringstream os;
                    for (const auto& [lhs, val] : products)
                        os << lhs << " = " << ring_element_str(val) << "\n";
                    text = os.str();
                }
            }
            return emit(opt, text, out, err);
        }

        if (*rel_cmd) {
            if (rel_d < 1) {
                err << "error: --degree must be >= 1\n";
                return 2;
            }
            std::vector<RelationVector> rows;
            if (rel_source == "phi") {
                rows = phi_relation_kernel(rel_d);
            } else {
                if (rel_d < 2) {
                    err << "error: signature relations require degree >= 2\n";
                    return 2;
                }
                rows.push_back(signature_relation(rel_d));
            }
            std::string text;
            if (opt.format == "json") {
                Json j = Json::array();
                for (const auto& r : rows) j.push_back(relation_to_json(r));
                text = j.dump(2) + "\n";
            } else if (opt.format == "csv") {
                std::ostringstream os;
                for (const auto& r : rows) os << relation_to_csv_row(r) << "\n";
                text = os.str();
            } else {
                std::ostringstream os;
                for (const auto& r : rows) os << relation_text(r) << "\n";
                text = os.str();
            }
            return emit(opt, text, out, err);
        }

        if (*lgenus_cmd) {
            LPolyTwoVar l = l_polynomial(lk);
            std::string text;
            if (opt.format == "text")
                text = l.value.str() + "\n";
            else if (opt.format == "json")
                text = poly_to_json(l.value).dump(2) + "\n";
            else
                text = poly_csv(l.value);
            return emit(opt, text, out, err);
        }

        if (*verify_cmd) {
            std::vector<CheckResult> checks;
            if (!verify_id.empty()) {
                checks = run_check(verify_id, max_degree);
                if (checks.empty()) {
                    err << "error: unknown check id '" << verify_id << "'\n";
                    return 2;
                }
            } else {
                checks = run_all_checks(max_degree);
            }
            int failed = 0;
            for (const auto& c : checks)
                if (!c.passed) ++failed;
            std::string text;
            if (opt.format == "json") {
                Json j;
                j["checks"] = Json::array();
                for (const auto& c : checks)
                    j["checks"].push_back({{"id", c.id},
                                           {"criterion", c.criterion},
                                           {"status", c.passed ? "pass" : "fail"},
                                           {"detail", c.detail}});
                j["failed"] = failed;
                text = j.dump(2) + "\n";
            } else if (opt.format == "csv") {
                std::ostringstream os;
                for (const auto& c : checks)
                    os << c.id << "," << (c.passed ? "pass" : "fail") << "\n";
                text = os.str();
            } else {
                std::ostringstream os;
                for (const auto& c : checks) {
                    os << (c.passed ? "PASS " : "FAIL ") << c.id;
                    if (!c.passed && !c.detail.empty()) os << ": " << c.detail;
                    os << "\n";
                }
                os << (failed == 0 ? "all checks passed"
                                   : std::to_string(failed) + " check(s) failed")
                   << " (" << checks.size() << " run)\n";
                text = os.str();
            }
            int rc = emit(opt, text, out, err);
            if (rc != 0) return rc;
            return failed == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand given\n" << app.help();
    return 2;
}

}  // namespace tautring
