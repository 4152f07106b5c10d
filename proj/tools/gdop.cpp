/*
 * gdop.cpp
 * --------
 * Command-line surface: expansion, identity checking, dimensions, bases,
 * Koszul duals, white products, T-ideal membership, pre-images, and the
 * self-test suite. Every subcommand prints a JSON report to stdout (stable
 * ordering, exact rational values as strings) and exits 0 on
 * success/holds/member-as-expected, 1 on a verification failure, 2 on usage
 * errors.
 */
#include "gdop/acceptance.hpp"
#include "gdop/builtins.hpp"
#include "gdop/expansion.hpp"
#include "gdop/hurwitz.hpp"
#include "gdop/koszul.hpp"
#include "gdop/sgd.hpp"
#include "gdop/white.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::ordered_json;
using namespace gdop;

namespace {

int emit(const json& report, const std::string& json_path, int exit_code) {
    std::cout << report.dump(2) << "\n";
    if (!json_path.empty()) {
        std::ofstream out(json_path);
        out << report.dump(2) << "\n";
    }
    return exit_code;
}

DerivedTarget parse_target(const std::string& t) {
    if (t == "magma" || t.empty()) return DerivedTarget::Magma;
    if (t == "as") return DerivedTarget::Associative;
    // The prec/succ/mul images land in the bracket-free part of a free
    // differential Poisson algebra, which is the free ComDer: the two
    // targets coincide for this map.
    if (t == "com" || t == "pois") return DerivedTarget::Commutative;
    throw CLI::ValidationError("--target must be one of magma|as|com|pois");
}

OperadPresentation load_presentation(const std::string& spec) {
    for (const auto& n : builtin_presentation_names())
        if (n == spec) return builtin_presentation(spec);
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("no such presentation or file: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_presentation_json(ss.str());
}

json verdict_json(const Verdict& v) {
    json j;
    j["holds"] = v.holds;
    j["surviving_monomials"] = v.survivors;
    return j;
}

std::string rational_str(const Rational& r) { return to_string(r); }

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"computer algebra for Novikov/GD-type varieties, their duals and differential envelopes"};
    app.require_subcommand(1);
    app.fallthrough(); // let subcommands inherit --json

    std::string json_path;
    app.add_option("--json", json_path, "also write the JSON report to this path");

    // ---- expand ----
    auto* cmd_expand = app.add_subcommand("expand", "expand a term/polynomial into a free differential algebra");
    std::string ex_name, ex_poly, ex_map, ex_target;
    cmd_expand->add_option("--name", ex_name, "built-in identity name");
    cmd_expand->add_option("--poly", ex_poly, "polynomial text: coeff term [+ coeff term ...]");
    cmd_expand->add_option("--map", ex_map, "gd|gd-dual|derived|gen-derived|bicom-dual|gd-loose");
    cmd_expand->add_option("--target", ex_target, "derived target: magma|as|com");

    // ---- check ----
    auto* cmd_check = app.add_subcommand("check", "verify identities under an expansion map");
    std::string ck_name, ck_file, ck_map, ck_target;
    bool ck_list = false;
    cmd_check->add_option("--name", ck_name, "built-in identity name");
    cmd_check->add_option("--file", ck_file, "identity file, one polynomial per line");
    cmd_check->add_option("--map", ck_map, "expansion map (defaults to the identity's map)");
    cmd_check->add_option("--target", ck_target, "derived target: magma|as|com");
    cmd_check->add_flag("--list", ck_list, "list built-in identities");

    // ---- dim ----
    auto* cmd_dim = app.add_subcommand("dim", "weight-graded dimensions");
    std::string dim_operad = "sgd", dim_method = "both";
    int dim_n = 1;
    bool dim_upto = false;
    cmd_dim->add_option("--operad", dim_operad, "sgd|gd-dual|gd-dual-bicom");
    cmd_dim->add_option("--n", dim_n, "degree")->required();
    cmd_dim->add_option("--method", dim_method, "formula|enumerate|both");
    cmd_dim->add_flag("--upto", dim_upto, "report all degrees 1..n");

    // ---- basis ----
    auto* cmd_basis = app.add_subcommand("basis", "multilinear component or weight-monomial basis");
    std::string ba_pres, ba_operad;
    int ba_degree = 0, ba_n = 0;
    bool ba_matrices = false, ba_lines = false, ba_list = false;
    cmd_basis->add_option("--presentation", ba_pres, "built-in name or JSON file");
    cmd_basis->add_option("--degree", ba_degree, "component degree (2..4)");
    cmd_basis->add_option("--operad", ba_operad, "sgd|gd-dual|gd-dual-bicom weight basis");
    cmd_basis->add_option("--n", ba_n, "degree for --operad");
    cmd_basis->add_flag("--matrices", ba_matrices, "include the consequence matrix");
    cmd_basis->add_flag("--lines", ba_lines, "stream monomials as plain lines instead of JSON");
    cmd_basis->add_flag("--list", ba_list, "list built-in presentations");

    // ---- koszul-dual ----
    auto* cmd_dual = app.add_subcommand("koszul-dual", "degree-3 Koszul dual of a quadratic presentation");
    std::string du_pres;
    bool du_matrices = false;
    cmd_dual->add_option("--presentation", du_pres, "built-in name or JSON file")->required();
    cmd_dual->add_flag("--matrices", du_matrices, "include relation matrices");

    // ---- white ----
    auto* cmd_white = app.add_subcommand("white", "degree-3 Manin white product relations");
    std::string wh_case;
    bool wh_list = false;
    cmd_white->add_option("--case", wh_case, "lie-nov|as-nov|pois-gddual");
    cmd_white->add_flag("--list", wh_list, "list built-in white product cases");

    // ---- member ----
    auto* cmd_member = app.add_subcommand("member", "T-ideal membership with certificates");
    std::string me_candidate, me_pres, me_expect;
    std::vector<std::string> me_extra;
    int me_degree = 0;
    cmd_member->add_option("--candidate", me_candidate, "identity name or polynomial text")->required();
    cmd_member->add_option("--presentation", me_pres, "built-in name or JSON file")->required();
    cmd_member->add_option("--degree", me_degree, "candidate degree (<= 4)")->required();
    cmd_member->add_option("--extra", me_extra, "extra degree-n relations (identity names)");
    cmd_member->add_option("--expect", me_expect, "member|non-member (exit 1 on mismatch)");

    // ---- preimage ----
    auto* cmd_pre = app.add_subcommand("preimage", "GD pre-image of a weight -1 normal monomial");
    std::string pr_monomial;
    cmd_pre->add_option("--monomial", pr_monomial, "(pm factor*) s-expression")->required();

    // ---- selftest ----
    auto* cmd_self = app.add_subcommand("selftest", "run the acceptance suite");
    bool st_slow = false;
    cmd_self->add_flag("--slow", st_slow, "include the n = 6 enumeration agreement");

    CLI11_PARSE(app, argc, argv);

    json report;
    try {
        if (*cmd_expand) {
            std::string map = ex_map;
            Polynomial p;
            const Signature* src = nullptr;
            if (!ex_name.empty()) {
                const NamedIdentity& id = builtin_identity(ex_name);
                src = &source_signature(id.source);
                p = parse_identity(id);
                if (map.empty()) map = id.default_map;
                if (ex_target.empty()) ex_target = id.default_target;
            } else if (!ex_poly.empty()) {
                if (map.empty()) throw CLI::ValidationError("--map is required with --poly");
                src = &source_signature(map == "gd-loose" ? "gd" : map);
                p = parse_polynomial(ex_poly, *src);
            } else {
                throw CLI::ValidationError("expand needs --name or --poly");
            }
            Verdict v = verify_identity(p, *src, map, parse_target(ex_target));
            report["command"] = "expand";
            report["inputs"] = {{"name", ex_name}, {"poly", ex_poly}, {"map", map},
                                {"target", ex_target}};
            report["result"] = {{"zero", v.holds}, {"normal_form", v.survivors}};
            report["status"] = "ok";
            return emit(report, json_path, 0);
        }

        if (*cmd_check) {
            report["command"] = "check";
            if (ck_list) {
                json names = json::array();
                for (const auto& id : builtin_identities())
                    names.push_back({{"name", id.name},
                                     {"source", id.source},
                                     {"map", id.default_map},
                                     {"target", id.default_target}});
                report["result"] = {{"identities", names}};
                report["status"] = "ok";
                return emit(report, json_path, 0);
            }
            json rows = json::array();
            bool all_hold = true;
            auto run_one = [&](const std::string& label, const Polynomial& p, const Signature& src,
                               const std::string& map, const std::string& target) {
                Verdict v = verify_identity(p, src, map, parse_target(target));
                json r = {{"identity", label}, {"map", map}};
                if (!target.empty()) r["target"] = target;
                r["verdict"] = v.holds ? "holds" : "fails";
                if (!v.holds) r["surviving_monomials"] = v.survivors;
                rows.push_back(std::move(r));
                all_hold = all_hold && v.holds;
            };
            if (!ck_name.empty()) {
                const NamedIdentity& id = builtin_identity(ck_name);
                std::string map = ck_map.empty() ? id.default_map : ck_map;
                std::string target = ck_target.empty() ? id.default_target : ck_target;
                if (map.empty()) throw CLI::ValidationError("identity has no default map; pass --map");
                run_one(id.name, parse_identity(id), source_signature(id.source), map, target);
            } else if (!ck_file.empty()) {
                if (ck_map.empty()) throw CLI::ValidationError("--map is required with --file");
                const Signature& src = source_signature(ck_map == "gd-loose" ? "gd" : ck_map);
                std::ifstream in(ck_file);
                if (!in) throw std::invalid_argument("cannot open " + ck_file);
                std::string line;
                int lineno = 0;
                while (std::getline(in, line)) {
                    ++lineno;
                    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
                    run_one(ck_file + ":" + std::to_string(lineno), parse_polynomial(line, src),
                            src, ck_map, ck_target);
                }
            } else {
                throw CLI::ValidationError("check needs --name, --file, or --list");
            }
            report["inputs"] = {{"map", ck_map}, {"target", ck_target}};
            report["result"] = {{"checks", rows}};
            report["status"] = all_hold ? "ok" : "fail";
            return emit(report, json_path, all_hold ? 0 : 1);
        }

        if (*cmd_dim) {
            if (dim_method != "formula" && dim_method != "enumerate" && dim_method != "both")
                throw CLI::ValidationError("--method must be formula|enumerate|both");
            bool want_formula = dim_method != "enumerate";
            bool want_enum = dim_method != "formula";
            if (dim_operad != "sgd" && want_formula && dim_method != "both")
                throw CLI::ValidationError("formula is only available for --operad sgd");
            json rows = json::array();
            bool all_match = true;
            int lo = dim_upto ? 1 : dim_n;
            for (int n = lo; n <= dim_n; ++n) {
                json row;
                row["n"] = n;
                Integer formula = 0;
                long enumerated = -1;
                if (dim_operad == "sgd" && want_formula) row["formula"] = sgd_dim(n).get_str();
                if (want_enum) {
                    if (dim_operad == "sgd")
                        enumerated = static_cast<long>(enumerate_sgd_monomials(n).size());
                    else if (dim_operad == "gd-dual")
                        enumerated = static_cast<long>(enumerate_gd_dual_monomials(n).size());
                    else if (dim_operad == "gd-dual-bicom")
                        enumerated = static_cast<long>(enumerate_gd_dual_bicom_monomials(n).size());
                    else
                        throw CLI::ValidationError("--operad must be sgd|gd-dual|gd-dual-bicom");
                    row["enumeration"] = enumerated;
                }
                if (dim_operad == "sgd" && want_formula && want_enum) {
                    formula = sgd_dim(n);
                    bool match = (formula == enumerated);
                    row["match"] = match;
                    all_match = all_match && match;
                }
                rows.push_back(std::move(row));
            }
            report["command"] = "dim";
            report["inputs"] = {{"operad", dim_operad}, {"n", dim_n}, {"method", dim_method}};
            report["result"] = {{"rows", rows}};
            report["status"] = all_match ? "ok" : "fail";
            return emit(report, json_path, all_match ? 0 : 1);
        }

        if (*cmd_basis) {
            report["command"] = "basis";
            if (ba_list) {
                report["result"] = {{"presentations", builtin_presentation_names()}};
                report["status"] = "ok";
                return emit(report, json_path, 0);
            }
            if (!ba_operad.empty()) {
                if (ba_n < 1) throw CLI::ValidationError("--n is required with --operad");
                std::vector<std::string> lines;
                if (ba_operad == "sgd")
                    for (const auto& m : enumerate_sgd_monomials(ba_n))
                        lines.push_back(print_pois_monomial(m));
                else if (ba_operad == "gd-dual")
                    for (const auto& m : enumerate_gd_dual_monomials(ba_n))
                        lines.push_back(print_com_monomial(m));
                else if (ba_operad == "gd-dual-bicom")
                    for (const auto& m : enumerate_gd_dual_bicom_monomials(ba_n))
                        lines.push_back(print_bicom_monomial(m));
                else
                    throw CLI::ValidationError("--operad must be sgd|gd-dual|gd-dual-bicom");
                if (ba_lines) {
                    for (const auto& l : lines) std::cout << l << "\n";
                    return 0;
                }
                report["inputs"] = {{"operad", ba_operad}, {"n", ba_n}};
                report["result"] = {{"count", lines.size()}, {"monomials", lines}};
                report["status"] = "ok";
                return emit(report, json_path, 0);
            }
            if (ba_pres.empty() || ba_degree == 0)
                throw CLI::ValidationError("basis needs --presentation and --degree (or --operad/--n)");
            OperadPresentation pres = load_presentation(ba_pres);
            MultilinearComponent comp = component_basis(pres, ba_degree);
            std::vector<std::string> monomials;
            for (const auto& t : comp.monomials.basis) monomials.push_back(print_term(t, pres.sig));
            if (ba_lines) {
                for (const auto& l : monomials) std::cout << l << "\n";
                return 0;
            }
            report["inputs"] = {{"presentation", pres.name}, {"degree", ba_degree}};
            json result = {{"monomial_count", comp.monomials.size()},
                           {"consequence_dim", comp.consequences.dim()},
                           {"quotient_dim", comp.quotient_dim},
                           {"monomials", monomials}};
            if (ba_matrices) {
                json mat = json::array();
                for (const auto& row : comp.consequences.rows()) {
                    json r = json::array();
                    for (const auto& x : row) r.push_back(rational_str(x));
                    mat.push_back(std::move(r));
                }
                result["consequence_rref"] = mat;
            }
            report["result"] = std::move(result);
            report["status"] = "ok";
            return emit(report, json_path, 0);
        }

        if (*cmd_dual) {
            OperadPresentation pres = load_presentation(du_pres);
            DualDictionary dict = dual_dictionary_for(pres);
            KoszulDual dual = koszul_dual_degree3(pres, dict);
            report["command"] = "koszul-dual";
            report["inputs"] = {{"presentation", pres.name}};
            json ops = json::array();
            for (std::size_t i = 0; i < dict.dual_sig.op_count(); ++i)
                ops.push_back({{"name", dict.dual_sig.op(static_cast<int>(i)).name},
                               {"symmetry", to_string(dict.dual_sig.op(static_cast<int>(i)).sym)}});
            std::vector<std::string> rels;
            for (const auto& r : dual.dual_relations)
                rels.push_back(print_polynomial(r, dict.dual_sig));
            json result = {{"dim_U", dual.dim_U},
                           {"dim_U_perp", dual.dim_U_perp},
                           {"dual_ops", ops},
                           {"dual_relations", rels}};
            if (du_matrices && pres.name == "gd") {
                json mat = json::array();
                for (const auto& row : gd_relation_vectors(pres.sig)) {
                    json r = json::array();
                    for (int x : row) r.push_back(x);
                    mat.push_back(std::move(r));
                }
                result["relation_matrix"] = mat;
            }
            report["result"] = std::move(result);
            report["status"] = "ok";
            return emit(report, json_path, 0);
        }

        if (*cmd_white) {
            report["command"] = "white";
            if (wh_list) {
                report["result"] = {{"cases", builtin_white_names()}};
                report["status"] = "ok";
                return emit(report, json_path, 0);
            }
            if (wh_case.empty()) throw CLI::ValidationError("white needs --case");
            WhiteCase w = builtin_white(wh_case);
            WhiteProduct wp = white_product_degree3(w.P, w.Q, w.gens);
            std::vector<std::string> rels;
            for (const auto& r : wp.relations) rels.push_back(print_polynomial(r, wp.gen_sig));
            report["inputs"] = {{"case", wh_case}};
            report["result"] = {{"domain_dim", wp.domain_dim},
                                {"image_dim", wp.image_dim},
                                {"relation_count", rels.size()},
                                {"relations", rels}};
            report["status"] = "ok";
            return emit(report, json_path, 0);
        }

        if (*cmd_member) {
            OperadPresentation pres = load_presentation(me_pres);
            auto parse_candidate = [&](const std::string& spec) {
                for (const auto& id : builtin_identities())
                    if (id.name == spec) return parse_identity_with(id, pres.sig);
                return parse_polynomial(spec, pres.sig);
            };
            Polynomial candidate = parse_candidate(me_candidate);
            std::vector<Polynomial> extra;
            for (const auto& e : me_extra) extra.push_back(parse_candidate(e));
            MembershipResult res = tideal_membership(candidate, pres, extra, me_degree);
            report["command"] = "member";
            report["inputs"] = {{"candidate", me_candidate},
                                {"presentation", pres.name},
                                {"degree", me_degree},
                                {"extra", me_extra}};
            json result;
            result["member"] = res.member;
            result["certificate_ok"] = res.certificate_ok;
            if (res.member) {
                json combo = json::array();
                for (const auto& [desc, c] : res.combination)
                    combo.push_back({{"generator", desc}, {"coeff", rational_str(c)}});
                result["combination"] = combo;
            } else {
                json f = json::array();
                for (const auto& x : res.functional) f.push_back(rational_str(x));
                result["separating_functional"] = f;
                result["functional_dot_candidate"] = rational_str(res.functional_dot_candidate);
            }
            report["result"] = std::move(result);
            bool expect_ok = true;
            if (!me_expect.empty())
                expect_ok = (me_expect == "member") == res.member && res.certificate_ok;
            report["status"] = expect_ok ? "ok" : "fail";
            return emit(report, json_path, expect_ok ? 0 : 1);
        }

        if (*cmd_pre) {
            PoisMonomial a = parse_pois_monomial(pr_monomial);
            Polynomial f = gd_preimage(a);
            PoisPoly back = expand_gd(f, gd_term_signature());
            bool ok = back == PoisPoly::monomial(a);
            report["command"] = "preimage";
            report["inputs"] = {{"monomial", print_pois_monomial(a)}};
            report["result"] = {{"preimage", print_polynomial(f, gd_term_signature())},
                                {"roundtrip_ok", ok}};
            report["status"] = ok ? "ok" : "fail";
            return emit(report, json_path, ok ? 0 : 1);
        }

        if (*cmd_self) {
            auto results = run_acceptance(st_slow);
            bool all = true;
            json rows = json::array();
            for (const auto& r : results) {
                std::cerr << (r.pass ? "PASS" : "FAIL") << "  [" << r.number << "] " << r.name
                          << "  (" << r.seconds << " s)\n";
                if (!r.pass) std::cerr << "      " << r.detail << "\n";
                // No timings in the report: identical inputs must produce
                // byte-identical reports.
                rows.push_back({{"criterion", r.number},
                                {"name", r.name},
                                {"pass", r.pass},
                                {"detail", r.detail}});
                all = all && r.pass;
            }
            report["command"] = "selftest";
            report["inputs"] = {{"slow", st_slow}};
            report["result"] = {{"criteria", rows}};
            report["status"] = all ? "ok" : "fail";
            return emit(report, json_path, all ? 0 : 1);
        }
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
