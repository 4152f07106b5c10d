#include "gdop/builtins.hpp"

#include "gdop/expansion.hpp"

#include <json.hpp>

#include <stdexcept>

namespace gdop {

const std::vector<NamedIdentity>& builtin_identities() {
    static const std::vector<NamedIdentity> ids = {
        // GD axioms and special identities, operations circ / lie.
        {"lsymm",
         "1 (circ (circ x1 x2) x3) + -1 (circ x1 (circ x2 x3)) + -1 (circ (circ x2 x1) x3) + 1 "
         "(circ x2 (circ x1 x3))",
         "gd", "gd", ""},
        {"rcomm", "1 (circ (circ x1 x2) x3) + -1 (circ (circ x1 x3) x2)", "gd", "gd", ""},
        {"jacobi",
         "1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)", "gd", "gd",
         ""},
        {"gd1",
         "1 (lie x1 (circ x2 x3)) + -1 (lie x3 (circ x2 x1)) + 1 (circ (lie x2 x1) x3) + -1 "
         "(circ (lie x2 x3) x1) + -1 (circ x2 (lie x1 x3))",
         "gd", "gd", ""},
        {"s-ident",
         "1 (circ (lie x1 (circ x3 x2)) x4) + 1 (circ (circ (lie x3 x1) x2) x4) + -1 (lie x1 "
         "(circ (circ x3 x4) x2)) + -1 (circ (lie (circ x3 x4) x1) x2)",
         "gd", "gd", ""},
        {"s-ident2",
         "2 (lie x4 (circ (circ x3 x2) x1)) + -1 (lie (circ x4 x1) (circ x3 x2)) + -1 (lie (circ "
         "x4 x2) (circ x3 x1)) + -1 (circ (lie x4 (circ x3 x2)) x1) + -1 (circ (lie x4 (circ x3 "
         "x1)) x2) + -1 (circ (lie x3 (circ x4 x1)) x2) + -1 (circ (lie x3 (circ x4 x2)) x1)",
         "gd", "gd", ""},
        {"s2-nilp",
         "1 (lie (circ x1 x2) (circ x3 x4)) + 1 (lie (circ x1 x4) (circ x3 x2))", "gd", "", ""},
        {"s2-nilp2", "1 (circ x1 (lie (circ x2 x3) x4))", "gd", "", ""},

        // GD-dual identities, operations ast / star.
        {"np1", "1 (ast x1 x2) + -1 (ast x2 x1)", "gd-dual", "gd-dual", ""},
        {"np2", "1 (ast x1 (ast x2 x3)) + -1 (ast (ast x1 x2) x3)", "gd-dual", "gd-dual", ""},
        {"np3",
         "1 (star (star x1 x2) x3) + -1 (star x1 (star x2 x3)) + -1 (star (star x1 x3) x2) + 1 "
         "(star x1 (star x3 x2))",
         "gd-dual", "gd-dual", ""},
        {"np4", "1 (star x1 (star x2 x3)) + -1 (star x2 (star x1 x3))", "gd-dual", "gd-dual", ""},
        {"np5", "1 (star x1 (ast x2 x3)) + -1 (ast (star x1 x2) x3)", "gd-dual", "gd-dual", ""},
        {"np6",
         "1 (star x1 (ast x2 x3)) + 1 (star x2 (ast x1 x3)) + -1 (star (ast x1 x2) x3)",
         "gd-dual", "gd-dual", ""},

        // Derived identities of associative algebras, operations prec / succ.
        {"l-alg",
         "1 (prec (succ x1 x2) x3) + -1 (succ x1 (prec x2 x3))", "derived", "derived", "as"},
        {"lod-der",
         "1 (prec (prec x1 x2) x3) + -1 (prec x1 (succ x2 x3)) + 1 (succ (prec x1 x2) x3) + -1 "
         "(succ x1 (succ x2 x3))",
         "derived", "derived", "as"},

        // Pois o GD-dual identities, operations ast / circ / lie / succ,
        // x -> x1, y -> x2, z -> x3.
        {"pgd1",
         "1 (lie (succ x1 x3) x2) + -1 (lie (succ x3 x1) x2) + -1 (succ (lie x1 x3) x2)",
         "gen-derived", "gen-derived", ""},
        {"pgd2",
         "1 (lie (succ x2 x1) x3) + -1 (lie (succ x2 x3) x1) + -1 (succ x2 (lie x1 x3))",
         "gen-derived", "gen-derived", ""},
        {"pgd21",
         "1 (circ (ast x1 x2) x3) + -1 (ast x1 (circ x2 x3))", "gen-derived", "gen-derived", ""},
        {"pgd22",
         "1 (circ x1 (ast x2 x3)) + -1 (circ (ast x3 x1) x2) + -1 (circ (ast x2 x1) x3)",
         "gen-derived", "gen-derived", ""},
        {"pgd3",
         "1 (succ (ast x1 x3) x2) + -1 (lie (circ x1 x3) x2) + -1 (lie (circ x3 x1) x2)",
         "gen-derived", "gen-derived", ""},
        {"pgd4",
         "1 (circ (lie x1 x3) x2) + -1 (ast (succ x2 x1) x3) + 1 (lie (circ x3 x2) x1)",
         "gen-derived", "gen-derived", ""},
        {"pgd5",
         "1 (circ x2 (lie x1 x3)) + -1 (ast (succ x1 x3) x2) + 1 (ast (succ x3 x1) x2)",
         "gen-derived", "gen-derived", ""},
        {"pgd6",
         "1 (succ x2 (ast x1 x3)) + -1 (lie (circ x1 x2) x3) + -1 (lie (circ x3 x2) x1)",
         "gen-derived", "gen-derived", ""},
        {"pgd7",
         "1 (circ (succ x2 x3) x1) + 1 (circ (succ x1 x3) x2) + -1 (succ x1 (circ x3 x2)) + -1 "
         "(succ x2 (circ x3 x1))",
         "gen-derived", "gen-derived", ""},
        {"pgd8",
         "1 (succ (circ x2 x3) x1) + 1 (succ (circ x1 x3) x2) + -1 (circ x1 (succ x3 x2)) + -1 "
         "(circ (succ x3 x2) x1) + -1 (succ x1 (circ x2 x3)) + -1 (circ x2 (succ x3 x1)) + -1 "
         "(circ (succ x3 x1) x2) + -1 (succ x2 (circ x1 x3))",
         "gen-derived", "gen-derived", ""},
    };
    return ids;
}

const NamedIdentity& builtin_identity(const std::string& name) {
    for (const auto& id : builtin_identities())
        if (id.name == name) return id;
    throw std::invalid_argument("unknown identity: " + name);
}

const Signature& source_signature(const std::string& source) {
    if (source == "gd") return gd_source_signature();
    if (source == "gd-dual") return gd_dual_source_signature();
    if (source == "derived") return derived_source_signature();
    if (source == "gen-derived") return gen_derived_source_signature();
    throw std::invalid_argument("unknown source signature: " + source);
}

Polynomial parse_identity(const NamedIdentity& id) {
    return parse_polynomial(id.text, source_signature(id.source));
}

Polynomial parse_identity_with(const NamedIdentity& id, const Signature& sig) {
    return parse_polynomial(id.text, sig);
}

// ---- presentations ----

namespace {

OperadPresentation make_presentation(std::string name, Signature sig,
                                     std::vector<std::pair<std::string, std::string>> rels) {
    OperadPresentation p;
    p.name = std::move(name);
    p.sig = std::move(sig);
    for (auto& [rname, text] : rels) {
        p.relation_names.push_back(rname);
        p.relations.push_back(parse_polynomial(text, p.sig));
    }
    p.validate();
    return p;
}

} // namespace

const std::vector<std::string>& builtin_presentation_names() {
    static const std::vector<std::string> names = {"lie",  "com",   "as",    "nov",     "rnov",
                                                   "pois", "gd",    "gd-dual", "bicom", "gd-3nilp"};
    return names;
}

OperadPresentation builtin_presentation(const std::string& name) {
    if (name == "lie")
        return make_presentation(
            name, Signature({{"lie", Symmetry::Antisymmetric}}, false),
            {{"jacobi",
              "1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)"}});
    if (name == "com")
        return make_presentation(name, Signature({{"mul", Symmetry::Symmetric}}, false),
                                 {{"assoc", "1 (mul (mul x1 x2) x3) + -1 (mul x1 (mul x2 x3))"}});
    if (name == "as")
        return make_presentation(name, Signature({{"mul", Symmetry::None}}, false),
                                 {{"assoc", "1 (mul (mul x1 x2) x3) + -1 (mul x1 (mul x2 x3))"}});
    if (name == "nov")
        return make_presentation(
            name, Signature({{"circ", Symmetry::None}}, false),
            {{"lsymm",
              "1 (circ (circ x1 x2) x3) + -1 (circ x1 (circ x2 x3)) + -1 (circ (circ x2 x1) x3) "
              "+ 1 (circ x2 (circ x1 x3))"},
             {"rcomm", "1 (circ (circ x1 x2) x3) + -1 (circ (circ x1 x3) x2)"}});
    if (name == "rnov")
        return make_presentation(
            name, Signature({{"star", Symmetry::None}}, false),
            {{"rsymm",
              "1 (star (star x1 x2) x3) + -1 (star x1 (star x2 x3)) + -1 (star (star x1 x3) x2) "
              "+ 1 (star x1 (star x3 x2))"},
             {"lcomm", "1 (star x1 (star x2 x3)) + -1 (star x2 (star x1 x3))"}});
    if (name == "pois")
        return make_presentation(
            name,
            Signature({{"mul", Symmetry::Symmetric}, {"lie", Symmetry::Antisymmetric}}, false),
            {{"assoc", "1 (mul (mul x1 x2) x3) + -1 (mul x1 (mul x2 x3))"},
             {"jacobi",
              "1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)"},
             {"leibniz",
              "1 (lie x1 (mul x2 x3)) + -1 (mul (lie x1 x2) x3) + -1 (mul x2 (lie x1 x3))"}});
    if (name == "gd")
        return make_presentation(
            name,
            Signature({{"circ", Symmetry::None}, {"lie", Symmetry::Antisymmetric}}, false),
            {{"jacobi",
              "1 (lie (lie x1 x2) x3) + 1 (lie (lie x2 x3) x1) + 1 (lie (lie x3 x1) x2)"},
             {"lsymm",
              "1 (circ (circ x1 x2) x3) + -1 (circ x1 (circ x2 x3)) + -1 (circ (circ x2 x1) x3) "
              "+ 1 (circ x2 (circ x1 x3))"},
             {"rcomm", "1 (circ (circ x1 x2) x3) + -1 (circ (circ x1 x3) x2)"},
             {"gd1",
              "1 (lie x1 (circ x2 x3)) + -1 (lie x3 (circ x2 x1)) + 1 (circ (lie x2 x1) x3) + -1 "
              "(circ (lie x2 x3) x1) + -1 (circ x2 (lie x1 x3))"}});
    if (name == "gd-dual")
        return make_presentation(
            name, Signature({{"ast", Symmetry::Symmetric}, {"star", Symmetry::None}}, false),
            {{"assoc", "1 (ast (ast x1 x2) x3) + -1 (ast x1 (ast x2 x3))"},
             {"rsymm",
              "1 (star (star x1 x2) x3) + -1 (star x1 (star x2 x3)) + -1 (star (star x1 x3) x2) "
              "+ 1 (star x1 (star x3 x2))"},
             {"lcomm", "1 (star x1 (star x2 x3)) + -1 (star x2 (star x1 x3))"},
             {"link1", "1 (star x1 (ast x2 x3)) + -1 (ast (star x1 x2) x3)"},
             {"link2",
              "1 (star x1 (ast x2 x3)) + 1 (star x2 (ast x1 x3)) + -1 (star (ast x1 x2) x3)"}});
    if (name == "bicom")
        return make_presentation(
            name, Signature({{"ast", Symmetry::Symmetric}, {"odot", Symmetry::Symmetric}}, false),
            {{"assoc-ast", "1 (ast (ast x1 x2) x3) + -1 (ast x1 (ast x2 x3))"},
             {"assoc-odot", "1 (odot (odot x1 x2) x3) + -1 (odot x1 (odot x2 x3))"},
             {"link", "1 (ast (odot x1 x2) x3) + -1 (odot x1 (ast x2 x3))"}});
    if (name == "gd-3nilp")
        return make_presentation(
            name,
            Signature({{"circ", Symmetry::None}, {"lie", Symmetry::Antisymmetric}}, false),
            {{"nilp-r", "1 (circ x1 (circ x2 x3))"},
             {"nilp-l", "1 (circ (circ x1 x2) x3)"},
             {"nilp-bc", "1 (circ (lie x1 x2) x3)"},
             {"gd1-nilp",
              "1 (lie x1 (circ x2 x3)) + -1 (lie x3 (circ x2 x1)) + -1 (circ x2 (lie x1 x3))"},
             {"nilp-bb", "1 (lie x1 (lie x2 x3))"}});
    throw std::invalid_argument("unknown presentation: " + name);
}

OperadPresentation load_presentation_json(const std::string& json_text) {
    nlohmann::json j = nlohmann::json::parse(json_text);
    std::vector<OpDef> ops;
    for (const auto& o : j.at("ops"))
        ops.push_back({o.at("name").get<std::string>(),
                       symmetry_from_string(o.value("symmetry", std::string("none")))});
    OperadPresentation p;
    p.name = j.value("name", std::string("custom"));
    p.sig = Signature(ops, false);
    int counter = 0;
    for (const auto& r : j.at("relations")) {
        Polynomial rel = parse_polynomial(r.get<std::string>(), p.sig);
        if (rel.is_zero()) continue; // a folded symmetry identification
        int deg = multilinear_degree(rel);
        if (deg == 2) {
            // Degree-2 relations may only encode symmetry identifications;
            // under a correctly flagged signature they normalize to zero.
            if (!rel.is_zero())
                throw std::invalid_argument(
                    "degree-2 relation is not a symmetry identification: " +
                    r.get<std::string>());
            continue;
        }
        p.relation_names.push_back("r" + std::to_string(counter++));
        p.relations.push_back(std::move(rel));
    }
    p.validate();
    return p;
}

// ---- white product cases ----

const std::vector<std::string>& builtin_white_names() {
    static const std::vector<std::string> names = {"lie-nov", "as-nov", "pois-gddual"};
    return names;
}

WhiteCase builtin_white(const std::string& name) {
    WhiteCase w;
    w.name = name;
    if (name == "lie-nov") {
        w.P = builtin_presentation("lie");
        w.Q = builtin_presentation("nov");
        w.gens = {{"prec", Symmetry::None, parse_polynomial("1 (lie x1 x2)", w.P.sig),
                   parse_polynomial("1 (circ x1 x2)", w.Q.sig)}};
        return w;
    }
    if (name == "as-nov") {
        w.P = builtin_presentation("as");
        w.Q = builtin_presentation("nov");
        w.gens = {{"prec", Symmetry::None, parse_polynomial("1 (mul x1 x2)", w.P.sig),
                   parse_polynomial("1 (circ x1 x2)", w.Q.sig)},
                  {"succ", Symmetry::None, parse_polynomial("1 (mul x1 x2)", w.P.sig),
                   parse_polynomial("1 (circ x2 x1)", w.Q.sig)}};
        return w;
    }
    if (name == "pois-gddual") {
        w.P = builtin_presentation("pois");
        w.Q = builtin_presentation("gd-dual");
        w.gens = {{"ast", Symmetry::Symmetric, parse_polynomial("1 (mul x1 x2)", w.P.sig),
                   parse_polynomial("1 (ast x1 x2)", w.Q.sig)},
                  {"circ", Symmetry::None, parse_polynomial("1 (mul x1 x2)", w.P.sig),
                   parse_polynomial("1 (star x2 x1)", w.Q.sig)},
                  {"lie", Symmetry::Antisymmetric, parse_polynomial("1 (lie x1 x2)", w.P.sig),
                   parse_polynomial("1 (ast x1 x2)", w.Q.sig)},
                  {"succ", Symmetry::None, parse_polynomial("1 (lie x1 x2)", w.P.sig),
                   parse_polynomial("1 (star x1 x2)", w.Q.sig)}};
        return w;
    }
    throw std::invalid_argument("unknown white product case: " + name);
}

// ---- dual dictionaries ----

DualDictionary dual_dictionary_for(const OperadPresentation& pres) {
    std::vector<Term> e = multilinear_monomials(pres.sig, 2);
    DualDictionary d;

    auto match = [&](const char* text) {
        Term t = parse_term(text, pres.sig);
        auto [key, sign] = canonicalize(t, pres.sig);
        (void)sign;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] == key) return i;
        throw std::logic_error("degree-2 monomial not found");
    };

    if (pres.name == "gd") {
        d.dual_sig = Signature({{"ast", Symmetry::Symmetric}, {"star", Symmetry::None}}, false);
        d.dict.resize(3);
        d.dict[match("(circ x1 x2)")] = parse_polynomial("1 (star x1 x2)", d.dual_sig);
        d.dict[match("(circ x2 x1)")] = parse_polynomial("-1 (star x2 x1)", d.dual_sig);
        d.dict[match("(lie x1 x2)")] = parse_polynomial("1 (ast x1 x2)", d.dual_sig);
        return d;
    }
    if (pres.name == "lie") {
        d.dual_sig = Signature({{"mul", Symmetry::Symmetric}}, false);
        d.dict = {parse_polynomial("1 (mul x1 x2)", d.dual_sig)};
        return d;
    }
    if (pres.name == "com") {
        d.dual_sig = Signature({{"lie", Symmetry::Antisymmetric}}, false);
        d.dict = {parse_polynomial("1 (lie x1 x2)", d.dual_sig)};
        return d;
    }
    if (pres.name == "as") {
        d.dual_sig = Signature({{"mul", Symmetry::None}}, false);
        d.dict.resize(2);
        d.dict[match("(mul x1 x2)")] = parse_polynomial("1 (mul x1 x2)", d.dual_sig);
        d.dict[match("(mul x2 x1)")] = parse_polynomial("-1 (mul x2 x1)", d.dual_sig);
        return d;
    }

    // Synthesize: the degree-2 action is a signed permutation; fixed points
    // give symmetric/antisymmetric dual operations, 2-cycles plain ones.
    std::vector<Vec> A = degree2_action(pres.sig, e);
    std::size_t m = e.size();
    // B = -A^T is the dual action.
    std::vector<std::vector<Rational>> B(m, std::vector<Rational>(m));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) B[i][j] = -A[j][i];

    std::vector<OpDef> ops;
    std::vector<int> op_of(m, -1), role(m, 0); // role 0: op(x1,x2), 1: op(x2,x1) partner
    std::vector<Rational> partner_sign(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
        if (op_of[i] >= 0) continue;
        std::size_t j = m;
        Rational b;
        for (std::size_t k = 0; k < m; ++k)
            if (B[i][k] != 0) {
                j = k;
                b = B[i][k];
            }
        if (j == i) {
            ops.push_back({"w" + std::to_string(ops.size()),
                           b == 1 ? Symmetry::Symmetric : Symmetry::Antisymmetric});
            op_of[i] = static_cast<int>(ops.size() - 1);
        } else {
            ops.push_back({"w" + std::to_string(ops.size()), Symmetry::None});
            op_of[i] = op_of[j] = static_cast<int>(ops.size() - 1);
            role[j] = 1;
            partner_sign[j] = b;
        }
    }
    d.dual_sig = Signature(ops, false);
    d.dict.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        Term t = role[i] == 0
                     ? Term::app(op_of[i], Term::var(1), Term::var(2))
                     : Term::app(op_of[i], Term::var(2), Term::var(1));
        d.dict[i] = term_poly(t, d.dual_sig, role[i] == 0 ? Rational(1) : partner_sign[i]);
    }
    return d;
}

} // namespace gdop
