#include "qse/verify.hpp"

#include "json.hpp"

namespace qse {

bool Report::all_passed() const {
    for (const auto& c : checks)
        if (!c.passed) return false;
    return true;
}

Report& Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    return *this;
}

std::string to_json_string(const Report& r, int indent) {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = r.suite;
    j["passed"] = r.all_passed();
    j["checks"] = nlohmann::json::array();
    for (const auto& c : r.checks) {
        nlohmann::json jc;
        jc["model"] = to_string(c.model);
        jc["check_kind"] = c.check_kind;
        jc["subject"] = c.subject;
        jc["status"] = c.passed ? "pass" : "fail";
        jc["residual_rendering"] = c.residual;
        jc["a_binding"] = c.a_binding ? c.a_binding->str() : "symbolic";
        j["checks"].push_back(std::move(jc));
    }
    return j.dump(indent);
}

namespace {

using GN = GeneratorName;
using ET = ExprTree;

CheckResult make_check(const Model& m, std::string kind, std::string subject, const OpElement& residual) {
    CheckResult c;
    c.model = m.table.model;
    c.check_kind = std::move(kind);
    c.subject = std::move(subject);
    c.passed = residual.is_zero();
    c.residual = residual.str();
    c.a_binding = m.table.a_binding;
    return c;
}

std::string bracket_subject(GN a, GN b) {
    return "[" + to_string(a) + "," + to_string(b) + "]";
}

} // namespace

Report verify_relations(const Model& m) {
    Report rep;
    rep.suite = "relations";
    for (const auto& e : m.relations) {
        OpElement lhs = commutator(m.table.image(e.lhs), m.table.image(e.rhs));
        OpElement rhs = realize(m.table, e.expected, 1);
        rep.checks.push_back(make_check(m, "relation", bracket_subject(e.lhs, e.rhs), lhs - rhs));
    }
    return rep;
}

Report verify_centrality(const Model& m) {
    Report rep;
    rep.suite = "centrality";
    OpElement cas = build_casimir(m.table);
    for (GN g : {GN::K, GN::H, GN::P, GN::M}) {
        OpElement res = commutator(cas, m.table.image(g));
        rep.checks.push_back(make_check(m, "centrality", "[E," + to_string(g) + "]", res));
    }
    return rep;
}

std::optional<Rational> find_vanishing_a(const OpElement& e) {
    if (e.is_zero()) return std::nullopt;
    ParamBindings b0, b1, b2;
    b0.a = Rational(0);
    b1.a = Rational(1);
    b2.a = Rational(2);
    OpElement r0 = e.eval(b0);
    OpElement r1 = e.eval(b1) - r0;
    if (!(e.eval(b2) == r0 + Coefficient(2) * r1)) return std::nullopt;  // not linear in a
    if (r1.is_zero()) return std::nullopt;
    // candidate root from the first monomial of the linear part
    const auto& [mono, c1] = *r1.terms().begin();
    auto it = r0.terms().find(mono);
    Coefficient c0 = it == r0.terms().end() ? Coefficient() : it->second;
    if (c1.term_count() != 1) return std::nullopt;
    const auto& [pm1, v1] = *c1.terms().begin();
    Rational v0(0);
    auto pit = c0.terms().find(pm1);
    if (pit != c0.terms().end()) v0 = pit->second;
    Rational root = -v0 / v1;
    ParamBindings br;
    br.a = root;
    if (e.eval(br).is_zero()) return root;
    return std::nullopt;
}

SymmetryCertificate symmetry_factorization(const Model& m, GeneratorName g, const OpElement& lambda,
                                           const std::optional<OpElement>& expected_remainder) {
    OpElement cas = build_casimir(m.table);
    SymmetryCertificate cert;
    cert.generator = g;
    cert.lambda = lambda;
    cert.remainder = commutator(cas, m.table.image(g)) - lambda * cas;
    if (expected_remainder && !(cert.remainder == *expected_remainder))
        throw FactorizationMismatch("remainder for " + to_string(g) + " is " + cert.remainder.str()
                                    + ", expected " + expected_remainder->str());
    cert.vanishing_a = find_vanishing_a(cert.remainder);
    return cert;
}

OpElement symmetry_lambda(const Model& m, GeneratorName g) {
    using EL = OpElement;
    const Coefficient z1 = Coefficient::z(1);
    const Coefficient mc = Coefficient::m();
    if (g == GN::D) return EL::scalar(Coefficient(2));
    if (g != GN::C) throw Error("no closed-form factorization stored for " + to_string(g));
    switch (m.table.model) {
        case ModelKind::Classical:
            return Coefficient(2) * EL::t();
        case ModelKind::Space:
            // t(Sx^-1 + 1) - z m x Sx
            return EL::t() * (EL::sx(-1) + EL::identity()) - z1 * mc * (EL::x() * EL::sx(1));
        case ModelKind::Time:
            // 2t + z(1 - m) - 2z x dx
            return Coefficient(2) * EL::t() + (z1 - z1 * mc) * EL::identity()
                 - Coefficient(2) * z1 * (EL::x() * EL::dx());
    }
    throw Error("unknown model");
}

namespace {

// remainder of the stored C-factorization at the model's a-binding
OpElement expected_c_remainder(const Model& m) {
    using EL = OpElement;
    const Coefficient mc = Coefficient::m();
    const Coefficient one_plus_2a = Coefficient(1) + Coefficient(2) * Coefficient::a();
    ParamBindings b;
    b.a = m.table.a_binding;
    OpElement rem(1);
    switch (m.table.model) {
        case ModelKind::Classical:
        case ModelKind::Space:
            rem = EL::scalar(mc * one_plus_2a);
            break;
        case ModelKind::Time:
            // (1 + 2a)(z dx^2 + m Et^-2)
            rem = (Coefficient::z(1) * one_plus_2a) * (EL::dx() * EL::dx())
                + (mc * one_plus_2a) * EL::tshift(-2);
            break;
    }
    return rem.eval(b);
}

} // namespace

Report verify_symmetries(const Model& m) {
    Report rep;
    rep.suite = "symmetry";
    auto add_cert = [&](GN g, const OpElement& lambda, const OpElement& expected, const std::string& subject) {
        CheckResult c;
        c.model = m.table.model;
        c.check_kind = "symmetry";
        c.subject = subject;
        c.a_binding = m.table.a_binding;
        try {
            SymmetryCertificate cert = symmetry_factorization(m, g, lambda, expected);
            c.passed = true;
            c.residual = "0";
            if (cert.vanishing_a)
                c.subject += " (remainder vanishes at a=" + cert.vanishing_a->str() + ")";
            else if (!cert.remainder.is_zero())
                c.subject += " (remainder " + cert.remainder.str() + ")";
        } catch (const FactorizationMismatch& err) {
            c.passed = false;
            c.residual = err.what();
        }
        rep.checks.push_back(std::move(c));
    };

    add_cert(GN::D, symmetry_lambda(m, GN::D), OpElement::zero(), "D");
    add_cert(GN::C, symmetry_lambda(m, GN::C), expected_c_remainder(m), "C");

    if (m.table.model == ModelKind::Time && !m.table.a_binding) {
        // factorized form with the symmetric-ordering lambda valid for every a:
        // [E,C] = 2(t + 2z - z x dx) E - z(m + 2 - 2a) dx^2 + m(1 + 2a Et^-2) + m(m+2)(1 - Et^-2)
        using EL = OpElement;
        const Coefficient z1 = Coefficient::z(1);
        const Coefficient mc = Coefficient::m();
        const Coefficient ac = Coefficient::a();
        OpElement lambda = Coefficient(2) * EL::t() + Coefficient(4) * z1 * EL::identity()
                         - Coefficient(2) * z1 * (EL::x() * EL::dx());
        OpElement rem = (-(z1 * (mc + Coefficient(2) - Coefficient(2) * ac))) * (EL::dx() * EL::dx())
                      + mc * EL::identity() + (Coefficient(2) * ac * mc) * EL::tshift(-2)
                      + (mc * (mc + Coefficient(2))) * (EL::identity() - EL::tshift(-2));
        add_cert(GN::C, lambda, rem, "C (general-a factorized form)");
    }
    return rep;
}

bool verify_abstract_bracket(const Model& m, const ExprTree& lhs, const ExprTree& rhs) {
    return realize(m.table, lhs, 1) == realize(m.table, rhs, 1);
}

Report verify_abstract_identities(const Model& m) {
    Report rep;
    rep.suite = "abstract";
    auto g = [](GN n) { return ET::gen(n); };
    auto s = [](const Coefficient& c) { return ET::scalar(c); };
    const Coefficient z1 = Coefficient::z(1);
    const Coefficient half{Rational(1, 2)};
    const ET E = casimir_tree(m.table.model);

    auto add = [&](const std::string& subject, const ExprTree& lhs, const ExprTree& rhs) {
        OpElement res = realize(m.table, lhs, 1) - realize(m.table, rhs, 1);
        rep.checks.push_back(make_check(m, "abstract", subject, res));
    };

    add("[E,D] = 2E", ET::bracket(E, g(GN::D)), s(Coefficient(2)) * E);

    switch (m.table.model) {
        case ModelKind::Classical: {
            ET rhs = s(Coefficient(-1))
                   * (g(GN::K) * g(GN::P) + g(GN::P) * g(GN::K)
                      + s(Coefficient(2)) * g(GN::M) * g(GN::D));
            add("[E,C] = -(KP+PK+2MD)", ET::bracket(E, g(GN::C)), rhs);
            if (m.table.a_binding && *m.table.a_binding == Rational(-1, 2)) {
                ET two_t = ET::op(Coefficient(2) * OpElement::t());
                add("[E,C] = 2tE", ET::bracket(E, g(GN::C)), two_t * E);
            }
            break;
        }
        case ModelKind::Space: {
            auto e = [](int steps) { return ET::exp_token(GN::P, steps); };
            ET rhs = s(Coefficient(0) - Coefficient::z(-1)) * g(GN::K) * (s(Coefficient(1)) - e(-2))
                   + g(GN::M)
                   - s(Coefficient(2)) * g(GN::M) * g(GN::D)
                   - s(Coefficient(2) * z1) * g(GN::M) * g(GN::K) * g(GN::H);
            add("[E,C] = -K(1-exp(-2zP))/z + M - 2MD - 2zMKH", ET::bracket(E, g(GN::C)), rhs);
            break;
        }
        case ModelKind::Time: {
            auto e = [](int steps) { return ET::exp_token(GN::H, steps); };
            ET one = s(Coefficient(1));
            ET rhs = s(Coefficient(-1))
                       * (g(GN::K) * g(GN::P) + g(GN::P) * g(GN::K)
                          + s(Coefficient(2)) * g(GN::M) * g(GN::D) * e(-2))
                   + g(GN::M) * (g(GN::M) + s(Coefficient(2))) * (one - e(-2))
                   - s(half * z1)
                       * (g(GN::D) * g(GN::P) * g(GN::P)
                          + s(Coefficient(2)) * g(GN::P) * g(GN::D) * g(GN::P)
                          + g(GN::P) * g(GN::P) * g(GN::D)
                          + s(Coefficient(2)) * g(GN::P) * g(GN::P) * g(GN::M));
            add("[E,C] = -(KP+PK+2MD exp(-2zH)) + M(M+2)(1-exp(-2zH)) - z(DP^2+2PDP+P^2D+2P^2M)/2",
                ET::bracket(E, g(GN::C)), rhs);
            break;
        }
    }
    return rep;
}

Report verify_coproduct_homomorphism(const Model& m) {
    Report rep;
    rep.suite = "hopf";
    if (m.coproducts.empty()) return rep;

    LeafResolver expected_resolver;
    expected_resolver.copies = 2;
    expected_resolver.gen = [&m](GN gname, int slot) {
        if (slot != 0) throw IndexOutOfRange("bracket expectation leaves must be unslotted");
        return realize_coproduct(m, gname);
    };
    expected_resolver.exp = [&m](GN gname, int steps, int slot) {
        auto res = realization_resolver(m.table, 2);
        return res.exp(gname, steps, 1) * res.exp(gname, steps, 2);
    };

    std::map<GN, OpElement> delta;
    for (GN gname : {GN::H, GN::P, GN::K, GN::D, GN::C, GN::M})
        delta.emplace(gname, realize_coproduct(m, gname));

    for (const auto& e : m.relations) {
        OpElement lhs = commutator(delta.at(e.lhs), delta.at(e.rhs));
        OpElement rhs = eval_expr(e.expected, expected_resolver);
        rep.checks.push_back(make_check(m, "hopf", "Delta" + bracket_subject(e.lhs, e.rhs), lhs - rhs));
    }
    return rep;
}

Report verify_coassociativity(const Model& m) {
    Report rep;
    rep.suite = "coassoc";
    if (m.coproducts.empty()) return rep;
    for (GN gname : kGenerators) {
        const ET& ct = m.coproducts.at(gname);
        ET left = coproduct_leg(ct, m.coproducts, true);
        ET right = coproduct_leg(ct, m.coproducts, false);
        OpElement res = realize(m.table, left, 3) - realize(m.table, right, 3);
        rep.checks.push_back(make_check(m, "coassociativity", "Delta(" + to_string(gname) + ")", res));
    }
    return rep;
}

Report verify_series_consistency(const Model& m, int order) {
    Report rep;
    rep.suite = "series";
    for (const auto& e : m.relations) {
        bool ok = series_consistency_check(m.table.image(e.lhs), m.table.image(e.rhs), order);
        CheckResult c;
        c.model = m.table.model;
        c.check_kind = "series";
        c.subject = bracket_subject(e.lhs, e.rhs) + " @ order " + std::to_string(order);
        c.passed = ok;
        c.residual = ok ? "0" : "series/shift disagreement";
        c.a_binding = m.table.a_binding;
        rep.checks.push_back(std::move(c));
    }
    return rep;
}

Report verify_classical_limits(const Model& m) {
    Report rep;
    rep.suite = "classical-limit";
    if (m.table.model == ModelKind::Classical) return rep;
    Model cl = build_model(ModelKind::Classical, m.table.a_binding);

    for (GN gname : {GN::H, GN::P, GN::K, GN::D, GN::C, GN::M, GN::Dprime}) {
        OpElement lim = series_classical_limit(m.table.image(gname));
        rep.checks.push_back(make_check(m, "classical-limit", to_string(gname),
                                        lim - cl.table.image(gname)));
    }
    for (const auto& e : m.relations) {
        OpElement lim = series_classical_limit(commutator(m.table.image(e.lhs), m.table.image(e.rhs)));
        OpElement cl_val = commutator(cl.table.image(e.lhs), cl.table.image(e.rhs));
        rep.checks.push_back(make_check(m, "classical-limit", bracket_subject(e.lhs, e.rhs), lim - cl_val));
    }
    rep.checks.push_back(make_check(m, "classical-limit", "E",
                                    series_classical_limit(build_casimir(m.table)) - build_casimir(cl.table)));
    return rep;
}

std::optional<Report> run_suite(const Model& m, const std::string& suite, int order) {
    if (suite == "relations") return verify_relations(m);
    if (suite == "centrality") return verify_centrality(m);
    if (suite == "symmetry") return verify_symmetries(m);
    if (suite == "abstract") return verify_abstract_identities(m);
    if (suite == "hopf") return verify_coproduct_homomorphism(m);
    if (suite == "coassoc") return verify_coassociativity(m);
    if (suite == "series") return verify_series_consistency(m, order);
    if (suite == "classical-limit") return verify_classical_limits(m);
    if (suite == "all") {
        Report rep;
        rep.suite = "all";
        rep.merge(verify_relations(m))
           .merge(verify_centrality(m))
           .merge(verify_symmetries(m))
           .merge(verify_abstract_identities(m))
           .merge(verify_coproduct_homomorphism(m))
           .merge(verify_coassociativity(m))
           .merge(verify_series_consistency(m, order))
           .merge(verify_classical_limits(m));
        return rep;
    }
    return std::nullopt;
}

} // namespace qse
