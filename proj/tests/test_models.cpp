#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qse/verify.hpp"
#include "poly_oracle.hpp"

using namespace qse;
using EL = OpElement;
using GN = GeneratorName;

namespace {
const std::vector<ModelKind> kModels{ModelKind::Classical, ModelKind::Space, ModelKind::Time};
}

TEST_CASE("defining relations hold in all models, symbolic and bound a") {
    for (ModelKind k : kModels) {
        Model sym = build_model(k);
        Report r = verify_relations(sym);
        CHECK(r.checks.size() == 15);
        CHECK(r.all_passed());
        Model bound = build_model(k, Rational(-1, 2));
        CHECK(verify_relations(bound).all_passed());
        Model other = build_model(k, Rational(3, 7));
        CHECK(verify_relations(other).all_passed());
    }
}

TEST_CASE("casimir is central for the kinematical generators") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k);
        Report r = verify_centrality(mo);
        CHECK(r.checks.size() == 4);
        CHECK(r.all_passed());
    }
}

TEST_CASE("casimir does not commute with the non-kinematical generators") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k);
        EL cas = build_casimir(mo.table);
        CHECK(!commutator(cas, mo.table.image(GN::D)).is_zero());
        CHECK(!commutator(cas, mo.table.image(GN::C)).is_zero());
    }
}

TEST_CASE("D factorizes with lambda = 2 and no remainder") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k);
        auto cert = symmetry_factorization(mo, GN::D, symmetry_lambda(mo, GN::D), std::nullopt);
        CHECK(cert.remainder.is_zero());
    }
}

TEST_CASE("C remainder is m(1+2a) in the classical and space models") {
    EL want = EL::scalar(Coefficient::m() * (Coefficient(1) + Coefficient(2) * Coefficient::a()));
    for (ModelKind k : {ModelKind::Classical, ModelKind::Space}) {
        Model mo = build_model(k);
        auto cert = symmetry_factorization(mo, GN::C, symmetry_lambda(mo, GN::C), want);
        CHECK(cert.remainder == want);
        REQUIRE(cert.vanishing_a.has_value());
        CHECK(*cert.vanishing_a == Rational(-1, 2));
    }
}

TEST_CASE("time-model C remainder is (1+2a)(z dx^2 + m St^-1)") {
    Model mo = build_model(ModelKind::Time);
    Coefficient lin = Coefficient(1) + Coefficient(2) * Coefficient::a();
    EL want = (Coefficient::z(1) * lin) * (EL::dx() * EL::dx())
            + (Coefficient::m() * lin) * EL::tshift(-2);
    auto cert = symmetry_factorization(mo, GN::C, symmetry_lambda(mo, GN::C), want);
    REQUIRE(cert.vanishing_a.has_value());
    CHECK(*cert.vanishing_a == Rational(-1, 2));
}

TEST_CASE("remainders vanish identically at a = -1/2") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k, Rational(-1, 2));
        for (GN g : {GN::D, GN::C}) {
            auto cert = symmetry_factorization(mo, g, symmetry_lambda(mo, g), std::nullopt);
            CHECK(cert.remainder.is_zero());
        }
        // and not at a generic binding
        Model generic = build_model(k, Rational(1, 3));
        auto cert = symmetry_factorization(generic, GN::C, symmetry_lambda(generic, GN::C), std::nullopt);
        CHECK(!cert.remainder.is_zero());
    }
}

TEST_CASE("factorization mismatch is detected") {
    Model mo = build_model(ModelKind::Classical);
    CHECK_THROWS_AS(symmetry_factorization(mo, GN::C, symmetry_lambda(mo, GN::C),
                                           EL::scalar(Coefficient::m())),
                    FactorizationMismatch);
}

TEST_CASE("abstract bracket checker accepts truths and rejects lies") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k);
        CHECK(verify_abstract_identities(mo).all_passed());
        ExprTree E = casimir_tree(k);
        ExprTree lie = ExprTree::scalar(Coefficient(3)) * E;
        CHECK(!verify_abstract_bracket(mo, ExprTree::bracket(E, ExprTree::gen(GN::D)), lie));
    }
    Model bound = build_model(ModelKind::Classical, Rational(-1, 2));
    Report r = verify_abstract_identities(bound);
    CHECK(r.checks.size() == 3);  // includes [E,C] = 2tE
    CHECK(r.all_passed());
}

TEST_CASE("series consistency and classical limits") {
    for (ModelKind k : kModels) {
        Model mo = build_model(k);
        CHECK(verify_series_consistency(mo, 4).all_passed());
        Report lim = verify_classical_limits(mo);
        if (k == ModelKind::Classical) CHECK(lim.checks.empty());
        else CHECK(lim.all_passed());
    }
}

TEST_CASE("deformed casimirs collapse to the classical one") {
    EL classical = build_casimir(build_model(ModelKind::Classical).table);
    for (ModelKind k : {ModelKind::Space, ModelKind::Time})
        CHECK(series_classical_limit(build_casimir(build_model(k).table)) == classical);
}

TEST_CASE("generator application against the polynomial oracle") {
    using testing::Poly;
    using testing::apply_oracle;
    Model mo = build_model(ModelKind::Space);
    const Coefficient m = Coefficient::m(), z = Coefficient::z(1), a = Coefficient::a();

    // K 1 = -m x
    Poly k1 = apply_oracle(mo.table.image(GN::K), Poly::one());
    CHECK(k1 == Poly::xt(1, 0, -m));

    // K^2 1 = m^2 x^2 + m^2 z x + m t
    Poly k2 = apply_oracle(mo.table.image(GN::K), k1);
    Poly want_k2 = Poly::xt(2, 0, m * m) + Poly::xt(1, 0, m * m * z) + Poly::xt(0, 1, m);
    CHECK(k2 == want_k2);

    // D 1 = -a
    CHECK(apply_oracle(mo.table.image(GN::D), Poly::one()) == Poly::xt(0, 0, -a));

    // C 1 = (m/2) x^2 + (z m / 2)(1 + a - m/2) x - a t
    Poly c1 = apply_oracle(mo.table.image(GN::C), Poly::one());
    Coefficient half{Rational(1, 2)};
    Poly want_c1 = Poly::xt(2, 0, half * m)
                 + Poly::xt(1, 0, half * z * m * (Coefficient(1) + a - half * m))
                 + Poly::xt(0, 1, -a);
    CHECK(c1 == want_c1);

    // the casimir annihilates polynomial solutions: E (x) = 0, E (1) = 0
    EL cas = build_casimir(mo.table);
    CHECK(apply_oracle(cas, Poly::one()) == Poly{});
    CHECK(apply_oracle(cas, Poly::xt(1, 0)) == Poly{});
    // but not non-solutions: E (x^2) = 2 - 0 != 0  (wrt t-independent x^2)
    CHECK(!(apply_oracle(cas, Poly::xt(2, 0)) == Poly{}));
}

TEST_CASE("hierarchy of polynomial solutions stays in the casimir kernel") {
    using testing::Poly;
    using testing::apply_oracle;
    // symmetric sequences from {K, C} applied to the constant solution at a = -1/2
    Model mo = build_model(ModelKind::Space, Rational(-1, 2));
    EL cas = build_casimir(mo.table);
    std::vector<std::vector<GN>> seqs{{GN::K}, {GN::C}, {GN::K, GN::K}, {GN::K, GN::C},
                                      {GN::C, GN::K}, {GN::C, GN::C}, {GN::K, GN::C, GN::K}};
    for (const auto& seq : seqs) {
        Poly p = Poly::one();
        for (GN g : seq) p = apply_oracle(mo.table.image(g), p);
        CHECK(apply_oracle(cas, p) == Poly{});
    }
}

TEST_CASE("a binding flows into the table") {
    Model mo = build_model(ModelKind::Space, Rational(-1, 2));
    // D at a=-1/2 carries the constant 1/2
    EL d = mo.table.image(GN::D);
    EL want = Coefficient(2) * (EL::t() * EL::dt())
            + Coefficient::z(-1) * (EL::x() * (EL::sx(1) - EL::identity()))
            + Coefficient(Rational(1, 2)) * EL::identity();
    CHECK(d == want);
    CHECK(mo.table.shift_primitive() == GN::P);
    CHECK(build_model(ModelKind::Time).table.shift_primitive() == GN::H);
    CHECK(!build_model(ModelKind::Classical).table.shift_primitive().has_value());
}
