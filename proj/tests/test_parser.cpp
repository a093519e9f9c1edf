#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "qse/models.hpp"
#include "qse/parser.hpp"

using namespace qse;
using EL = OpElement;

TEST_CASE("atoms and precedence") {
    CHECK(parse_element("x") == EL::x());
    CHECK(parse_element("dx*x") == EL::dx() * EL::x());
    CHECK(parse_element("dx*x - x*dx") == EL::identity());
    CHECK(parse_element("[dx, x]") == EL::identity());
    CHECK(parse_element("2*x + 3*x") == Coefficient(5) * EL::x());
    CHECK(parse_element("x + t*dt") == EL::x() + EL::t() * EL::dt());
    CHECK(parse_element("(x + t)*dx") == (EL::x() + EL::t()) * EL::dx());
    CHECK(parse_element("3/4") == EL::scalar(Coefficient(Rational(3, 4))));
    CHECK(parse_element("1/2*z^-2*m")
          == EL::scalar(Coefficient(Rational(1, 2)) * Coefficient::z(-2) * Coefficient::m()));
    CHECK(parse_element("m + 2*m*a")
          == EL::scalar(Coefficient::m() * (Coefficient(1) + Coefficient(2) * Coefficient::a())));
}

TEST_CASE("exponents") {
    CHECK(parse_element("x^3") == EL::x() * EL::x() * EL::x());
    CHECK(parse_element("x^0") == EL::identity());
    CHECK(parse_element("z^-2") == EL::scalar(Coefficient::z(-2)));
    CHECK(parse_element("Sx^-1") == EL::sx(-1));
    CHECK(parse_element("St^-2") == EL::tshift(-4));
    CHECK(parse_element("Et^3") == EL::tshift(3));
    CHECK(parse_element("Et^2") == EL::st(1));
    CHECK(parse_element("(x + t)^2") == (EL::x() + EL::t()) * (EL::x() + EL::t()));
    CHECK_THROWS_AS(parse_element("x^-1"), IllegalExponent);
    CHECK_THROWS_AS(parse_element("2^-1"), IllegalExponent);
    CHECK_THROWS_AS(parse_element("m^-2"), IllegalExponent);
    CHECK_THROWS_AS(parse_element("(x + t)^-1"), IllegalExponent);
}

TEST_CASE("leading sign") {
    CHECK(parse_element("-dx") == -EL::dx());
    CHECK(parse_element("-2*x + x") == -EL::x());
    CHECK(parse_element("(-x)*dx") == -(EL::x() * EL::dx()));
    CHECK(parse_element("+x") == EL::x());
}

TEST_CASE("syntax errors carry offsets") {
    try {
        parse_element("x +");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 3);
    }
    try {
        parse_element("x + (t");
        FAIL("expected SyntaxError");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 6);
    }
    CHECK_THROWS_AS(parse_element(""), SyntaxError);
    CHECK_THROWS_AS(parse_element("q"), SyntaxError);
    CHECK_THROWS_AS(parse_element("x_1"), SyntaxError);
    CHECK_THROWS_AS(parse_element("x x"), SyntaxError);
    CHECK_THROWS_AS(parse_element("[x, ]"), SyntaxError);
    CHECK_THROWS_AS(parse_element("[x x]"), SyntaxError);
    CHECK_THROWS_AS(parse_element("x^1/2"), SyntaxError);
}

TEST_CASE("casimir strings match the built elements") {
    CHECK(parse_element("dx^2 - 2*m*dt") == build_casimir(build_model(ModelKind::Classical).table));
    CHECK(parse_element("z^-2*(1 - Sx^-1)^2 - 2*m*dt")
          == build_casimir(build_model(ModelKind::Space).table));
    CHECK(parse_element("dx^2 - z^-1*m*(1 - St^-1)")
          == build_casimir(build_model(ModelKind::Time).table));
}

namespace {

EL random_renderable(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(1, 4), pe(0, 2), se(-2, 2), num(-5, 5), den(1, 4), cterms(1, 2);
    EL acc(1);
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        OpMonomial mono(1);
        auto& c = mono.copies[0];
        c.x = static_cast<unsigned>(pe(rng));
        c.t = static_cast<unsigned>(pe(rng));
        c.dx = static_cast<unsigned>(pe(rng));
        c.dt = static_cast<unsigned>(pe(rng));
        c.sx = se(rng);
        c.ts = se(rng);
        Coefficient coeff;
        int ct = cterms(rng);
        for (int j = 0; j < ct; ++j) {
            Rational r(num(rng), den(rng));
            if (r.is_zero()) r = Rational(-1, 2);
            coeff += Coefficient::monomial(r, {se(rng), static_cast<unsigned>(pe(rng)), static_cast<unsigned>(pe(rng))});
        }
        if (coeff.is_zero()) coeff = Coefficient(1);
        acc += EL::from_term(mono, coeff);
    }
    return acc;
}

} // namespace

TEST_CASE("render/parse round trip") {
    std::mt19937 rng(31337);
    for (int trial = 0; trial < 300; ++trial) {
        EL e = random_renderable(rng);
        CAPTURE(e.str());
        CHECK(parse_element(e.str()) == e);
    }
}

TEST_CASE("round trip through model images") {
    for (ModelKind k : {ModelKind::Classical, ModelKind::Space, ModelKind::Time}) {
        Model mo = build_model(k);
        for (GeneratorName g : kGenerators) {
            const EL& img = mo.table.image(g);
            CHECK(parse_element(img.str()) == img);
        }
        EL cas = build_casimir(mo.table);
        CHECK(parse_element(cas.str()) == cas);
    }
}
