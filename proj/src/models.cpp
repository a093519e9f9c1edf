#include "qse/models.hpp"

namespace qse {

std::string to_string(ModelKind k) {
    switch (k) {
        case ModelKind::Classical: return "classical";
        case ModelKind::Space: return "space";
        case ModelKind::Time: return "time";
    }
    return "?";
}

std::optional<ModelKind> model_from_string(const std::string& s) {
    if (s == "classical") return ModelKind::Classical;
    if (s == "space") return ModelKind::Space;
    if (s == "time") return ModelKind::Time;
    return std::nullopt;
}

const OpElement& GeneratorTable::image(GeneratorName g) const {
    auto it = images.find(g);
    if (it == images.end()) throw Error("no image for generator " + to_string(g));
    return it->second;
}

std::optional<GeneratorName> GeneratorTable::shift_primitive() const {
    switch (model) {
        case ModelKind::Space: return GeneratorName::P;
        case ModelKind::Time: return GeneratorName::H;
        case ModelKind::Classical: return std::nullopt;
    }
    return std::nullopt;
}

namespace {

using EL = OpElement;
using ET = ExprTree;
using GN = GeneratorName;

const Coefficient kHalf{Rational(1, 2)};

ET g(GN n) { return ET::gen(n); }
ET s(const Coefficient& c) { return ET::scalar(c); }
ET s(long n) { return ET::scalar(Coefficient(n)); }

GeneratorTable build_table(ModelKind kind, const std::optional<Rational>& a_bind) {
    GeneratorTable tb;
    tb.model = kind;
    tb.a_binding = a_bind;

    const Coefficient av = a_bind ? Coefficient(*a_bind) : Coefficient::a();
    const Coefficient mc = Coefficient::m();
    const EL one = EL::identity();
    const EL X = EL::x(), T = EL::t(), DX = EL::dx(), DT = EL::dt();

    EL H, P, K, D, C;
    const EL M = EL::scalar(mc);

    switch (kind) {
        case ModelKind::Classical: {
            H = DT;
            P = DX;
            K = -(T * DX) - mc * X;
            D = Coefficient(2) * (T * DT) + X * DX - av * one;
            C = (T * T) * DT + (T * X) * DX - av * T + kHalf * mc * (X * X);
            break;
        }
        case ModelKind::Space: {
            const EL SX = EL::sx(1), SXi = EL::sx(-1);
            H = DT;
            P = DX;
            K = -(Coefficient::z(-1) * (T * (one - SXi))) - mc * (X * SX);
            D = Coefficient(2) * (T * DT) + Coefficient::z(-1) * (X * (SX - one)) - av * one;
            C = (T * T) * (DT * SXi)
              + kHalf * Coefficient::z(-1) * ((T * X) * (SX - SXi))
              - Coefficient::z(1) * mc * ((T * X) * (DT * SX))
              + kHalf * mc * ((X * X) * SX)
              - kHalf * (T * (av * (one + SXi) + (Coefficient(1) + kHalf * mc) * (one - SXi)))
              + kHalf * Coefficient::z(1) * mc * (Coefficient(1) + av - kHalf * mc) * (X * SX);
            break;
        }
        case ModelKind::Time: {
            const EL ST = EL::tshift(2);  // exp(2z dt)
            const Coefficient b = kHalf * mc - Coefficient(2);
            H = DT;
            P = DX;
            K = -((T + Coefficient(2) * Coefficient::z(1) * one) * (ST * DX)) - mc * X;
            D = (T + Coefficient(2) * Coefficient::z(1) * one) * (Coefficient::z(-1) * (ST - one))
              + X * DX - av * one;
            C = ((T * T) - Coefficient(2) * Coefficient::z(1) * b * T) * (kHalf * Coefficient::z(-1) * (ST - one))
              + (T * X) * DX - av * T + kHalf * mc * (X * X)
              - Coefficient(2) * Coefficient::z(1) * (b + Coefficient(1)) * ST
              - kHalf * Coefficient::z(1) * ((X * X) * (DX * DX))
              - Coefficient::z(1) * (b - av + kHalf) * (X * DX)
              - kHalf * Coefficient::z(1) * (b - av).pow(2) * one;
            break;
        }
    }

    tb.images[GN::H] = H;
    tb.images[GN::P] = P;
    tb.images[GN::K] = K;
    tb.images[GN::D] = D;
    tb.images[GN::C] = C;
    tb.images[GN::M] = M;
    tb.images[GN::Dprime] = D + kHalf * M;
    return tb;
}

std::vector<RelationEntry> build_relations(ModelKind kind) {
    // exponential tokens are powers of exp(z P) (space) or exp(z H) (time)
    auto e = [&](int steps) {
        return ET::exp_token(kind == ModelKind::Time ? GN::H : GN::P, steps);
    };
    const ET zero = s(0);
    const Coefficient zc = Coefficient::z(1);
    const Coefficient zi = Coefficient::z(-1);

    ET dp, dk, kp, kh, dh, dc, hc, pc, kc;
    switch (kind) {
        case ModelKind::Classical:
            dp = s(-1) * g(GN::P);
            dk = g(GN::K);
            kp = g(GN::M);
            kh = g(GN::P);
            dh = s(-2) * g(GN::H);
            dc = s(2) * g(GN::C);
            hc = g(GN::D);
            pc = s(-1) * g(GN::K);
            kc = zero;
            break;
        case ModelKind::Space:
            dp = s(zi) * (s(1) - e(1));
            dk = g(GN::K);
            kp = g(GN::M) * e(1);
            kh = s(zi) * (s(1) - e(-1));
            dh = s(-2) * g(GN::H);
            dc = s(2) * g(GN::C) - s(kHalf * zc) * g(GN::K) * g(GN::Dprime);
            hc = s(kHalf) * (s(1) + e(-1)) * g(GN::Dprime) - s(kHalf) * g(GN::M)
               + s(zc) * g(GN::K) * g(GN::H);
            pc = s(-1) * s(kHalf) * (s(1) + e(1)) * g(GN::K)
               - s(kHalf * zc) * e(1) * g(GN::M) * g(GN::Dprime);
            kc = s(-1) * s(kHalf * zc) * g(GN::K) * g(GN::K);
            break;
        case ModelKind::Time:
            dp = s(-1) * g(GN::P);
            dk = g(GN::K);
            kp = g(GN::M);
            kh = e(2) * g(GN::P);
            dh = s(zi) * (s(1) - e(2));
            dc = s(2) * g(GN::C) + s(zc) * g(GN::Dprime) * g(GN::Dprime);
            hc = g(GN::D) + s(kHalf) * g(GN::M) * (s(1) - e(2));
            pc = s(-1) * g(GN::K)
               - s(kHalf * zc) * (g(GN::D) * g(GN::P) + g(GN::P) * g(GN::D) + g(GN::P) * g(GN::M));
            kc = s(kHalf * zc) * (g(GN::D) * g(GN::K) + g(GN::K) * g(GN::D) + g(GN::K) * g(GN::M));
            break;
    }

    std::vector<RelationEntry> rel;
    rel.push_back({GN::D, GN::P, dp});
    rel.push_back({GN::D, GN::K, dk});
    rel.push_back({GN::K, GN::P, kp});
    rel.push_back({GN::K, GN::H, kh});
    rel.push_back({GN::D, GN::H, dh});
    rel.push_back({GN::D, GN::C, dc});
    rel.push_back({GN::H, GN::C, hc});
    rel.push_back({GN::P, GN::C, pc});
    rel.push_back({GN::H, GN::P, zero});
    rel.push_back({GN::K, GN::C, kc});
    for (GN m : {GN::H, GN::P, GN::K, GN::D, GN::C})
        rel.push_back({GN::M, m, zero});
    return rel;
}

std::map<GN, ET> build_coproducts(ModelKind kind) {
    std::map<GN, ET> cop;
    if (kind == ModelKind::Classical) return cop;

    auto g1 = [](GN n) { return ET::gen(n, 1); };
    auto g2 = [](GN n) { return ET::gen(n, 2); };
    const Coefficient zc = Coefficient::z(1);

    if (kind == ModelKind::Space) {
        auto e2 = [](int steps) { return ET::exp_token(GN::P, steps, 2); };
        cop[GN::P] = g1(GN::P) + g2(GN::P);
        cop[GN::M] = g1(GN::M) + g2(GN::M);
        cop[GN::H] = g2(GN::H) + g1(GN::H) * e2(-2);
        cop[GN::K] = g2(GN::K) + g1(GN::K) * e2(1) - s(zc) * g1(GN::Dprime) * e2(1) * g2(GN::M);
        cop[GN::D] = g2(GN::D) + g1(GN::D) * e2(1) + s(kHalf) * g1(GN::M) * (e2(1) - s(1));
        cop[GN::C] = g2(GN::C) + g1(GN::C) * e2(2)
                   + s(kHalf * zc) * g1(GN::K) * e2(1) * g2(GN::Dprime)
                   - s(kHalf * zc) * g1(GN::Dprime) * e2(1)
                        * (g2(GN::K) + s(zc) * g2(GN::Dprime) * g2(GN::M));
    } else {
        auto e2 = [](int steps) { return ET::exp_token(GN::H, steps, 2); };
        cop[GN::H] = g1(GN::H) + g2(GN::H);
        cop[GN::M] = g1(GN::M) + g2(GN::M);
        cop[GN::P] = g2(GN::P) + g1(GN::P) * e2(-1);
        cop[GN::K] = g2(GN::K) + g1(GN::K) * e2(1) - s(zc) * g1(GN::Dprime) * e2(2) * g2(GN::P);
        cop[GN::D] = g2(GN::D) + g1(GN::D) * e2(2) + s(kHalf) * g1(GN::M) * (e2(2) - s(1));
        cop[GN::C] = g2(GN::C) + g1(GN::C) * e2(2)
                   - s(kHalf * zc) * g1(GN::Dprime) * e2(2) * g2(GN::M);
    }
    cop[GN::Dprime] = cop.at(GN::D) + s(kHalf) * cop.at(GN::M);
    return cop;
}

} // namespace

Model build_model(ModelKind kind, std::optional<Rational> a) {
    Model mo;
    mo.table = build_table(kind, a);
    mo.relations = build_relations(kind);
    mo.coproducts = build_coproducts(kind);
    return mo;
}

ExprTree casimir_tree(ModelKind kind) {
    using GNl = GeneratorName;
    switch (kind) {
        case ModelKind::Classical:
            return g(GNl::P) * g(GNl::P) - s(2) * g(GNl::M) * g(GNl::H);
        case ModelKind::Space: {
            ET A = s(1) - ET::exp_token(GNl::P, -1);
            return s(Coefficient::z(-2)) * A * A - s(2) * g(GNl::M) * g(GNl::H);
        }
        case ModelKind::Time:
            return g(GNl::P) * g(GNl::P)
                 - s(Coefficient::z(-1)) * g(GNl::M) * (s(1) - ET::exp_token(GNl::H, -2));
    }
    throw Error("unknown model");
}

LeafResolver realization_resolver(const GeneratorTable& table, int copies) {
    LeafResolver r;
    r.copies = copies;
    const ModelKind kind = table.model;
    auto prim = table.shift_primitive();
    r.gen = [&table, copies](GeneratorName gn, int slot) {
        int target = slot == 0 ? 1 : slot;
        if (slot == 0 && copies != 1)
            throw IndexOutOfRange("unslotted generator leaf in " + std::to_string(copies) + "-copy evaluation");
        return embed(table.image(gn), {target}, copies);
    };
    r.exp = [kind, prim, copies](GeneratorName gn, int steps, int slot) {
        if (!prim || gn != *prim)
            throw UnresolvableToken("no shift interpretation for exp(" + std::to_string(steps) + "z " + to_string(gn) + ")");
        int target = slot == 0 ? 1 : slot;
        return kind == ModelKind::Space ? OpElement::sx(steps, copies, target)
                                        : OpElement::tshift(steps, copies, target);
    };
    r.op = [copies](const OpElement& e, int slot) {
        int target = slot == 0 ? 1 : slot;
        return embed(e, {target}, copies);
    };
    return r;
}

OpElement realize(const GeneratorTable& table, const ExprTree& tree, int copies) {
    return eval_expr(tree, realization_resolver(table, copies));
}

OpElement build_casimir(const GeneratorTable& table) {
    return realize(table, casimir_tree(table.model), 1);
}

OpElement realize_coproduct(const Model& model, GeneratorName gn) {
    auto it = model.coproducts.find(gn);
    if (it == model.coproducts.end())
        throw Error("model has no coproduct table");
    return realize(model.table, it->second, 2);
}

ExprTree coproduct_leg(const ExprTree& tree, const std::map<GeneratorName, ExprTree>& cop, bool left) {
    switch (tree.kind) {
        case ExprTree::Kind::Scalar:
            return tree;
        case ExprTree::Kind::Gen: {
            if (left) {
                if (tree.slot == 1) return cop.at(tree.g);            // lands on slots 1,2
                return ExprTree::gen(tree.g, 3);                       // slot 2 -> 3
            }
            if (tree.slot == 1) return tree;                           // slot 1 stays
            return remap_slots(cop.at(tree.g), {2, 3});                // slot 2 -> slots 2,3
        }
        case ExprTree::Kind::Exp: {
            // group-like: Delta(exp) = exp x exp
            auto tok = [&](int slot) { return ExprTree::exp_token(tree.g, tree.steps, slot); };
            if (left) {
                if (tree.slot == 1) return ExprTree::prod({tok(1), tok(2)});
                return tok(3);
            }
            if (tree.slot == 1) return tok(1);
            return ExprTree::prod({tok(2), tok(3)});
        }
        case ExprTree::Kind::Op:
            throw UnresolvableToken("raw element leaf has no coproduct");
        case ExprTree::Kind::Sum: {
            std::vector<ExprTree> kids;
            kids.reserve(tree.kids.size());
            for (const auto& k : tree.kids) kids.push_back(coproduct_leg(k, cop, left));
            return ExprTree::sum(std::move(kids));
        }
        case ExprTree::Kind::Prod: {
            std::vector<ExprTree> kids;
            kids.reserve(tree.kids.size());
            for (const auto& k : tree.kids) kids.push_back(coproduct_leg(k, cop, left));
            return ExprTree::prod(std::move(kids));
        }
    }
    throw Error("corrupt expression node");
}

} // namespace qse
