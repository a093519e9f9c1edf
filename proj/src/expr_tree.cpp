#include "qse/expr_tree.hpp"

namespace qse {

std::string to_string(GeneratorName g) {
    switch (g) {
        case GeneratorName::H: return "H";
        case GeneratorName::P: return "P";
        case GeneratorName::K: return "K";
        case GeneratorName::D: return "D";
        case GeneratorName::C: return "C";
        case GeneratorName::M: return "M";
        case GeneratorName::Dprime: return "D'";
    }
    return "?";
}

ExprTree ExprTree::scalar(const Coefficient& c) {
    ExprTree t;
    t.kind = Kind::Scalar;
    t.value = c;
    return t;
}

ExprTree ExprTree::gen(GeneratorName g, int slot) {
    ExprTree t;
    t.kind = Kind::Gen;
    t.g = g;
    t.slot = slot;
    return t;
}

ExprTree ExprTree::exp_token(GeneratorName g, int steps, int slot) {
    ExprTree t;
    t.kind = Kind::Exp;
    t.g = g;
    t.steps = steps;
    t.slot = slot;
    return t;
}

ExprTree ExprTree::op(const OpElement& e, int slot) {
    ExprTree t;
    t.kind = Kind::Op;
    t.raw = e;
    t.slot = slot;
    return t;
}

ExprTree ExprTree::sum(std::vector<ExprTree> kids) {
    ExprTree t;
    t.kind = Kind::Sum;
    t.kids = std::move(kids);
    return t;
}

ExprTree ExprTree::prod(std::vector<ExprTree> kids) {
    ExprTree t;
    t.kind = Kind::Prod;
    t.kids = std::move(kids);
    return t;
}

ExprTree operator-(const ExprTree& a, const ExprTree& b) {
    return ExprTree::sum({a, ExprTree::prod({ExprTree::scalar(Coefficient(-1)), b})});
}

OpElement eval_expr(const ExprTree& tree, const LeafResolver& r) {
    switch (tree.kind) {
        case ExprTree::Kind::Scalar:
            return OpElement::scalar(tree.value, r.copies);
        case ExprTree::Kind::Gen:
            return r.gen(tree.g, tree.slot);
        case ExprTree::Kind::Exp:
            if (!r.exp) throw UnresolvableToken("exponential token not resolvable here");
            return r.exp(tree.g, tree.steps, tree.slot);
        case ExprTree::Kind::Op:
            if (!r.op) throw UnresolvableToken("raw element leaf not resolvable here");
            return r.op(tree.raw, tree.slot);
        case ExprTree::Kind::Sum: {
            OpElement acc(r.copies);
            for (const auto& k : tree.kids) acc += eval_expr(k, r);
            return acc;
        }
        case ExprTree::Kind::Prod: {
            OpElement acc = OpElement::identity(r.copies);
            for (const auto& k : tree.kids) acc *= eval_expr(k, r);
            return acc;
        }
    }
    throw Error("corrupt expression node");
}

ExprTree remap_slots(const ExprTree& tree, const std::vector<int>& slot_map) {
    ExprTree t = tree;
    if (t.kind == ExprTree::Kind::Gen || t.kind == ExprTree::Kind::Exp || t.kind == ExprTree::Kind::Op) {
        if (t.slot != 0) {
            if (t.slot < 1 || t.slot > static_cast<int>(slot_map.size()))
                throw IndexOutOfRange("slot out of range in remap");
            t.slot = slot_map[static_cast<std::size_t>(t.slot - 1)];
        }
    }
    for (auto& k : t.kids) k = remap_slots(k, slot_map);
    return t;
}

std::string ExprTree::str() const {
    switch (kind) {
        case Kind::Scalar: {
            std::string s = value.str();
            return value.term_count() > 1 ? "(" + s + ")" : s;
        }
        case Kind::Gen: {
            std::string s = to_string(g);
            if (slot != 0) s += "_" + std::to_string(slot);
            return s;
        }
        case Kind::Exp: {
            std::string s = "exp(" + std::to_string(steps) + "z " + to_string(g) + ")";
            if (slot != 0) s += "_" + std::to_string(slot);
            return s;
        }
        case Kind::Op: {
            return "{" + raw.str() + "}";
        }
        case Kind::Sum: {
            std::string s;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) s += " + ";
                s += kids[i].str();
            }
            return "(" + s + ")";
        }
        case Kind::Prod: {
            std::string s;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                if (i) s += "*";
                s += kids[i].str();
            }
            return s;
        }
    }
    return "?";
}

} // namespace qse
