#pragma once
#include <array>
#include <functional>
#include <vector>

#include "qse/op_element.hpp"

namespace qse {

enum class GeneratorName { H, P, K, D, C, M, Dprime };

constexpr std::array<GeneratorName, 6> kGenerators{
    GeneratorName::H, GeneratorName::P, GeneratorName::K,
    GeneratorName::D, GeneratorName::C, GeneratorName::M};

std::string to_string(GeneratorName g);

// Generator-level expression: scalars, (slot-tagged) generator leaves,
// exponential tokens exp(steps * z * G), sums and products. Slot 0 means
// "the unique copy" in single-copy evaluation.
class ExprTree {
public:
    enum class Kind { Scalar, Gen, Exp, Op, Sum, Prod };

    static ExprTree scalar(const Coefficient& c);
    static ExprTree gen(GeneratorName g, int slot = 0);
    static ExprTree exp_token(GeneratorName g, int steps, int slot = 0);
    static ExprTree op(const OpElement& e, int slot = 0);  // raw single-copy element leaf
    static ExprTree sum(std::vector<ExprTree> kids);
    static ExprTree prod(std::vector<ExprTree> kids);

    friend ExprTree operator+(const ExprTree& a, const ExprTree& b) { return sum({a, b}); }
    friend ExprTree operator-(const ExprTree& a, const ExprTree& b);
    friend ExprTree operator*(const ExprTree& a, const ExprTree& b) { return prod({a, b}); }
    static ExprTree bracket(const ExprTree& a, const ExprTree& b) { return a * b - b * a; }

    Kind kind = Kind::Scalar;
    Coefficient value;        // Scalar
    GeneratorName g = GeneratorName::H;  // Gen / Exp
    int slot = 0;             // Gen / Exp / Op
    int steps = 0;            // Exp: exponent is steps * z * g
    OpElement raw = OpElement(1);  // Op
    std::vector<ExprTree> kids;   // Sum / Prod

    std::string str() const;
};

// how leaves become algebra elements during evaluation
struct LeafResolver {
    int copies = 1;
    std::function<OpElement(GeneratorName, int slot)> gen;
    std::function<OpElement(GeneratorName, int steps, int slot)> exp;
    std::function<OpElement(const OpElement&, int slot)> op;
};

OpElement eval_expr(const ExprTree& tree, const LeafResolver& r);

// slot renaming (0 stays 0); used to move coproduct legs around
ExprTree remap_slots(const ExprTree& tree, const std::vector<int>& slot_map);

} // namespace qse
