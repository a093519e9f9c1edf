#pragma once
#include <map>
#include <optional>
#include <vector>

#include "qse/expr_tree.hpp"

namespace qse {

enum class ModelKind { Classical, Space, Time };

std::string to_string(ModelKind k);
std::optional<ModelKind> model_from_string(const std::string& s);

// differential / differential-difference realization of the six generators
// (plus the shifted dilation D' = D + M/2) on one tensor copy
struct GeneratorTable {
    ModelKind model = ModelKind::Classical;
    std::optional<Rational> a_binding;  // nullopt: a stays symbolic
    std::map<GeneratorName, OpElement> images;

    const OpElement& image(GeneratorName g) const;
    // generator whose exponentials appear as shift tokens: P (space), H (time)
    std::optional<GeneratorName> shift_primitive() const;
};

struct RelationEntry {
    GeneratorName lhs, rhs;
    ExprTree expected;
};

struct Model {
    GeneratorTable table;
    std::vector<RelationEntry> relations;          // the 15 defining brackets
    std::map<GeneratorName, ExprTree> coproducts;  // slots 1,2; empty for classical
};

Model build_model(ModelKind kind, std::optional<Rational> a = std::nullopt);

// generator-level Casimir: P^2 - 2MH and its two deformations
ExprTree casimir_tree(ModelKind kind);
OpElement build_casimir(const GeneratorTable& table);

LeafResolver realization_resolver(const GeneratorTable& table, int copies);
OpElement realize(const GeneratorTable& table, const ExprTree& tree, int copies = 1);

// image of Delta(g) in the 2-copy realization
OpElement realize_coproduct(const Model& model, GeneratorName g);

// (Delta x id) or (id x Delta) applied to a 2-slot coproduct tree, giving 3 slots
ExprTree coproduct_leg(const ExprTree& tree, const std::map<GeneratorName, ExprTree>& cop, bool left);

} // namespace qse
