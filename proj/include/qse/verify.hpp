#pragma once
#include "qse/models.hpp"
#include "qse/series.hpp"

namespace qse {

struct CheckResult {
    ModelKind model;
    std::string check_kind;
    std::string subject;
    bool passed = false;
    std::string residual;  // canonical rendering, "0" when passed
    std::optional<Rational> a_binding;
};

struct Report {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const;
    Report& merge(const Report& other);
};

std::string to_json_string(const Report& r, int indent = 2);

// [A,B] == expected for all 15 defining pairs, in the 1-copy realization
Report verify_relations(const Model& m);

// the Casimir commutes with the Galilei generators K, H, P, M
Report verify_centrality(const Model& m);

// E-factorization certificate: remainder = [E, image(g)] - lambda * E
struct SymmetryCertificate {
    GeneratorName generator;
    OpElement lambda;
    OpElement remainder;
    std::optional<Rational> vanishing_a;  // unique a-binding killing the remainder, if one exists
};

// throws FactorizationMismatch when expected_remainder is given and differs
SymmetryCertificate symmetry_factorization(const Model& m, GeneratorName g, const OpElement& lambda,
                                           const std::optional<OpElement>& expected_remainder);

// D and C factorizations with the model's closed-form lambdas
Report verify_symmetries(const Model& m);
OpElement symmetry_lambda(const Model& m, GeneratorName g);

// both generator-level sides realize to the same element
bool verify_abstract_bracket(const Model& m, const ExprTree& lhs, const ExprTree& rhs);
Report verify_abstract_identities(const Model& m);

// [Delta(A), Delta(B)] == Delta([A,B]) realized on two copies, 15 pairs
Report verify_coproduct_homomorphism(const Model& m);

// (Delta x id)Delta == (id x Delta)Delta realized on three copies
Report verify_coassociativity(const Model& m);

// expansion of each bracket agrees with the series product at the given order
Report verify_series_consistency(const Model& m, int order);

// z->0 of images, brackets and Casimir against the classical model
Report verify_classical_limits(const Model& m);

// suite in {relations, centrality, symmetry, abstract, hopf, coassoc, series, classical-limit, all}
std::optional<Report> run_suite(const Model& m, const std::string& suite, int order);

// unique root of a linear-in-a element, verified by substitution
std::optional<Rational> find_vanishing_a(const OpElement& e);

} // namespace qse
