#pragma once

#include <string>
#include <vector>

#include "gd/kernel.hpp"

namespace gd {

// Registry of derived rules. Each rule application is elaborated into a tree
// of primitive rule applications (grafting the user's subproofs in) and the
// expansion is checked by the kernel, so the trusted core stays the primitive
// catalogue. Rules marked `promoted` turned out not to be derivable from the
// primitives as stated and are backed by a primitive of the same name.
class DerivedRegistry : public RuleExtension {
public:
    DerivedRegistry();

    bool knows(const std::string& rule) const override;
    Judgment apply(const DefEnv& env, const CheckConfig& cfg, const Context& ctx, const ProofNode& node,
                   const CheckFn& check) const override;

    // The primitive expansion of one application. Throws UnknownDerivedRule
    // or ShapeMismatch/PremiseShapeMismatch on ill-shaped instantiations.
    ProofPtr expand(const DefEnv& env, const CheckConfig& cfg, const Context& ctx, const ProofNode& node,
                    const CheckFn& check) const;

    struct Entry {
        std::string name;
        bool promoted = false;
    };
    const std::vector<Entry>& entries() const { return order_; }
    bool is_promoted(const std::string& rule) const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
    std::vector<Entry> order_;
};

const DerivedRegistry& derived_registry();

struct DerivationResult {
    std::string name;
    bool ok = false;
    bool promoted = false;
    std::string message;
};

struct DerivationReport {
    std::vector<DerivationResult> results;
    bool all_ok = true;
};

// Instantiates every registered rule with schematic atoms and checks it
// against the kernel; a failure means the primitive catalogue regressed.
DerivationReport verify_all_derivations();

}  // namespace gd
