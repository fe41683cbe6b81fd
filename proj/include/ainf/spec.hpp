#pragma once

#include "ainf/algebra.hpp"
#include "ainf/deformation.hpp"
#include "ainf/verify.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ainf {

/// Malformed spec file; `field` is a JSON-pointer-like path to the culprit.
class SpecError : public std::runtime_error {
public:
    SpecError(const std::string& field, const std::string& what)
        : std::runtime_error(field + ": " + what), field_(field) {}
    const std::string& field() const { return field_; }

private:
    std::string field_;
};

struct NamedCochain {
    std::string name;
    Cochain cochain;
};

/// An algebra with the optional blocks a spec file may carry.
struct AlgebraSpec {
    AInfinityAlgebra algebra;
    std::optional<AInfinityIdeal> ideal;
    std::optional<Trace> trace;
    std::vector<NamedCochain> derivations;
    std::optional<FormalDeformation> deformation;
    std::optional<StrictMorphism> morphism;
};

struct SpecOptions {
    // Run the Stasheff and unit checks (parse errors are always raised).
    bool validate = true;
    // Directory used to resolve a morphism target given as a file name.
    std::string base_dir = ".";
};

/// Parses JSON text. Structure constants are label tuples with rational
/// strings; `ops` keys are arities.
///
///   {"name": "K[e]", "field": "Q", "dims": [2], "labels": [["1", "e"]],
///    "unit": "1", "ops": {"2": [{"inputs": ["e", "e"], "output": "e", "coeff": "0"}]}}
AlgebraSpec parse_spec(const std::string& text, const SpecOptions& opt = {});
AlgebraSpec load_spec(const std::string& path, bool validate = true);

}  // namespace ainf
