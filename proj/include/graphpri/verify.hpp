#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace graphpri {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail;  // worst-case numbers, counterexample hints
};

// Fast invariant suite behind the `verify` CLI subcommand: algebraic oracles,
// entropy/divergence axioms, gradient finite-difference checks, resistance
// identities and determinism probes. Budgeted well under a minute.
std::vector<PropertyResult> run_property_suite(std::uint64_t seed);

}  // namespace graphpri
