#pragma once

#include <map>
#include <string>

#include "qshift/circuit.hpp"

namespace qshift {

struct ResourceReport {
    int qubits = 0;
    int depth = 0;
    std::size_t total_gates = 0;
    std::map<GateKind, std::size_t> per_kind;
    std::string basis = "logical";
    std::string mcx_mode;
};

/// Deterministic gate counts plus ASAP depth, where two gates conflict iff
/// they share any qubit (controls included).
ResourceReport count_resources(const Circuit& c);

int depth(const Circuit& c);

}  // namespace qshift
