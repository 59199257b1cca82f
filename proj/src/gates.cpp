#include "qshift/gates.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace qshift {

std::string_view to_string(GateKind k) {
    switch (k) {
        case GateKind::PauliX: return "PauliX";
        case GateKind::Hadamard: return "Hadamard";
        case GateKind::U: return "U";
        case GateKind::ControlledX: return "ControlledX";
        case GateKind::Toffoli: return "Toffoli";
        case GateKind::MultiControlledX: return "MultiControlledX";
        case GateKind::Swap: return "Swap";
        case GateKind::ControlledSwap: return "ControlledSwap";
        case GateKind::Phase: return "Phase";
        case GateKind::ControlledPhase: return "ControlledPhase";
        case GateKind::MultiControlledZ: return "MultiControlledZ";
    }
    return "?";
}

std::optional<GateKind> gate_kind_from_string(std::string_view name) {
    static const std::pair<std::string_view, GateKind> table[] = {
        {"PauliX", GateKind::PauliX},
        {"Hadamard", GateKind::Hadamard},
        {"U", GateKind::U},
        {"ControlledX", GateKind::ControlledX},
        {"Toffoli", GateKind::Toffoli},
        {"MultiControlledX", GateKind::MultiControlledX},
        {"Swap", GateKind::Swap},
        {"ControlledSwap", GateKind::ControlledSwap},
        {"Phase", GateKind::Phase},
        {"ControlledPhase", GateKind::ControlledPhase},
        {"MultiControlledZ", GateKind::MultiControlledZ},
    };
    for (const auto& [n, k] : table)
        if (n == name) return k;
    return std::nullopt;
}

std::vector<int> GateApp::qubits() const {
    std::vector<int> qs = controls;
    qs.insert(qs.end(), targets.begin(), targets.end());
    return qs;
}

GateApp adjoint(const GateApp& g) {
    GateApp r = g;
    switch (g.kind) {
        case GateKind::Phase:
        case GateKind::ControlledPhase:
            r.params[0] = -g.params[0];
            break;
        case GateKind::U:
            r.params = {-g.params[0], -g.params[2], -g.params[1]};
            break;
        default:
            break;  // self-inverse
    }
    return r;
}

std::array<Complex, 4> target_unitary(const GateApp& g) {
    const Complex one{1, 0}, zero{0, 0};
    switch (g.kind) {
        case GateKind::PauliX:
        case GateKind::ControlledX:
        case GateKind::Toffoli:
        case GateKind::MultiControlledX:
            return {zero, one, one, zero};
        case GateKind::Hadamard: {
            const double s = 1.0 / std::sqrt(2.0);
            return {Complex{s, 0}, Complex{s, 0}, Complex{s, 0}, Complex{-s, 0}};
        }
        case GateKind::Phase:
        case GateKind::ControlledPhase:
            return {one, zero, zero, std::polar(1.0, g.params[0])};
        case GateKind::MultiControlledZ:
            return {one, zero, zero, Complex{-1, 0}};
        case GateKind::U: {
            const double t2 = g.params[0] / 2.0;
            const double phi = g.params[1], lam = g.params[2];
            const double c = std::cos(t2), s = std::sin(t2);
            return {Complex{c, 0}, -std::polar(s, lam), std::polar(s, phi),
                    std::polar(c, phi + lam)};
        }
        case GateKind::Swap:
        case GateKind::ControlledSwap:
            throw std::logic_error("swap gates have no single-target unitary");
    }
    throw std::logic_error("unknown gate kind");
}

int target_count(GateKind k) {
    return (k == GateKind::Swap || k == GateKind::ControlledSwap) ? 2 : 1;
}

int param_count(GateKind k) {
    switch (k) {
        case GateKind::U: return 3;
        case GateKind::Phase:
        case GateKind::ControlledPhase: return 1;
        default: return 0;
    }
}

void validate_gate(const GateApp& g, int width) {
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("invalid gate " + std::string(to_string(g.kind)) + ": " + why);
    };

    if (static_cast<int>(g.targets.size()) != target_count(g.kind)) fail("wrong target count");
    if (static_cast<int>(g.params.size()) != param_count(g.kind)) fail("wrong parameter count");
    for (double p : g.params)
        if (!std::isfinite(p)) fail("non-finite parameter");

    const std::size_t nc = g.controls.size();
    switch (g.kind) {
        case GateKind::PauliX:
        case GateKind::Hadamard:
        case GateKind::U:
        case GateKind::Phase:
        case GateKind::Swap:
            if (nc != 0) fail("kind takes no controls");
            break;
        case GateKind::ControlledX:
        case GateKind::ControlledPhase:
            if (nc != 1) fail("kind takes exactly one control");
            break;
        case GateKind::Toffoli:
            if (nc != 2) fail("kind takes exactly two controls");
            break;
        case GateKind::MultiControlledX:
        case GateKind::MultiControlledZ:
        case GateKind::ControlledSwap:
            if (nc < 1) fail("kind requires at least one control");
            break;
    }

    std::unordered_set<int> seen;
    for (int q : g.qubits()) {
        if (q < 0 || q >= width) fail("qubit index out of range");
        if (!seen.insert(q).second) fail("duplicate qubit");
    }
    for (int q : g.negated) {
        if (std::find(g.controls.begin(), g.controls.end(), q) == g.controls.end())
            fail("negated qubit is not a control");
    }
}

}  // namespace qshift
