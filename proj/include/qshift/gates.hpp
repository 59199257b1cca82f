#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qshift {

using Complex = std::complex<double>;

enum class GateKind {
    PauliX,
    Hadamard,
    U,
    ControlledX,
    Toffoli,
    MultiControlledX,
    Swap,
    ControlledSwap,
    Phase,
    ControlledPhase,
    MultiControlledZ,
};

std::string_view to_string(GateKind k);
std::optional<GateKind> gate_kind_from_string(std::string_view name);

/// One gate application: a kind plus the qubits it acts on. `negated` is the
/// subset of `controls` that trigger on |0> instead of |1>.
struct GateApp {
    GateKind kind;
    std::vector<int> controls;
    std::vector<int> negated;
    std::vector<int> targets;
    std::vector<double> params;

    // Shorthand constructors for the common kinds.
    static GateApp x(int t) { return {GateKind::PauliX, {}, {}, {t}, {}}; }
    static GateApp h(int t) { return {GateKind::Hadamard, {}, {}, {t}, {}}; }
    static GateApp u(int t, double theta, double phi, double lambda) {
        return {GateKind::U, {}, {}, {t}, {theta, phi, lambda}};
    }
    static GateApp cx(int c, int t) { return {GateKind::ControlledX, {c}, {}, {t}, {}}; }
    static GateApp toffoli(int c0, int c1, int t) {
        return {GateKind::Toffoli, {c0, c1}, {}, {t}, {}};
    }
    static GateApp mcx(std::vector<int> ctrls, int t, std::vector<int> negs = {}) {
        return {GateKind::MultiControlledX, std::move(ctrls), std::move(negs), {t}, {}};
    }
    static GateApp mcz(std::vector<int> ctrls, int t, std::vector<int> negs = {}) {
        return {GateKind::MultiControlledZ, std::move(ctrls), std::move(negs), {t}, {}};
    }
    static GateApp swap(int a, int b) { return {GateKind::Swap, {}, {}, {a, b}, {}}; }
    static GateApp cswap(std::vector<int> ctrls, int a, int b, std::vector<int> negs = {}) {
        return {GateKind::ControlledSwap, std::move(ctrls), std::move(negs), {a, b}, {}};
    }
    static GateApp phase(int t, double angle) {
        return {GateKind::Phase, {}, {}, {t}, {angle}};
    }
    static GateApp cphase(int c, int t, double angle) {
        return {GateKind::ControlledPhase, {c}, {}, {t}, {angle}};
    }

    /// All qubits touched by the gate (controls then targets).
    std::vector<int> qubits() const;
    bool operator==(const GateApp&) const = default;
};

/// Adjoint gate: self-inverse kinds unchanged, phase angles negated,
/// U(theta,phi,lambda) -> U(-theta,-lambda,-phi).
GateApp adjoint(const GateApp& g);

/// 2x2 unitary acting on the target of a single-target gate. For the
/// controlled kinds this is the matrix applied when all controls are
/// satisfied (X for ControlledX/Toffoli/MultiControlledX, Z-like phases
/// for the rest). Swap kinds have no single-target matrix.
std::array<Complex, 4> target_unitary(const GateApp& g);

/// Number of targets the kind requires (2 for swaps, 1 otherwise).
int target_count(GateKind k);

/// Expected parameter count (U: 3, Phase/ControlledPhase: 1, else 0).
int param_count(GateKind k);

/// Throws std::invalid_argument when the gate violates its invariants or
/// touches qubits outside [0, width).
void validate_gate(const GateApp& g, int width);

}  // namespace qshift
