#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qshift/gates.hpp"

namespace qshift {

struct RegisterRange {
    int begin = 0;
    int end = 0;  // exclusive

    int size() const { return end - begin; }
    bool empty() const { return begin >= end; }
    bool contains(int q) const { return q >= begin && q < end; }
    std::vector<int> qubits() const {
        std::vector<int> qs;
        for (int q = begin; q < end; ++q) qs.push_back(q);
        return qs;
    }
    bool operator==(const RegisterRange&) const = default;
};

/// Qubit assignment for a QShift-SA circuit. Qubit 0 is the least
/// significant bit of basis-state indices. Pairwise layouts have empty
/// address registers; the ancilla range is empty until a with_ancilla
/// transpile appends one.
struct RegisterLayout {
    int n = 0;  // sequence length
    int m = 0;  // candidate count; 0 = pairwise
    RegisterRange data_x, data_y, addr_i, addr_j, shift, sign, mismatch, distance, phase, ancilla;

    bool is_pairwise() const { return m == 0; }
    int width() const;
    int shift_bits() const { return shift.size(); }
    int distance_bits() const { return distance.size(); }

    /// Grover search registers: addrI + addrJ + shift + sign (multi) or
    /// shift + sign (pairwise), ascending qubit order.
    std::vector<int> search_qubits() const;

    /// Named range lookup ("dataX", "dataY", "addrI", "addrJ", "shift",
    /// "sign", "mismatch", "distance", "phase", "ancilla").
    const RegisterRange* find(std::string_view name) const;
    std::vector<std::pair<std::string, const RegisterRange*>> named_ranges() const;

    static RegisterLayout pairwise(int n);
    static RegisterLayout multi(int n, int m);

    bool operator==(const RegisterLayout&) const = default;
};

/// Number of bits needed to store values in [0, x); at least 1.
int bits_for(int x);

struct Circuit {
    int width = 0;
    std::vector<GateApp> gates;
    std::optional<RegisterLayout> layout;

    Circuit() = default;
    explicit Circuit(int w) : width(w) {}
    explicit Circuit(const RegisterLayout& l) : width(l.width()), layout(l) {}

    Circuit& add(GateApp g);
    std::size_t size() const { return gates.size(); }
};

/// Gates of b appended after gates of a. Throws on width or layout mismatch.
Circuit compose(const Circuit& a, const Circuit& b);

/// Reversed gate order with each gate replaced by its adjoint.
Circuit inverse(const Circuit& c);

}  // namespace qshift
