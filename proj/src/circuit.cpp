#include "qshift/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace qshift {

int bits_for(int x) {
    int b = 1;
    while ((1 << b) < x) ++b;
    return b;
}

int RegisterLayout::width() const {
    int w = 0;
    for (const auto& [name, r] : named_ranges()) w = std::max(w, r->end);
    return w;
}

std::vector<int> RegisterLayout::search_qubits() const {
    std::vector<int> qs;
    for (const RegisterRange* r : {&addr_i, &addr_j, &shift, &sign})
        for (int q = r->begin; q < r->end; ++q) qs.push_back(q);
    std::sort(qs.begin(), qs.end());
    return qs;
}

const RegisterRange* RegisterLayout::find(std::string_view name) const {
    for (const auto& [n, r] : named_ranges())
        if (n == name) return r;
    return nullptr;
}

std::vector<std::pair<std::string, const RegisterRange*>> RegisterLayout::named_ranges() const {
    return {
        {"dataX", &data_x},   {"dataY", &data_y},     {"addrI", &addr_i},
        {"addrJ", &addr_j},   {"shift", &shift},      {"sign", &sign},
        {"mismatch", &mismatch}, {"distance", &distance}, {"phase", &phase},
        {"ancilla", &ancilla},
    };
}

namespace {

RegisterLayout make_layout(int n, int m) {
    if (n < 1) throw std::invalid_argument("sequence length must be positive");
    RegisterLayout l;
    l.n = n;
    l.m = m;
    int at = 0;
    auto take = [&at](int k) {
        RegisterRange r{at, at + k};
        at += k;
        return r;
    };
    const int a = m > 0 ? bits_for(m) : 0;
    l.data_x = take(2 * n);
    l.data_y = take(2 * n);
    l.addr_i = take(a);
    l.addr_j = take(a);
    l.shift = take(bits_for(n));
    l.sign = take(1);
    l.mismatch = take(n);
    l.distance = take(bits_for(n + 1));
    l.phase = take(1);
    l.ancilla = take(0);
    return l;
}

}  // namespace

RegisterLayout RegisterLayout::pairwise(int n) { return make_layout(n, 0); }

RegisterLayout RegisterLayout::multi(int n, int m) {
    if (m < 1) throw std::invalid_argument("candidate count must be positive");
    return make_layout(n, m);
}

Circuit& Circuit::add(GateApp g) {
    validate_gate(g, width);
    gates.push_back(std::move(g));
    return *this;
}

Circuit compose(const Circuit& a, const Circuit& b) {
    if (a.width != b.width) throw std::invalid_argument("compose: width mismatch");
    if (a.layout != b.layout) throw std::invalid_argument("compose: layout mismatch");
    Circuit r = a;
    r.gates.insert(r.gates.end(), b.gates.begin(), b.gates.end());
    return r;
}

Circuit inverse(const Circuit& c) {
    Circuit r(c.width);
    r.layout = c.layout;
    r.gates.reserve(c.gates.size());
    for (auto it = c.gates.rbegin(); it != c.gates.rend(); ++it) r.gates.push_back(adjoint(*it));
    return r;
}

}  // namespace qshift
