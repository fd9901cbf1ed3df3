#include "qlaem/qubits.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qlaem {

namespace {

void require_dim(const Ket& s, std::size_t dim, const char* who) {
    if (s.size() != dim) {
        throw std::invalid_argument(std::string(who) + ": expected dimension " +
                                    std::to_string(dim) + ", got " + std::to_string(s.size()));
    }
}

double norm_sq(const Ket& s) {
    double n = 0.0;
    for (const cplx& a : s) n += std::norm(a);
    return n;
}

void require_normalized(const Ket& s, const char* who) {
    if (std::abs(norm_sq(s) - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(who) + ": state is not normalized");
    }
}

}  // namespace

Ket ket_zero() { return {cplx{1.0, 0.0}, cplx{0.0, 0.0}}; }

Ket ket_one() { return {cplx{0.0, 0.0}, cplx{1.0, 0.0}}; }

Ket basis_state(int qubits, std::size_t index) {
    if (qubits < 1 || qubits > 20) {
        throw std::invalid_argument("basis_state: qubit count out of range");
    }
    const std::size_t dim = std::size_t{1} << qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis_state: index " + std::to_string(index) +
                                    " out of range for dimension " + std::to_string(dim));
    }
    Ket s(dim, cplx{});
    s[index] = 1.0;
    return s;
}

Ket tensor_product(const Ket& a, const Ket& b) {
    require_dim(a, 2, "tensor_product");
    require_dim(b, 2, "tensor_product");
    require_normalized(a, "tensor_product");
    require_normalized(b, "tensor_product");
    return {a[0] * b[0], a[0] * b[1], a[1] * b[0], a[1] * b[1]};
}

Ket apply_cnot(const Ket& s) {
    require_dim(s, 4, "apply_cnot");
    // |10> <-> |11>, control is the first qubit.
    return {s[0], s[1], s[3], s[2]};
}

Ket apply_hadamard(const Ket& s) {
    require_dim(s, 2, "apply_hadamard");
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (s[0] + s[1]), r * (s[0] - s[1])};
}

Ket apply_hadamard_first(const Ket& s) {
    require_dim(s, 4, "apply_hadamard_first");
    const double r = 1.0 / std::sqrt(2.0);
    return {r * (s[0] + s[2]), r * (s[1] + s[3]), r * (s[0] - s[2]), r * (s[1] - s[3])};
}

std::array<Ket, 4> bell_states() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Ket{r, 0.0, 0.0, r},    // Psi+
            Ket{r, 0.0, 0.0, -r},   // Psi-
            Ket{0.0, r, r, 0.0},    // Phi+
            Ket{0.0, r, -r, 0.0}};  // Phi-
}

Ket bell_decode(const Ket& s) { return apply_hadamard_first(apply_cnot(s)); }

Ket bell_encode(const Ket& s) { return apply_cnot(apply_hadamard_first(s)); }

double probability(const Ket& s, std::size_t index) {
    if (index >= s.size()) {
        throw std::invalid_argument("probability: basis index out of range");
    }
    require_normalized(s, "probability");
    return std::norm(s[index]);
}

cplx inner_product(const Ket& a, const Ket& b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("inner_product: dimension mismatch");
    }
    cplx acc{};
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

}  // namespace qlaem
