#pragma once

#include <array>
#include <vector>

#include "qlaem/linalg.hpp"

// Dense one- and two-qubit state vectors and the small gate set needed for
// Bell-state preparation and decoding.  Basis order is |00>, |01>, |10>,
// |11> with the first qubit as the high bit.
namespace qlaem {

using Ket = std::vector<cplx>;

Ket ket_zero();  // |0>
Ket ket_one();   // |1>

// Computational basis state of `qubits` qubits (dimension 2^qubits).
Ket basis_state(int qubits, std::size_t index);

// Kronecker product of two normalized single-qubit states.
Ket tensor_product(const Ket& a, const Ket& b);

Ket apply_cnot(const Ket& s);            // two-qubit, first qubit controls
Ket apply_hadamard(const Ket& s);        // single-qubit
Ket apply_hadamard_first(const Ket& s);  // H (x) I on a two-qubit state

// The four Bell states in the order Psi+, Psi-, Phi+, Phi-:
//   Psi+/- = (|00> +/- |11>) / sqrt(2),  Phi+/- = (|01> +/- |10>) / sqrt(2)
std::array<Ket, 4> bell_states();

// Measurement circuit CNOT then H (x) I; maps Psi+ -> |00>, Psi- -> |10>,
// Phi+ -> |01>, Phi- -> |11>.
Ket bell_decode(const Ket& s);

// Inverse circuit H (x) I then CNOT; bell_encode(bell_decode(s)) == s.
Ket bell_encode(const Ket& s);

// |amplitude|^2 of the given basis index; state must be normalized.
double probability(const Ket& s, std::size_t index);

cplx inner_product(const Ket& a, const Ket& b);

}  // namespace qlaem
