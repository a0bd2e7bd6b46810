// Copyright 2026 The commq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commq/pauli.h"

#include <array>
#include <cmath>

#include "commq/error.h"

namespace commq {

namespace {

// a * b = i^kProductPhase[a][b] * (a ^ b), codes I=0, X=1, Z=2, Y=3
constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},  // X*Z = -iY, X*Y = iZ
    {0, 1, 0, 3},  // Z*X = iY, Z*Y = -iX
    {0, 3, 1, 0},  // Y*X = -iZ, Y*Z = iX
};

// Pauli operator on up to two qubits with an i^phase prefactor.
struct Local {
    int phase = 0;
    std::array<std::uint8_t, 2> letters{0, 0};
};

Local mul(const Local &a, const Local &b) {
    Local r;
    r.phase = a.phase + b.phase;
    for (int k = 0; k < 2; k++) {
        r.phase += kProductPhase[a.letters[k]][b.letters[k]];
        r.letters[k] = a.letters[k] ^ b.letters[k];
    }
    r.phase &= 3;
    return r;
}

// Images of the four letters, given the images of X and Z. Y = i X Z.
std::array<Local, 4> one_qubit_table(Local img_x, Local img_z) {
    Local y = mul(img_x, img_z);
    y.phase = (y.phase + 1) & 3;
    return {Local{}, img_x, img_z, y};
}

// Images of the 16 letter pairs (index a + 4*b) from the images of X_a, Z_a, X_b, Z_b.
std::array<Local, 16> two_qubit_table(Local xa, Local za, Local xb, Local zb) {
    auto ta = one_qubit_table(xa, za);
    auto tb = one_qubit_table(xb, zb);
    std::array<Local, 16> out;
    for (int a = 0; a < 4; a++) {
        for (int b = 0; b < 4; b++) {
            out[a + 4 * b] = mul(ta[a], tb[b]);
        }
    }
    return out;
}

Local l1(int phase, std::uint8_t letter) {
    return Local{phase, {letter, 0}};
}
Local l2(int phase, std::uint8_t a, std::uint8_t b) {
    return Local{phase, {a, b}};
}

constexpr std::uint8_t I = 0, X = 1, Z = 2, Y = 3;

enum class OneQubit { kIdentity, kH, kP, kPdag, kZ, kX };
enum class TwoQubit { kIdentity, kCZ, kCNOT };

const std::array<Local, 4> &one_table(OneQubit kind) {
    // g^dagger sigma g
    static const std::array<Local, 4> identity = one_qubit_table(l1(0, X), l1(0, Z));
    static const std::array<Local, 4> h = one_qubit_table(l1(0, Z), l1(0, X));
    static const std::array<Local, 4> p = one_qubit_table(l1(2, Y), l1(0, Z));
    static const std::array<Local, 4> pdag = one_qubit_table(l1(0, Y), l1(0, Z));
    static const std::array<Local, 4> z = one_qubit_table(l1(2, X), l1(0, Z));
    static const std::array<Local, 4> x = one_qubit_table(l1(0, X), l1(2, Z));
    switch (kind) {
        case OneQubit::kH:
            return h;
        case OneQubit::kP:
            return p;
        case OneQubit::kPdag:
            return pdag;
        case OneQubit::kZ:
            return z;
        case OneQubit::kX:
            return x;
        default:
            return identity;
    }
}

const std::array<Local, 16> &two_table(TwoQubit kind) {
    static const std::array<Local, 16> identity =
        two_qubit_table(l2(0, X, I), l2(0, Z, I), l2(0, I, X), l2(0, I, Z));
    static const std::array<Local, 16> cz = two_qubit_table(l2(0, X, Z), l2(0, Z, I), l2(0, Z, X), l2(0, I, Z));
    // (control, target)
    static const std::array<Local, 16> cnot = two_qubit_table(l2(0, X, X), l2(0, Z, I), l2(0, I, X), l2(0, Z, Z));
    switch (kind) {
        case TwoQubit::kCZ:
            return cz;
        case TwoQubit::kCNOT:
            return cnot;
        default:
            return identity;
    }
}

struct Classified {
    bool clifford = false;
    bool two = false;
    OneQubit one_kind = OneQubit::kIdentity;
    TwoQubit two_kind = TwoQubit::kIdentity;
};

Classified classify(const Gate &g) {
    Classified c;
    if (g.is<gates::H>()) {
        c = {true, false, OneQubit::kH};
    } else if (g.is<gates::X>()) {
        c = {true, false, OneQubit::kX};
    } else if (auto r = g.get_if<gates::PhaseShift>()) {
        if (r->level == 0) {
            c = {true, false, OneQubit::kIdentity};
        } else if (r->level == 1) {
            c = {true, false, OneQubit::kZ};
        } else if (r->level == 2) {
            c = {true, false, r->sign > 0 ? OneQubit::kP : OneQubit::kPdag};
        }
    } else if (g.is<gates::CZ>()) {
        c = {true, true, OneQubit::kIdentity, TwoQubit::kCZ};
    } else if (g.is<gates::CNOT>()) {
        c = {true, true, OneQubit::kIdentity, TwoQubit::kCNOT};
    } else if (auto r = g.get_if<gates::ControlledPhase>()) {
        if (r->level == 0) {
            c = {true, true, OneQubit::kIdentity, TwoQubit::kIdentity};
        } else if (r->level == 1) {
            c = {true, true, OneQubit::kIdentity, TwoQubit::kCZ};
        }
    }
    return c;
}

}  // namespace

char pauli_char(Pauli p) {
    return "IXZY"[static_cast<int>(p)];
}

PauliString::PauliString(std::size_t n_qubits) : n_qubits_(n_qubits), words_((n_qubits + 31) / 32, 0) {
}

PauliString PauliString::parse(std::string_view text) {
    int phase = 0;
    std::size_t pos = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        if (text[pos] == '-') {
            phase = 2;
        }
        pos++;
    }
    if (pos < text.size() && text[pos] == 'i') {
        phase += 1;
        pos++;
    }
    PauliString p(text.size() - pos);
    for (std::size_t q = 0; pos < text.size(); pos++, q++) {
        switch (text[pos]) {
            case 'I':
            case '_':
                break;
            case 'X':
                p.set_letter(q, Pauli::X);
                break;
            case 'Y':
                p.set_letter(q, Pauli::Y);
                break;
            case 'Z':
                p.set_letter(q, Pauli::Z);
                break;
            default:
                throw ParseError("bad Pauli letter '" + std::string(1, text[pos]) + "'", "char " + std::to_string(pos));
        }
    }
    p.set_phase_exponent(phase);
    return p;
}

PauliString PauliString::z_on(std::size_t n_qubits, std::span<const Qubit> qubits) {
    PauliString p(n_qubits);
    for (auto q : qubits) {
        if (q >= n_qubits) {
            throw ContractError("qubit " + std::to_string(q) + " out of range");
        }
        p.set_letter(q, Pauli::Z);
    }
    return p;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.n_qubits_ != n_qubits_) {
        throw ContractError("Pauli strings differ in length");
    }
    int phase = phase_ + other.phase_;
    for (std::size_t q = 0; q < n_qubits_; q++) {
        auto a = static_cast<int>(letter(q));
        auto b = static_cast<int>(other.letter(q));
        phase += kProductPhase[a][b];
        set_letter(q, static_cast<Pauli>(a ^ b));
    }
    set_phase_exponent(phase);
    return *this;
}

Matrix PauliString::to_matrix() const {
    static const std::array<Matrix, 4> letters = [] {
        std::array<Matrix, 4> m;
        for (auto &x : m) {
            x = Matrix::Zero(2, 2);
        }
        m[0] << 1, 0, 0, 1;
        m[1] << 0, 1, 1, 0;
        m[2] << 1, 0, 0, -1;
        m[3] << 0, Complex(0, -1), Complex(0, 1), 0;
        return m;
    }();
    Matrix out = Matrix::Identity(1, 1);
    // qubit q is bit q: the highest qubit is the leftmost Kronecker factor
    for (std::size_t q = 0; q < n_qubits_; q++) {
        const Matrix &s = letters[static_cast<int>(letter(q))];
        Matrix next(out.rows() * 2, out.cols() * 2);
        for (int r = 0; r < 2; r++) {
            for (int c = 0; c < 2; c++) {
                next.block(r * out.rows(), c * out.cols(), out.rows(), out.cols()) = s(r, c) * out;
            }
        }
        out = std::move(next);
    }
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return powers[phase_] * out;
}

std::string PauliString::str() const {
    static const char *prefix[4] = {"+", "+i", "-", "-i"};
    std::string s = prefix[phase_];
    for (std::size_t q = 0; q < n_qubits_; q++) {
        s.push_back(pauli_char(letter(q)));
    }
    return s;
}

bool is_clifford(const Gate &gate) {
    return classify(gate).clifford;
}

void conjugate_in_place(PauliString &p, const Gate &g) {
    auto c = classify(g);
    if (!c.clifford) {
        throw DomainError("non-Clifford gate " + g.str());
    }
    auto qs = g.qubits();
    for (auto q : qs) {
        if (q >= p.n_qubits()) {
            throw ContractError("gate " + g.str() + " outside the Pauli string");
        }
    }
    if (!c.two) {
        auto l = static_cast<int>(p.letter(qs[0]));
        const Local &img = one_table(c.one_kind)[l];
        p.set_letter(qs[0], static_cast<Pauli>(img.letters[0]));
        p.add_phase(img.phase);
        return;
    }
    auto a = static_cast<int>(p.letter(qs[0]));
    auto b = static_cast<int>(p.letter(qs[1]));
    const Local &img = two_table(c.two_kind)[a + 4 * b];
    p.set_letter(qs[0], static_cast<Pauli>(img.letters[0]));
    p.set_letter(qs[1], static_cast<Pauli>(img.letters[1]));
    p.add_phase(img.phase);
}

PauliString conjugate(const PauliString &p, const Gate &g) {
    PauliString out = p;
    conjugate_in_place(out, g);
    return out;
}

double expectation_product(const PauliString &p, std::span<const QubitState> qubit_states) {
    if (qubit_states.size() != p.n_qubits()) {
        throw ContractError("expectation_product: " + std::to_string(qubit_states.size()) + " states for " +
                            std::to_string(p.n_qubits()) + " letters");
    }
    static const Complex powers[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Complex value = powers[p.phase_exponent()];
    for (std::size_t q = 0; q < p.n_qubits() && value != Complex{0}; q++) {
        const auto &s = qubit_states[q];
        Complex cross = std::conj(s[0]) * s[1];
        switch (p.letter(q)) {
            case Pauli::I:
                value *= std::norm(s[0]) + std::norm(s[1]);
                break;
            case Pauli::X:
                value *= 2 * cross.real();
                break;
            case Pauli::Z:
                value *= std::norm(s[0]) - std::norm(s[1]);
                break;
            case Pauli::Y:
                value *= 2 * cross.imag();
                break;
        }
    }
    if (std::abs(value.imag()) > 1e-12) {
        throw ConsistencyError("expectation of " + p.str() + " is not real (imaginary part " +
                               std::to_string(value.imag()) + ")");
    }
    return value.real();
}

double expectation_product(const PauliString &p, const Bits &inputs, std::span<const QubitState> ancillas) {
    std::vector<QubitState> states;
    states.reserve(inputs.size() + ancillas.size());
    for (auto b : inputs) {
        states.push_back(b ? QubitState{0.0, 1.0} : QubitState{1.0, 0.0});
    }
    states.insert(states.end(), ancillas.begin(), ancillas.end());
    return expectation_product(p, states);
}

std::vector<QubitState> product_input_state(const Circuit &circuit, const Bits &input) {
    if (input.size() != circuit.n_inputs()) {
        throw ContractError("input has " + std::to_string(input.size()) + " bits; circuit has " +
                            std::to_string(circuit.n_inputs()) + " input qubits");
    }
    std::vector<QubitState> states;
    std::size_t next = 0;
    for (const auto &r : circuit.roles()) {
        if (r.kind() == RoleKind::kInput) {
            states.push_back(input[next++] ? QubitState{0.0, 1.0} : QubitState{1.0, 0.0});
        } else {
            states.push_back(r.state());
        }
    }
    return states;
}

}  // namespace commq
