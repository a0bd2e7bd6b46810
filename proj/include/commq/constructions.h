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

#ifndef COMMQ_CONSTRUCTIONS_H
#define COMMQ_CONSTRUCTIONS_H

#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "commq/analysis.h"
#include "commq/circuit.h"

namespace commq {

// ---------------------------------------------------------------------------
// OR reduction
// ---------------------------------------------------------------------------

/// ceil(log2(n_inputs + 1)): number of ancillas the OR reduction of n_inputs bits needs.
std::size_t or_ancilla_count(std::size_t n_inputs);

enum class OrVariant { kPlain, kCommuting };

/// Location of the controlled-phase block of an OR reduction inside a circuit.
struct OrMiddle {
    std::vector<Qubit> controls;
    std::vector<Qubit> targets;
    /// Gate index range [begin, end) holding the controlled phases.
    std::size_t begin = 0;
    std::size_t end = 0;
};

/// (I (x) H) CR(2*pi/2^level) (I (x) H) on (control, target), as one two-qubit gate.
Gate commuting_or_gate(Qubit control, Qubit target, int level);

/// Appends an OR reduction of `controls` onto `targets` (|targets| = or_ancilla_count).
///
/// kPlain: H on every target, CR(2*pi/2^(k+1)) from every control to target k
/// (control-major, then level), H on every target. kCommuting: one
/// commuting_or_gate per (control, target) pair in the same order.
/// Returns the block of controlled phases (for kCommuting, the whole append).
OrMiddle append_or_reduction(
    Circuit &circuit, std::span<const Qubit> controls, std::span<const Qubit> targets, OrVariant variant);

/// b input qubits (0..b-1) and m = or_ancilla_count(b) zero ancillas (b..b+m-1)
/// as outputs. Measures 0^m iff the input is 0^b.
Circuit or_reduction_noncommuting(std::size_t b);
Circuit or_reduction_commuting(std::size_t b);

// ---------------------------------------------------------------------------
// Teleportation and depth-3 compression
// ---------------------------------------------------------------------------

/// Two decompositions of one-qubit teleportation with postselected 00 outcome.
///
/// kCnot: first half {H(a1), CNOT(a1->a2)}, second half {CNOT(in->a1), H(in)}.
/// kCz:   first half {H(a1), H(a2), CZ(a1,a2)}, second half {CZ(in,a1), H(in), H(a1)}.
///
/// Both move the input state to a2 when (in, a1) is measured 00, with
/// probability 1/4. Only kCz keeps the conjugated OR gates 5-local after
/// compression; see compress_depth3.
enum class TeleportForm { kCnot, kCz };

struct TeleportHalves {
    std::vector<Gate> first;
    std::vector<Gate> second;
};
TeleportHalves teleport_halves(Qubit in, Qubit a1, Qubit a2, TeleportForm form);

/// Three qubits: input (0), a1 (1), a2 (2). Outputs {2}; postselect {0, 1}.
Circuit teleport_gadget(TeleportForm form = TeleportForm::kCnot);

struct CompressedCircuit {
    /// Layer 1: every teleportation's first half (one two-qubit gate each).
    /// Layer 2: the original gates, rewired onto wire segments.
    /// Layer 3: every teleportation's second half.
    Circuit circuit;
    /// The teleportation qubits, two per teleportation (in, a1), in insertion order.
    std::vector<Qubit> postselection_qubits;
    /// origin_map[q] = qubit that carries original qubit q at the end.
    std::vector<Qubit> origin_map;
    /// The three construction layers (gate indices).
    LayerDecomposition layers;

    std::size_t b() const {
        return postselection_qubits.size();
    }
};

/// Gate-teleportation compression.
///
/// A teleportation is inserted on every wire segment between two consecutive
/// gates on the same qubit; wires with at most one gate are left alone. The
/// result's postselect list is the original postselection qubits (mapped)
/// followed by the teleportation qubits; outputs are mapped through
/// origin_map. Conditioned on 0^b over the teleportation qubits (probability
/// exactly 2^-b) the output distribution equals the original's. The greedy
/// depth of the result is min(depth(c), 3).
///
/// Accepts elementary and derived gates only (DomainError for Composite).
CompressedCircuit compress_depth3(const Circuit &c, TeleportForm form = TeleportForm::kCz);

/// Copy of `a` whose outputs are postselect() followed by the single original
/// output: the bookkeeping build_En and build_En_prime expect.
Circuit with_postselection_outputs(const Circuit &a);

// ---------------------------------------------------------------------------
// E_n and the commuting circuit built from it
// ---------------------------------------------------------------------------

struct EnCircuit {
    Circuit circuit;
    /// `a` embedded in the full register with the E_n metadata, gates of `a` only.
    Circuit a_embedded;
    /// The CNOT copy gate followed by the commuting OR gates.
    std::vector<Gate> middle;
    std::vector<Qubit> or_ancillas;
    Qubit copy_ancilla = 0;
    /// Number of postselection outputs of `a` is b + 1.
    std::size_t b = 0;
    std::size_t m = 0;
};

/// E = [A; CNOT(q_out -> copy); commuting OR over the b+1 postselection
/// outputs onto m = ceil(log2(b+2)) ancillas; A^dagger].
///
/// `a.outputs()` lists the b+1 postselection qubits followed by q_out. Outputs
/// of E are the m OR ancillas followed by the copy ancilla, so
/// Pr[E = 0^m y] = Pr[A = 0^{b+1} y]. Throws ValidationError when `a` has fewer
/// than two outputs.
EnCircuit build_En(const Circuit &a, bool append_inverse = true);

struct ConjugateOptions {
    std::size_t max_arity = kDefaultCompositeArity;
    /// Largest backward light cone that will be materialised as a dense matrix.
    std::size_t max_cone = 10;
    double tolerance = kDefaultTolerance;
};

/// One Composite gate A^dagger g A per g in `middle`, restricted to its
/// numerically computed support. `a` spans the full register; the result
/// keeps its metadata. Throws DomainError naming the gate if a support or
/// light cone exceeds the caps.
Circuit conjugate_commuting(
    const Circuit &a, std::span<const Gate> middle, const ConjugateOptions &options = {});

/// build_En followed by conjugate_commuting of its middle gates.
Circuit build_conjugated_En(const Circuit &a, const ConjugateOptions &options = {});

// ---------------------------------------------------------------------------
// Magic states, E'_n and fan-out
// ---------------------------------------------------------------------------

/// R(pi/4) H |0> = (|0> + e^{i pi/4} |1>) / sqrt(2).
QubitState magic_state();

struct MagicCompiled {
    Circuit circuit;
    /// One fresh magic-state ancilla per replaced R(pi/4), in gate order.
    std::vector<Qubit> gadget_qubits;
};

/// Replaces each R(pi/4) on q by CNOT(q -> fresh |phi> ancilla), postselecting
/// the ancilla on 0. Other gates must be Clifford (DomainError otherwise).
/// The gadget ancillas are appended to the postselect list.
MagicCompiled magic_compile(const Circuit &c);

struct EnPrimeCircuit {
    Circuit circuit;
    OrMiddle middle;
    std::vector<Qubit> or_ancillas;
    Qubit copy_ancilla = 0;
    std::size_t b = 0;
    std::size_t m = 0;
};

/// E' = [A; CNOT(q_out -> copy); plain OR over the b+1 postselection outputs].
/// Same output bookkeeping as build_En, no trailing A^dagger.
EnPrimeCircuit build_En_prime(const Circuit &a);

/// CNOTs from `control` onto each target, in order.
std::vector<Gate> fanout(Qubit control, std::span<const Qubit> targets);

/// Appends fanout(control, targets) after checking every target is a |0>
/// ancilla not yet touched by any gate (ValidationError otherwise).
void append_fanout(Circuit &circuit, Qubit control, std::span<const Qubit> targets);

struct FanoutDecomposition {
    Circuit circuit;
    /// Gate range of the controlled-phase layer.
    std::size_t layer_begin = 0;
    std::size_t layer_end = 0;
    /// copies[j][k]: wire carrying control j for target k (control block),
    /// followed by target copies; fresh ancillas start at `first_ancilla`.
    std::vector<std::vector<Qubit>> control_copies;
    std::vector<std::vector<Qubit>> target_copies;
    Qubit first_ancilla = 0;
};

/// Rewrites the controlled-phase block `middle` of `circuit`: fan out each
/// control into one wire per target and each target into one wire per control
/// (the original qubit is the first wire, fresh |0> ancillas the rest, control
/// copies allocated before target copies), apply every controlled phase in one
/// layer on disjoint wire pairs, then undo the fan-outs in reverse.
FanoutDecomposition decompose_fanout_or(const Circuit &circuit, const OrMiddle &middle);

/// Plain OR reduction of b inputs with its middle part fan-out decomposed.
FanoutDecomposition fanout_or_reduction(std::size_t b);

/// Split of a circuit as Clifford prefix, one layer holding every non-Clifford
/// gate, Clifford suffix.
struct CliffordLayerAudit {
    std::vector<std::size_t> non_clifford;
    /// [first non-Clifford, last non-Clifford] span of gate indices.
    std::size_t span_begin = 0;
    std::size_t span_end = 0;
    /// Every gate in the span acts on qubits disjoint from the others in the span.
    bool span_disjoint = false;
    /// Distinct greedy layers holding non-Clifford gates (informational; the
    /// fan-out chains stagger them).
    std::size_t greedy_layers = 0;
    /// Greedy layers of the prefix, the span as one layer, greedy layers of the suffix.
    LayerDecomposition layering;
    bool layering_valid = false;
    /// Layers of `layering` holding a non-Clifford gate.
    std::size_t non_clifford_layers = 0;

    bool single_layer() const {
        return !non_clifford.empty() && span_disjoint && layering_valid && non_clifford_layers == 1;
    }
};
CliffordLayerAudit audit_non_clifford_layer(const Circuit &circuit);

// ---------------------------------------------------------------------------
// Manifests
// ---------------------------------------------------------------------------

/// Roles, outputs, postselection list and origin map of a built circuit.
nlohmann::json construction_manifest(const Circuit &circuit);
nlohmann::json construction_manifest(const CompressedCircuit &compressed);

}  // namespace commq

#endif
