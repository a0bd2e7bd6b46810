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

#include "commq/constructions.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "commq/error.h"
#include "commq/pauli.h"
#include "commq/statevector.h"

namespace commq {

namespace {

// One Composite gate equal to running `gs` in order, list-ordered over `qubits`.
Gate group_gates(const std::vector<Gate> &gs, const std::vector<Qubit> &qubits) {
    Matrix little = local_unitary(gs, qubits);
    return Gate::composite(qubits, reverse_qubit_order(little, qubits.size()));
}

std::vector<Qubit> iota_qubits(Qubit begin, std::size_t count) {
    std::vector<Qubit> out(count);
    for (std::size_t i = 0; i < count; i++) {
        out[i] = begin + static_cast<Qubit>(i);
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// OR reduction

std::size_t or_ancilla_count(std::size_t n_inputs) {
    std::size_t m = 0;
    while ((std::size_t{1} << m) < n_inputs + 1) {
        m++;
    }
    return m;
}

Gate commuting_or_gate(Qubit control, Qubit target, int level) {
    std::vector<Gate> gs = {Gate::h(target), Gate::cphase(control, target, +1, level), Gate::h(target)};
    return group_gates(gs, {control, target});
}

OrMiddle append_or_reduction(
    Circuit &circuit, std::span<const Qubit> controls, std::span<const Qubit> targets, OrVariant variant) {
    OrMiddle middle;
    middle.controls.assign(controls.begin(), controls.end());
    middle.targets.assign(targets.begin(), targets.end());
    if (variant == OrVariant::kPlain) {
        for (auto t : targets) {
            circuit.append(Gate::h(t));
        }
    }
    middle.begin = circuit.gates().size();
    for (auto c : controls) {
        for (std::size_t k = 0; k < targets.size(); k++) {
            int level = static_cast<int>(k) + 1;
            if (variant == OrVariant::kPlain) {
                circuit.append(Gate::cphase(c, targets[k], +1, level));
            } else {
                circuit.append(commuting_or_gate(c, targets[k], level));
            }
        }
    }
    middle.end = circuit.gates().size();
    if (variant == OrVariant::kPlain) {
        for (auto t : targets) {
            circuit.append(Gate::h(t));
        }
    }
    return middle;
}

namespace {

Circuit or_reduction(std::size_t b, OrVariant variant) {
    if (b == 0) {
        throw ContractError("OR reduction needs at least one input");
    }
    std::size_t m = or_ancilla_count(b);
    Circuit c(b + m);
    for (std::size_t q = 0; q < b; q++) {
        c.set_role(static_cast<Qubit>(q), QubitRole::input());
    }
    auto controls = iota_qubits(0, b);
    auto targets = iota_qubits(static_cast<Qubit>(b), m);
    append_or_reduction(c, controls, targets, variant);
    c.set_outputs(targets);
    return c;
}

}  // namespace

Circuit or_reduction_noncommuting(std::size_t b) {
    return or_reduction(b, OrVariant::kPlain);
}

Circuit or_reduction_commuting(std::size_t b) {
    return or_reduction(b, OrVariant::kCommuting);
}

// ---------------------------------------------------------------------------
// Teleportation and compression

TeleportHalves teleport_halves(Qubit in, Qubit a1, Qubit a2, TeleportForm form) {
    if (form == TeleportForm::kCnot) {
        return {{Gate::h(a1), Gate::cnot(a1, a2)}, {Gate::cnot(in, a1), Gate::h(in)}};
    }
    return {{Gate::h(a1), Gate::h(a2), Gate::cz(a1, a2)}, {Gate::cz(in, a1), Gate::h(in), Gate::h(a1)}};
}

Circuit teleport_gadget(TeleportForm form) {
    Circuit c(3);
    c.set_role(0, QubitRole::input());
    auto halves = teleport_halves(0, 1, 2, form);
    c.append(halves.first);
    c.append(halves.second);
    c.set_outputs({2});
    c.set_postselect({0, 1});
    return c;
}

CompressedCircuit compress_depth3(const Circuit &c, TeleportForm form) {
    require_valid(c);
    for (std::size_t i = 0; i < c.gates().size(); i++) {
        if (c.gates()[i].is<gates::Composite>()) {
            throw DomainError("compress_depth3: gate " + std::to_string(i) + " " + c.gates()[i].str() +
                              " is a composite gate");
        }
    }
    std::size_t n = c.n_qubits();
    Circuit out = c;
    out.set_gates({});

    struct Teleport {
        Qubit in, a1, a2;
    };
    std::vector<Teleport> teleports;
    std::vector<Qubit> wire(n);  // current wire of each original qubit
    for (std::size_t q = 0; q < n; q++) {
        wire[q] = static_cast<Qubit>(q);
    }
    std::vector<bool> seen(n, false);
    std::vector<Gate> middle;
    for (const auto &g : c.gates()) {
        for (auto q : g.qubits()) {
            if (seen[q]) {
                // segment between the previous gate on q and this one
                Teleport t{wire[q], out.add_qubit(), out.add_qubit()};
                teleports.push_back(t);
                wire[q] = t.a2;
            }
            seen[q] = true;
        }
        middle.push_back(remap(g, wire));
    }

    CompressedCircuit result;
    std::vector<std::size_t> first_layer, middle_layer, last_layer;
    for (const auto &t : teleports) {
        auto h = teleport_halves(t.in, t.a1, t.a2, form);
        first_layer.push_back(out.gates().size());
        out.append(group_gates(h.first, {t.a1, t.a2}));
    }
    for (const auto &g : middle) {
        middle_layer.push_back(out.gates().size());
        out.append(g);
    }
    for (const auto &t : teleports) {
        auto h = teleport_halves(t.in, t.a1, t.a2, form);
        last_layer.push_back(out.gates().size());
        out.append(group_gates(h.second, {t.in, t.a1}));
        result.postselection_qubits.push_back(t.in);
        result.postselection_qubits.push_back(t.a1);
    }

    std::vector<Qubit> outputs, post;
    for (auto q : c.outputs()) {
        outputs.push_back(wire[q]);
    }
    for (auto q : c.postselect()) {
        post.push_back(wire[q]);
    }
    post.insert(post.end(), result.postselection_qubits.begin(), result.postselection_qubits.end());
    out.set_outputs(outputs);
    out.set_postselect(post);

    result.origin_map = wire;
    for (auto *layer : {&first_layer, &middle_layer, &last_layer}) {
        if (!layer->empty()) {
            result.layers.layers.push_back(*layer);
        }
    }
    result.circuit = std::move(out);
    return result;
}

Circuit with_postselection_outputs(const Circuit &a) {
    if (a.outputs().size() != 1) {
        throw ValidationError({"with_postselection_outputs: expected exactly one output qubit, found " +
                               std::to_string(a.outputs().size())});
    }
    if (a.postselect().empty()) {
        throw ValidationError({"with_postselection_outputs: circuit has no postselection qubits"});
    }
    Circuit out = a;
    std::vector<Qubit> outputs = a.postselect();
    outputs.push_back(a.outputs()[0]);
    out.set_outputs(outputs);
    return out;
}

// ---------------------------------------------------------------------------
// E_n

namespace {

struct EnLayout {
    std::vector<Qubit> post;
    Qubit q_out = 0;
    std::size_t b = 0;
    std::size_t m = 0;
    Qubit copy = 0;
    std::vector<Qubit> ors;
    Circuit base;  // a's register plus the fresh ancillas, a's gates
};

EnLayout en_layout(const Circuit &a) {
    require_valid(a);
    if (a.outputs().size() < 2) {
        throw ValidationError({"expected outputs listing the postselection qubits followed by the output qubit; found " +
                               std::to_string(a.outputs().size()) + " output(s)"});
    }
    EnLayout l;
    l.post.assign(a.outputs().begin(), a.outputs().end() - 1);
    l.q_out = a.outputs().back();
    l.b = l.post.size() - 1;
    l.m = or_ancilla_count(l.b + 1);
    l.base = a;
    l.copy = l.base.add_qubit();
    for (std::size_t k = 0; k < l.m; k++) {
        l.ors.push_back(l.base.add_qubit());
    }
    std::vector<Qubit> outputs = l.ors;
    outputs.push_back(l.copy);
    l.base.set_outputs(outputs);
    l.base.set_postselect(l.ors);
    return l;
}

}  // namespace

EnCircuit build_En(const Circuit &a, bool append_inverse) {
    auto l = en_layout(a);
    EnCircuit e;
    e.b = l.b;
    e.m = l.m;
    e.copy_ancilla = l.copy;
    e.or_ancillas = l.ors;
    e.a_embedded = l.base;

    Circuit mid(l.base.n_qubits());
    mid.append(Gate::cnot(l.q_out, l.copy));
    append_or_reduction(mid, l.post, l.ors, OrVariant::kCommuting);
    e.middle = mid.gates();

    e.circuit = l.base;
    e.circuit.append(e.middle);
    if (append_inverse) {
        e.circuit.append(inverse(l.base).gates());
    }
    return e;
}

Circuit conjugate_commuting(const Circuit &a, std::span<const Gate> middle, const ConjugateOptions &options) {
    Circuit out = a;
    out.set_gates({});
    const auto &ag = a.gates();
    for (std::size_t gi = 0; gi < middle.size(); gi++) {
        const Gate &g = middle[gi];
        // backward light cone of g through a
        auto gq = g.qubits();
        std::set<Qubit> cone(gq.begin(), gq.end());
        std::vector<std::size_t> cone_gates;
        for (std::size_t i = ag.size(); i-- > 0;) {
            auto qs = ag[i].qubits();
            if (std::any_of(qs.begin(), qs.end(), [&](Qubit q) { return cone.count(q) > 0; })) {
                cone.insert(qs.begin(), qs.end());
                cone_gates.push_back(i);
            }
        }
        if (cone.size() > options.max_cone) {
            throw DomainError("conjugate_commuting: light cone of middle gate " + std::to_string(gi) + " " + g.str() +
                              " has " + std::to_string(cone.size()) + " qubits (cap " +
                              std::to_string(options.max_cone) + ")");
        }
        std::reverse(cone_gates.begin(), cone_gates.end());
        std::vector<Gate> seq;
        for (auto i : cone_gates) {
            seq.push_back(ag[i]);
        }
        seq.push_back(g);
        for (auto it = cone_gates.rbegin(); it != cone_gates.rend(); ++it) {
            seq.push_back(adjoint(ag[*it]));
        }
        std::vector<Qubit> reg(cone.begin(), cone.end());
        Matrix listed = reverse_qubit_order(local_unitary(seq, reg), reg.size());
        auto s = support(listed, options.tolerance);
        if (s.positions.size() > options.max_arity) {
            throw DomainError("conjugate_commuting: middle gate " + std::to_string(gi) + " " + g.str() +
                              " conjugates to a gate on " + std::to_string(s.positions.size()) +
                              " qubits (cap " + std::to_string(options.max_arity) + ")");
        }
        if (s.positions.empty()) {
            // a global phase; keep it on one of g's qubits
            Matrix phase = s.restricted(0, 0) * Matrix::Identity(2, 2);
            out.append(Gate::composite({gq[0]}, phase));
            continue;
        }
        std::vector<Qubit> qs;
        for (auto p : s.positions) {
            qs.push_back(reg[p]);
        }
        out.append(Gate::composite(std::move(qs), std::move(s.restricted)));
    }
    return out;
}

Circuit build_conjugated_En(const Circuit &a, const ConjugateOptions &options) {
    auto e = build_En(a, true);
    return conjugate_commuting(e.a_embedded, e.middle, options);
}

// ---------------------------------------------------------------------------
// Magic states, E'_n, fan-out

QubitState magic_state() {
    double s = std::numbers::sqrt2 / 2;
    return {Complex{s, 0}, std::polar(s, std::numbers::pi / 4)};
}

MagicCompiled magic_compile(const Circuit &c) {
    require_valid(c);
    MagicCompiled out;
    out.circuit = c;
    out.circuit.set_gates({});
    auto post = c.postselect();
    for (std::size_t i = 0; i < c.gates().size(); i++) {
        const auto &g = c.gates()[i];
        auto r = g.get_if<gates::PhaseShift>();
        if (r && r->level == 3 && r->sign == +1) {
            Qubit anc = out.circuit.add_qubit(QubitRole::product(magic_state()));
            out.circuit.append(Gate::cnot(r->q, anc));
            out.gadget_qubits.push_back(anc);
            post.push_back(anc);
        } else if (is_clifford(g)) {
            out.circuit.append(g);
        } else {
            throw DomainError("magic_compile: gate " + std::to_string(i) + " " + g.str() +
                              " is neither Clifford nor R(pi/4)");
        }
    }
    out.circuit.set_postselect(post);
    return out;
}

EnPrimeCircuit build_En_prime(const Circuit &a) {
    auto l = en_layout(a);
    EnPrimeCircuit e;
    e.b = l.b;
    e.m = l.m;
    e.copy_ancilla = l.copy;
    e.or_ancillas = l.ors;
    e.circuit = l.base;
    e.circuit.append(Gate::cnot(l.q_out, l.copy));
    e.middle = append_or_reduction(e.circuit, l.post, l.ors, OrVariant::kPlain);
    return e;
}

std::vector<Gate> fanout(Qubit control, std::span<const Qubit> targets) {
    std::vector<Gate> out;
    for (auto t : targets) {
        out.push_back(Gate::cnot(control, t));
    }
    return out;
}

void append_fanout(Circuit &circuit, Qubit control, std::span<const Qubit> targets) {
    std::vector<std::string> problems;
    for (auto t : targets) {
        if (t >= circuit.n_qubits()) {
            problems.push_back("fan-out target " + std::to_string(t) + " out of range");
            continue;
        }
        if (t == control) {
            problems.push_back("fan-out target " + std::to_string(t) + " is the control");
        }
        if (circuit.role(t).kind() != RoleKind::kZero) {
            problems.push_back("fan-out target " + std::to_string(t) + " is not a |0> ancilla");
        }
        for (const auto &g : circuit.gates()) {
            if (g.touches(t)) {
                problems.push_back("fan-out target " + std::to_string(t) + " is already used by " + g.str());
                break;
            }
        }
    }
    if (!problems.empty()) {
        throw ValidationError(std::move(problems));
    }
    circuit.append(fanout(control, targets));
}

FanoutDecomposition decompose_fanout_or(const Circuit &circuit, const OrMiddle &middle) {
    std::size_t nc = middle.controls.size();
    std::size_t nt = middle.targets.size();
    const auto &gs = circuit.gates();
    if (middle.begin > middle.end || middle.end > gs.size()) {
        throw ContractError("decompose_fanout_or: middle range outside the circuit");
    }
    // pair (j, k) -> controlled phase level
    std::vector<std::vector<int>> level(nc, std::vector<int>(nt, -1));
    std::vector<std::vector<int>> sign(nc, std::vector<int>(nt, 1));
    for (std::size_t i = middle.begin; i < middle.end; i++) {
        auto cr = gs[i].get_if<gates::ControlledPhase>();
        if (!cr) {
            throw DomainError("decompose_fanout_or: middle gate " + std::to_string(i) + " " + gs[i].str() +
                              " is not a controlled phase");
        }
        auto j = std::find(middle.controls.begin(), middle.controls.end(), cr->control) - middle.controls.begin();
        auto k = std::find(middle.targets.begin(), middle.targets.end(), cr->target) - middle.targets.begin();
        if (static_cast<std::size_t>(j) == nc || static_cast<std::size_t>(k) == nt || level[j][k] >= 0) {
            throw DomainError("decompose_fanout_or: middle gate " + std::to_string(i) + " " + gs[i].str() +
                              " does not match the control/target layout");
        }
        level[j][k] = cr->level;
        sign[j][k] = cr->sign;
    }

    FanoutDecomposition out;
    Circuit c = circuit;
    c.set_gates({});
    out.first_ancilla = static_cast<Qubit>(c.n_qubits());
    out.control_copies.assign(nc, {});
    out.target_copies.assign(nt, {});
    for (std::size_t j = 0; j < nc; j++) {
        out.control_copies[j].push_back(middle.controls[j]);
        for (std::size_t k = 1; k < nt; k++) {
            out.control_copies[j].push_back(c.add_qubit());
        }
    }
    for (std::size_t k = 0; k < nt; k++) {
        out.target_copies[k].push_back(middle.targets[k]);
        for (std::size_t j = 1; j < nc; j++) {
            out.target_copies[k].push_back(c.add_qubit());
        }
    }

    c.append(std::span<const Gate>(gs.data(), middle.begin));
    std::vector<Gate> fan;
    for (std::size_t j = 0; j < nc; j++) {
        auto f = fanout(middle.controls[j], std::span<const Qubit>(out.control_copies[j]).subspan(1));
        fan.insert(fan.end(), f.begin(), f.end());
    }
    for (std::size_t k = 0; k < nt; k++) {
        auto f = fanout(middle.targets[k], std::span<const Qubit>(out.target_copies[k]).subspan(1));
        fan.insert(fan.end(), f.begin(), f.end());
    }
    c.append(fan);
    out.layer_begin = c.gates().size();
    for (std::size_t j = 0; j < nc; j++) {
        for (std::size_t k = 0; k < nt; k++) {
            if (level[j][k] >= 0) {
                c.append(Gate::cphase(out.control_copies[j][k], out.target_copies[k][j], sign[j][k], level[j][k]));
            }
        }
    }
    out.layer_end = c.gates().size();
    for (auto it = fan.rbegin(); it != fan.rend(); ++it) {
        c.append(*it);
    }
    c.append(std::span<const Gate>(gs.data() + middle.end, gs.size() - middle.end));
    out.circuit = std::move(c);
    return out;
}

FanoutDecomposition fanout_or_reduction(std::size_t b) {
    Circuit c = or_reduction_noncommuting(b);
    std::size_t m = c.outputs().size();
    OrMiddle middle;
    middle.controls = iota_qubits(0, b);
    middle.targets = c.outputs();
    middle.begin = m;
    middle.end = m + b * m;
    return decompose_fanout_or(c, middle);
}

CliffordLayerAudit audit_non_clifford_layer(const Circuit &circuit) {
    CliffordLayerAudit audit;
    const auto &gs = circuit.gates();
    for (std::size_t i = 0; i < gs.size(); i++) {
        if (!is_clifford(gs[i])) {
            audit.non_clifford.push_back(i);
        }
    }
    auto greedy = layer_decomposition(circuit);
    std::set<std::size_t> greedy_layers;
    for (std::size_t l = 0; l < greedy.layers.size(); l++) {
        for (auto i : greedy.layers[l]) {
            if (!is_clifford(gs[i])) {
                greedy_layers.insert(l);
            }
        }
    }
    audit.greedy_layers = greedy_layers.size();
    if (audit.non_clifford.empty()) {
        return audit;
    }
    audit.span_begin = audit.non_clifford.front();
    audit.span_end = audit.non_clifford.back();
    std::set<Qubit> used;
    audit.span_disjoint = true;
    for (std::size_t i = audit.span_begin; i <= audit.span_end && audit.span_disjoint; i++) {
        for (auto q : gs[i].qubits()) {
            if (!used.insert(q).second) {
                audit.span_disjoint = false;
            }
        }
    }
    if (!audit.span_disjoint) {
        return audit;
    }
    // greedy prefix, the span as one layer, greedy suffix
    Circuit prefix = circuit, suffix = circuit;
    prefix.set_gates(std::vector<Gate>(gs.begin(), gs.begin() + audit.span_begin));
    suffix.set_gates(std::vector<Gate>(gs.begin() + audit.span_end + 1, gs.end()));
    audit.layering = layer_decomposition(prefix);
    std::vector<std::size_t> span;
    for (std::size_t i = audit.span_begin; i <= audit.span_end; i++) {
        span.push_back(i);
    }
    audit.layering.layers.push_back(span);
    for (auto layer : layer_decomposition(suffix).layers) {
        for (auto &i : layer) {
            i += audit.span_end + 1;
        }
        audit.layering.layers.push_back(std::move(layer));
    }
    audit.layering_valid = is_valid_layering(circuit, audit.layering);
    for (const auto &layer : audit.layering.layers) {
        if (std::any_of(layer.begin(), layer.end(), [&](std::size_t i) { return !is_clifford(gs[i]); })) {
            audit.non_clifford_layers++;
        }
    }
    return audit;
}

// ---------------------------------------------------------------------------
// Manifests

nlohmann::json construction_manifest(const Circuit &circuit) {
    nlohmann::json roles = nlohmann::json::array();
    for (const auto &r : circuit.roles()) {
        switch (r.kind()) {
            case RoleKind::kInput:
                roles.push_back("input");
                break;
            case RoleKind::kZero:
                roles.push_back("zero");
                break;
            case RoleKind::kProduct:
                roles.push_back("product");
                break;
        }
    }
    return {
        {"qubits", circuit.n_qubits()},
        {"gates", circuit.gates().size()},
        {"depth", depth(circuit)},
        {"roles", roles},
        {"outputs", circuit.outputs()},
        {"postselect", circuit.postselect()},
    };
}

nlohmann::json construction_manifest(const CompressedCircuit &compressed) {
    auto j = construction_manifest(compressed.circuit);
    j["b"] = compressed.b();
    j["teleport_qubits"] = compressed.postselection_qubits;
    j["origin_map"] = compressed.origin_map;
    return j;
}

}  // namespace commq
