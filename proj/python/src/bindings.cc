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

// Thin Python surface. Circuits cross the boundary as Circuit objects or JSON
// text; reports come back as plain dicts (via the library's JSON encoders).

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "commq/analysis.h"
#include "commq/circuit.h"
#include "commq/circuit_json.h"
#include "commq/clifford_sim.h"
#include "commq/constructions.h"
#include "commq/distribution.h"
#include "commq/error.h"
#include "commq/postselect.h"
#include "commq/statevector.h"
#include "commq/weak_sim.h"

namespace py = pybind11;
using namespace commq;

namespace {

py::object to_py(const nlohmann::json &j) {
    return py::module_::import("json").attr("loads")(j.dump());
}

py::dict dist_dict(const Distribution &d) {
    py::dict out;
    for (std::size_t i = 0; i < d.size(); i++) {
        out[py::str(d.outcome(i))] = d[i];
    }
    return out;
}

Distribution dist_from(const py::dict &probs) {
    std::optional<std::size_t> width;
    std::vector<std::pair<std::string, double>> items;
    for (auto [k, v] : probs) {
        auto key = k.cast<std::string>();
        if (width && *width != key.size()) {
            throw ContractError("outcome strings have different lengths");
        }
        width = key.size();
        items.emplace_back(key, v.cast<double>());
    }
    if (!width) {
        throw ContractError("empty distribution");
    }
    std::vector<double> p(std::size_t{1} << *width, 0.0);
    for (const auto &[k, v] : items) {
        p[bits_to_index(k)] = v;
    }
    return Distribution(*width, std::move(p));
}

SandwichSpec spec_of(const Circuit &f, const Circuit &d, std::size_t l) {
    SandwichSpec s;
    s.f = f;
    s.d = d;
    s.l = l;
    return s;
}

TeleportForm form_of(const std::string &name) {
    if (name == "cz") {
        return TeleportForm::kCz;
    }
    if (name == "cnot") {
        return TeleportForm::kCnot;
    }
    throw ContractError("teleport form must be 'cz' or 'cnot', got '" + name + "'");
}

}  // namespace

PYBIND11_MODULE(_commq, m) {
    m.doc() = "commq native extension";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ResourceError>(m, "ResourceError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ContractError>(m, "ContractError", base.ptr());
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base.ptr());
    py::register_exception<UnconditionableError>(m, "UnconditionableError", base.ptr());

    py::class_<Circuit>(m, "Circuit")
        .def_static("from_json", [](const std::string &text) { return deserialize(text); }, py::arg("text"))
        .def_static("load", &load_circuit, py::arg("path"))
        .def("to_json", [](const Circuit &c) { return serialize(c); })
        .def("save", [](const Circuit &c, const std::string &path) { save_circuit(c, path); }, py::arg("path"))
        .def_property_readonly("n_qubits", &Circuit::n_qubits)
        .def_property_readonly("n_inputs", &Circuit::n_inputs)
        .def_property_readonly("outputs", [](const Circuit &c) { return c.outputs(); })
        .def_property_readonly("postselect", [](const Circuit &c) { return c.postselect(); })
        .def_property_readonly("depth", [](const Circuit &c) { return depth(c); })
        .def("__len__", [](const Circuit &c) { return c.gates().size(); })
        .def("gate_names", [](const Circuit &c) {
            std::vector<std::string> out;
            for (const auto &g : c.gates()) {
                out.push_back(g.str());
            }
            return out;
        })
        .def("__eq__", [](const Circuit &a, const Circuit &b) { return a == b; })
        .def("__repr__", [](const Circuit &c) {
            return "<Circuit qubits=" + std::to_string(c.n_qubits()) + " gates=" + std::to_string(c.gates().size()) +
                   ">";
        });

    // simulation
    m.def(
        "output_distribution",
        [](const Circuit &c, const std::string &x, std::optional<std::vector<Qubit>> qubits) {
            Bits bits = parse_bits(x);
            return dist_dict(qubits ? output_distribution(c, bits, *qubits) : output_distribution(c, bits));
        },
        py::arg("circuit"), py::arg("x"), py::arg("qubits") = py::none(),
        "Exact outcome probabilities over the outputs (or the given qubits), keyed by bit string.");
    m.def(
        "strong_sim",
        [](const Circuit &c, const std::string &x, const std::string &y, std::optional<std::vector<Qubit>> subset,
           unsigned threads) {
            StrongSimOptions o;
            o.threads = threads;
            Bits bits = parse_bits(x);
            return subset ? strong_sim_marginal(c, bits, *subset, y, o).probability
                          : strong_sim(c, bits, y, o).probability;
        },
        py::arg("circuit"), py::arg("x"), py::arg("y"), py::arg("subset") = py::none(), py::arg("threads") = 1,
        "Pr[y] for a Clifford circuit with product-state inputs.");
    m.def(
        "sandwich_exact",
        [](const Circuit &f, const Circuit &d, std::size_t l, const std::string &x) {
            return dist_dict(sandwich_exact(spec_of(f, d, l), parse_bits(x)));
        },
        py::arg("f"), py::arg("d"), py::arg("l"), py::arg("x"));
    m.def(
        "assemble_sandwich",
        [](const Circuit &f, const Circuit &d, std::size_t l) { return assemble(spec_of(f, d, l)); },
        py::arg("f"), py::arg("d"), py::arg("l"));
    m.def(
        "weak_sample",
        [](const Circuit &f, const Circuit &d, std::size_t l, const std::string &x, std::uint64_t shots,
           std::uint64_t seed, unsigned threads) {
            auto spec = spec_of(f, d, l);
            OracleFSampler sampler(f);
            WeakSampleOptions o;
            o.threads = threads;
            Counts counts;
            {
                py::gil_scoped_release release;
                counts = weak_sample(spec, parse_bits(x), sampler, seed, shots, o);
            }
            py::dict out;
            for (std::size_t i = 0; i < counts.counts.size(); i++) {
                out[py::str(index_to_bits(i, counts.width))] = counts.counts[i];
            }
            return out;
        },
        py::arg("f"), py::arg("d"), py::arg("l"), py::arg("x"), py::arg("shots"), py::arg("seed"),
        py::arg("threads") = 1, "Seeded counts of the weak simulator with the exact F sampler.");
    m.def(
        "total_variation",
        [](const py::dict &a, const py::dict &b) { return total_variation(dist_from(a), dist_from(b)); },
        py::arg("a"), py::arg("b"));

    // constructions
    m.def(
        "or_reduction",
        [](std::size_t b, bool commuting) {
            return commuting ? or_reduction_commuting(b) : or_reduction_noncommuting(b);
        },
        py::arg("b"), py::arg("commuting") = false);
    m.def("or_ancilla_count", &or_ancilla_count, py::arg("n_inputs"));
    m.def(
        "compress_depth3",
        [](const Circuit &c, const std::string &form) {
            auto cc = compress_depth3(c, form_of(form));
            py::dict out;
            out["circuit"] = cc.circuit;
            out["b"] = cc.b();
            out["postselection_qubits"] = cc.postselection_qubits;
            out["origin_map"] = cc.origin_map;
            return out;
        },
        py::arg("circuit"), py::arg("form") = "cz");
    m.def("with_postselection_outputs", &with_postselection_outputs, py::arg("a"));
    m.def(
        "build_En",
        [](const Circuit &a, bool append_inverse) {
            auto en = build_En(a, append_inverse);
            py::dict out;
            out["circuit"] = en.circuit;
            out["b"] = en.b;
            out["m"] = en.m;
            out["or_ancillas"] = en.or_ancillas;
            out["copy_ancilla"] = en.copy_ancilla;
            return out;
        },
        py::arg("a"), py::arg("append_inverse") = true);
    m.def(
        "build_conjugated_En",
        [](const Circuit &a, std::size_t max_arity) {
            ConjugateOptions o;
            o.max_arity = max_arity;
            return build_conjugated_En(a, o);
        },
        py::arg("a"), py::arg("max_arity") = ConjugateOptions{}.max_arity);
    m.def(
        "magic_compile",
        [](const Circuit &c) {
            auto mc = magic_compile(c);
            return py::make_tuple(mc.circuit, mc.gadget_qubits);
        },
        py::arg("circuit"));
    m.def(
        "build_En_prime",
        [](const Circuit &a, bool fanout) {
            auto ep = build_En_prime(a);
            return fanout ? decompose_fanout_or(ep.circuit, ep.middle).circuit : ep.circuit;
        },
        py::arg("a"), py::arg("fanout") = false);
    m.def(
        "fanout_or_reduction", [](std::size_t b) { return fanout_or_reduction(b).circuit; }, py::arg("b"));
    m.def(
        "audit_non_clifford_layer",
        [](const Circuit &c) {
            auto a = audit_non_clifford_layer(c);
            py::dict out;
            out["single_layer"] = a.single_layer();
            out["non_clifford"] = a.non_clifford;
            out["non_clifford_layers"] = a.non_clifford_layers;
            out["greedy_layers"] = a.greedy_layers;
            return out;
        },
        py::arg("circuit"));
    m.def(
        "construction_manifest", [](const Circuit &c) { return to_py(construction_manifest(c)); },
        py::arg("circuit"));

    // analysis
    m.def(
        "check_commuting",
        [](const Circuit &c, double tolerance, unsigned threads) {
            AnalysisOptions o;
            o.tolerance = tolerance;
            o.threads = threads;
            return to_py(to_json(check_pairwise_commuting(c, o)));
        },
        py::arg("circuit"), py::arg("tolerance") = kDefaultTolerance, py::arg("threads") = 1);
    m.def(
        "check_locality",
        [](const Circuit &c, std::size_t bound, double tolerance) {
            return to_py(to_json(check_c_local(c, bound, tolerance)));
        },
        py::arg("circuit"), py::arg("bound"), py::arg("tolerance") = kDefaultTolerance);

    // postselection
    m.def(
        "postselect_filter",
        [](const std::string &y) {
            auto o = filter(y);
            return py::make_tuple(static_cast<int>(o.post), static_cast<int>(o.out));
        },
        py::arg("y"), "(post, out) for an outcome string of b+2 bits.");
    m.def(
        "conditional_acceptance_exact",
        [](const py::dict &dist) { return to_py(to_json(conditional_acceptance_exact(dist_from(dist)))); },
        py::arg("distribution"));
}
