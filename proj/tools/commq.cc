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

// commq command-line tool. Exit codes: 0 success, 1 a check failed, 2 usage
// or input error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "commq/analysis.h"
#include "commq/circuit_json.h"
#include "commq/clifford_sim.h"
#include "commq/constructions.h"
#include "commq/error.h"
#include "commq/manifest.h"
#include "commq/postselect.h"
#include "commq/statevector.h"
#include "commq/weak_sim.h"

namespace {

using commq::Bits;
using commq::Circuit;
using commq::Distribution;
using commq::Qubit;
using nlohmann::json;

constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct Globals {
    unsigned threads = 1;
    std::string out;
    std::string format = "json";
};

// Shared state of one invocation: where output goes and what the manifest records.
class Run {
   public:
    Run(const Globals &g, std::vector<std::string> args) : globals_(g), start_(std::chrono::steady_clock::now()) {
        manifest_.arguments = std::move(args);
    }

    void set_command(std::string c) {
        manifest_.command = std::move(c);
    }
    void set_seed(std::uint64_t s) {
        manifest_.seed = s;
    }
    void set_extra(const std::string &key, json value) {
        extra_[key] = std::move(value);
    }

    Circuit load(const std::string &path) {
        manifest_.add_input(path);
        return commq::load_circuit(path);
    }

    Distribution load_distribution(const std::string &path) {
        manifest_.add_input(path);
        std::ifstream in(path);
        if (!in) {
            throw commq::ContractError("cannot read '" + path + "'");
        }
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error &e) {
            throw commq::ParseError(e.what(), path + ": byte " + std::to_string(e.byte));
        }
        return commq::distribution_from_json(j);
    }

    bool text() const {
        return globals_.format == "text";
    }

    /// Writes `j` (or `text` when --format text) and the manifest.
    void emit(const json &j, const std::string &text_form) {
        std::string body = text() ? text_form : j.dump(2) + "\n";
        auto path = output_path();
        if (path.empty()) {
            std::cout << body << std::flush;
        } else {
            std::ofstream(path) << body;
        }
        manifest_.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        json m = manifest_.to_json();
        for (auto &[k, v] : extra_.items()) {
            m[k] = v;
        }
        if (path.empty()) {
            std::cerr << m.dump() << "\n";
        } else {
            std::ofstream(path + ".manifest.json") << m.dump(2) << "\n";
        }
    }

    void emit(const json &j) {
        emit(j, to_text(j));
    }

   private:
    std::string output_path() const {
        if (globals_.out.empty()) {
            return {};
        }
        std::filesystem::path p(globals_.out);
        if (const char *dir = std::getenv("COMMQ_OUT_DIR"); dir && *dir && p.is_relative()) {
            std::filesystem::create_directories(dir);
            p = std::filesystem::path(dir) / p;
        }
        return p.string();
    }

    static std::string to_text(const json &j, const std::string &prefix = "") {
        std::ostringstream out;
        for (auto &[k, v] : j.items()) {
            if (v.is_object()) {
                out << to_text(v, prefix + k + ".");
            } else {
                out << prefix << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
            }
        }
        return out.str();
    }

    const Globals &globals_;
    std::chrono::steady_clock::time_point start_;
    commq::RunManifest manifest_;
    json extra_ = json::object();
};

std::vector<Qubit> qubits_or(const std::string &text, const std::vector<Qubit> &fallback) {
    return text.empty() ? fallback : commq::parse_qubit_list(text);
}

json circuit_summary(const Circuit &c) {
    return {
        {"qubits", c.n_qubits()},
        {"gates", c.gates().size()},
        {"depth", commq::depth(c)},
        {"outputs", c.outputs()},
        {"postselect", c.postselect()}};
}

// A circuit with a postselect list and one output is turned into the
// outputs-first bookkeeping (postselect qubits, then the output) that build_En
// and the postselect harness expect; otherwise it is used as is.
Circuit as_en_input(const Circuit &a) {
    if (a.outputs().size() == 1 && !a.postselect().empty()) {
        return commq::with_postselection_outputs(a);
    }
    return a;
}

int emit_circuit(Run &run, const Circuit &c, json construction) {
    run.set_extra("construction", std::move(construction));
    if (run.text()) {
        std::ostringstream out;
        for (auto &[k, v] : circuit_summary(c).items()) {
            out << k << ": " << v.dump() << "\n";
        }
        for (std::size_t i = 0; i < c.gates().size(); i++) {
            out << std::setw(5) << i << "  " << c.gates()[i].str() << "\n";
        }
        run.emit(commq::circuit_to_json(c), out.str());
    } else {
        run.emit(commq::circuit_to_json(c));
    }
    return 0;
}

json distribution_json(const Distribution &d, const std::vector<Qubit> &qubits) {
    return commq::distribution_to_json(d, qubits);
}

// ---------------------------------------------------------------------------
// demo theorem1
// ---------------------------------------------------------------------------

Circuit demo_circuit(std::uint64_t seed) {
    commq::Rng rng(seed);
    auto pick = [&](std::size_t k) { return static_cast<std::size_t>(rng() % k); };
    for (;;) {
        Circuit c(2, commq::QubitRole::input());
        for (int i = 0; i < 4; i++) {
            Qubit q = static_cast<Qubit>(pick(2));
            switch (pick(3)) {
                case 0:
                    c.append(commq::Gate::h(q));
                    break;
                case 1:
                    c.append(commq::Gate::phase(q, pick(2) ? 1 : -1, 1 + static_cast<int>(pick(3))));
                    break;
                default:
                    c.append(commq::Gate::cz(0, 1));
            }
        }
        // depth at least 3 so the compression really has three layers
        if (commq::depth(c) >= 3) {
            c.set_postselect({0});
            c.set_outputs({1});
            return c;
        }
    }
}

int demo_theorem1(Run &run, std::uint64_t seed, unsigned threads) {
    run.set_seed(seed);
    Circuit c = demo_circuit(seed);
    auto compressed = commq::compress_depth3(c);
    Circuit a = commq::with_postselection_outputs(compressed.circuit);
    auto en = commq::build_En(a);
    Circuit conj = commq::conjugate_commuting(en.a_embedded, en.middle);

    commq::AnalysisOptions ao;
    ao.threads = threads;
    auto comm = commq::check_pairwise_commuting(conj, ao);
    auto loc = commq::check_c_local(conj, 5);
    double dist_delta = 0, identity_delta = 0;
    std::string one = std::string(en.m, '0') + "1";
    std::string one_a = std::string(en.b + 1, '0') + "1";
    for (std::uint64_t x = 0; x < 4; x++) {
        Bits bits = commq::parse_bits(commq::index_to_bits(x, 2));
        auto d_conj = commq::output_distribution(conj, bits);
        auto d_en = commq::output_distribution(en.circuit, bits);
        auto d_a = commq::output_distribution(a, bits);
        dist_delta = std::max(dist_delta, commq::max_abs_difference(d_conj, d_en));
        identity_delta = std::max(identity_delta, std::abs(d_en.prob(one) - d_a.prob(one_a)));
    }
    constexpr double tol = 1e-9;
    json rows = json::array();
    auto row = [&](const std::string &name, bool pass, json detail) {
        rows.push_back({{"check", name}, {"pass", pass}, {"detail", std::move(detail)}});
    };
    row("depth3", commq::depth(compressed.circuit) == 3, commq::depth(compressed.circuit));
    row("commuting", comm.pass, comm.max_residual);
    row("locality<=5", loc.pass, loc.max_support);
    row("distribution-match", dist_delta <= tol, dist_delta);
    row("output-identity", identity_delta <= tol, identity_delta);
    bool all = true;
    for (const auto &r : rows) {
        all = all && r["pass"].get<bool>();
    }
    json j = {
        {"seed", seed},
        {"c", commq::circuit_to_json(c)},
        {"sizes",
         {{"a_qubits", a.n_qubits()}, {"b", en.b}, {"m", en.m}, {"en_qubits", en.circuit.n_qubits()},
          {"conjugated_gates", conj.gates().size()}}},
        {"checks", rows},
        {"pass", all}};
    std::ostringstream text;
    text << "theorem1 demo, seed " << seed << ": A has " << a.n_qubits() << " qubits, b = " << en.b
         << ", m = " << en.m << "\n";
    text << std::left << std::setw(22) << "check" << std::setw(6) << "pass" << "detail\n";
    for (const auto &r : rows) {
        text << std::left << std::setw(22) << r["check"].get<std::string>() << std::setw(6)
             << (r["pass"].get<bool>() ? "pass" : "FAIL") << r["detail"].dump() << "\n";
    }
    run.emit(j, text.str());
    return all ? 0 : kExitCheckFailed;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"commq: commuting-circuit constructions, simulators and checks"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals g;
    app.add_option("--threads", g.threads, "Cap on worker threads")->check(CLI::PositiveNumber);
    app.add_option("--out", g.out, "Output file (default stdout); the manifest goes to FILE.manifest.json");
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    Run run(g, std::vector<std::string>(argv + 1, argv + argc));
    std::function<int()> action;

    // build ...
    auto *build = app.add_subcommand("build", "Build a circuit family");
    build->require_subcommand(1);
    build->fallthrough();
    {
        auto *s = build->add_subcommand("or-reduction", "OR reduction of b bits");
        auto b = std::make_shared<std::size_t>(0);
        auto variant = std::make_shared<std::string>("commuting");
        s->add_option("--b", *b, "Number of input bits")->required()->check(CLI::Range(1, 30));
        s->add_option("--variant", *variant, "plain (H, CR, H) or commuting (one gate per pair)")->check(CLI::IsMember({"plain", "commuting"}));
        s->callback([&, b, variant] {
            action = [&, b, variant] {
                run.set_command("build or-reduction");
                Circuit c = *variant == "plain" ? commq::or_reduction_noncommuting(*b)
                                                : commq::or_reduction_commuting(*b);
                return emit_circuit(run, c, commq::construction_manifest(c));
            };
        });
    }
    {
        auto *s = build->add_subcommand("compress3", "Depth-3 teleportation compression");
        auto in = std::make_shared<std::string>();
        auto form = std::make_shared<std::string>("cz");
        s->add_option("--in", *in, "Circuit file")->required();
        s->add_option("--form", *form, "Teleportation decomposition")->check(CLI::IsMember({"cz", "cnot"}));
        s->callback([&, in, form] {
            action = [&, in, form] {
                run.set_command("build compress3");
                auto cc = commq::compress_depth3(
                    run.load(*in), *form == "cz" ? commq::TeleportForm::kCz : commq::TeleportForm::kCnot);
                return emit_circuit(run, cc.circuit, commq::construction_manifest(cc));
            };
        });
    }
    {
        auto *s = build->add_subcommand("en", "E_n from a postselected circuit A");
        auto a = std::make_shared<std::string>();
        auto no_inverse = std::make_shared<bool>(false);
        s->add_option("--a", *a, "Postselected circuit A")->required();
        s->add_flag("--no-inverse", *no_inverse, "Omit the trailing A^dagger");
        s->callback([&, a, no_inverse] {
            action = [&, a, no_inverse] {
                run.set_command("build en");
                auto en = commq::build_En(as_en_input(run.load(*a)), !*no_inverse);
                auto m = commq::construction_manifest(en.circuit);
                m["b"] = en.b;
                m["m"] = en.m;
                m["or_ancillas"] = en.or_ancillas;
                m["copy_ancilla"] = en.copy_ancilla;
                return emit_circuit(run, en.circuit, m);
            };
        });
    }
    {
        auto *s = build->add_subcommand("conjugate", "Commuting circuit A^dagger g A for every middle gate of E_n");
        auto a = std::make_shared<std::string>();
        auto arity = std::make_shared<std::size_t>(commq::kDefaultCompositeArity);
        s->add_option("--a", *a, "Postselected circuit A")->required();
        s->add_option("--max-arity", *arity, "Largest allowed conjugated gate")->check(CLI::Range(1, 14));
        s->callback([&, a, arity] {
            action = [&, a, arity] {
                run.set_command("build conjugate");
                commq::ConjugateOptions o;
                o.max_arity = *arity;
                Circuit c = commq::build_conjugated_En(as_en_input(run.load(*a)), o);
                auto m = commq::construction_manifest(c);
                m["locality"] = commq::check_c_local(c, 5).max_support;
                return emit_circuit(run, c, m);
            };
        });
    }
    {
        auto *s = build->add_subcommand("magic-compile", "Replace R(pi/4) gates by magic-state gadgets");
        auto in = std::make_shared<std::string>();
        s->add_option("--in", *in, "Circuit file")->required();
        s->callback([&, in] {
            action = [&, in] {
                run.set_command("build magic-compile");
                auto mc = commq::magic_compile(run.load(*in));
                auto m = commq::construction_manifest(mc.circuit);
                m["gadget_qubits"] = mc.gadget_qubits;
                return emit_circuit(run, mc.circuit, m);
            };
        });
    }
    {
        auto *s = build->add_subcommand("en-prime", "E'_n: A, copy, plain OR reduction");
        auto a = std::make_shared<std::string>();
        auto decompose = std::make_shared<bool>(false);
        s->add_option("--a", *a, "Postselected circuit A")->required();
        s->add_flag("--fanout", *decompose, "Fan-out decompose the OR block");
        s->callback([&, a, decompose] {
            action = [&, a, decompose] {
                run.set_command("build en-prime");
                auto ep = commq::build_En_prime(as_en_input(run.load(*a)));
                Circuit c = ep.circuit;
                json m;
                if (*decompose) {
                    auto fd = commq::decompose_fanout_or(ep.circuit, ep.middle);
                    c = fd.circuit;
                    m = commq::construction_manifest(c);
                    m["layer"] = {fd.layer_begin, fd.layer_end};
                } else {
                    m = commq::construction_manifest(c);
                }
                m["b"] = ep.b;
                m["m"] = ep.m;
                return emit_circuit(run, c, m);
            };
        });
    }
    {
        auto *s = build->add_subcommand("fanout-or", "Plain OR reduction with its middle fan-out decomposed");
        auto b = std::make_shared<std::size_t>(0);
        s->add_option("--b", *b, "Number of input bits")->required()->check(CLI::Range(1, 30));
        s->callback([&, b] {
            action = [&, b] {
                run.set_command("build fanout-or");
                auto fd = commq::fanout_or_reduction(*b);
                auto audit = commq::audit_non_clifford_layer(fd.circuit);
                auto m = commq::construction_manifest(fd.circuit);
                m["layer"] = {fd.layer_begin, fd.layer_end};
                m["non_clifford_layers"] = audit.non_clifford_layers;
                m["single_non_clifford_layer"] = audit.single_layer();
                return emit_circuit(run, fd.circuit, m);
            };
        });
    }

    // simulate
    {
        auto *s = app.add_subcommand("simulate", "Statevector output distribution");
        auto in = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        auto qubits = std::make_shared<std::string>();
        auto cond_q = std::make_shared<std::string>();
        auto cond = std::make_shared<std::string>();
        auto max_qubits = std::make_shared<std::size_t>(24);
        s->add_option("--in", *in, "Circuit file")->required();
        s->add_option("--x", *x, "Input bits");
        s->add_option("--qubits", *qubits, "Measured qubits, comma separated (default: the outputs)");
        s->add_option("--condition-qubits", *cond_q, "Qubits to condition on, comma separated");
        s->add_option("--condition", *cond, "Bits the condition qubits must read");
        s->add_option("--max-qubits", *max_qubits, "Statevector qubit cap")->check(CLI::Range(1, 30));
        s->callback([&, in, x, qubits, cond_q, cond, max_qubits] {
            action = [&, in, x, qubits, cond_q, cond, max_qubits] {
                run.set_command("simulate");
                Circuit c = run.load(*in);
                commq::SimOptions o;
                o.max_qubits = *max_qubits;
                auto target = qubits_or(*qubits, c.outputs());
                Bits bits = commq::parse_bits(*x);
                Distribution d;
                if (!cond_q->empty()) {
                    commq::Condition condition{commq::parse_qubit_list(*cond_q), *cond};
                    d = commq::conditional_distribution(c, bits, condition, target, o);
                } else {
                    d = commq::output_distribution(c, bits, target, o);
                }
                run.emit(distribution_json(d, target), commq::format_table(d));
                return 0;
            };
        });
    }

    // strong-sim
    {
        auto *s = app.add_subcommand("strong-sim", "Clifford strong simulation by Pauli propagation");
        auto in = std::make_shared<std::string>();
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto subset = std::make_shared<std::string>();
        auto terms = std::make_shared<bool>(false);
        s->add_option("--in", *in, "Circuit file")->required();
        s->add_option("--x", *x, "Input bits");
        s->add_option("--y", *y, "Outcome over the outputs (or over --subset)")->required();
        s->add_option("--subset", *subset, "Output subset for a marginal, comma separated");
        s->add_flag("--terms", *terms, "Include the per-subset terms");
        s->callback([&, in, x, y, subset, terms] {
            action = [&, in, x, y, subset, terms] {
                run.set_command("strong-sim");
                Circuit c = run.load(*in);
                commq::StrongSimOptions o;
                o.threads = g.threads;
                o.keep_terms = *terms;
                auto qs = qubits_or(*subset, c.outputs());
                auto r = commq::strong_sim_marginal(c, commq::parse_bits(*x), qs, *y, o);
                json j = {{"qubits", qs}, {"y", *y}, {"probability", r.probability}};
                if (*terms) {
                    j["terms"] = r.terms;
                }
                run.emit(j);
                return 0;
            };
        });
    }

    // weak-sim
    {
        auto *s = app.add_subcommand("weak-sim", "Sandwich-circuit sampling");
        auto f = std::make_shared<std::string>();
        auto d = std::make_shared<std::string>();
        auto l = std::make_shared<std::size_t>(0);
        auto x = std::make_shared<std::string>();
        auto shots = std::make_shared<std::uint64_t>(1000);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto exact = std::make_shared<bool>(false);
        s->add_option("--f", *f, "Sandwich F circuit")->required();
        s->add_option("--d", *d, "Diagonal circuit D")->required();
        s->add_option("--l", *l, "Number of H-sandwiched ancillas")->required()->check(CLI::Range(1, 20));
        s->add_option("--x", *x, "Input bits");
        s->add_option("--shots", *shots, "Number of samples")->check(CLI::PositiveNumber);
        s->add_option("--seed", *seed, "Master seed");
        s->add_flag("--exact", *exact, "Also report the exact distribution and the TV distance to it");
        s->callback([&, f, d, l, x, shots, seed, exact] {
            action = [&, f, d, l, x, shots, seed, exact] {
                run.set_command("weak-sim");
                run.set_seed(*seed);
                commq::SandwichSpec spec{run.load(*f), run.load(*d), *l};
                Bits bits = commq::parse_bits(*x);
                commq::OracleFSampler sampler(spec.f);
                commq::WeakSampleOptions o;
                o.threads = g.threads;
                auto counts = commq::weak_sample(spec, bits, sampler, *seed, *shots, o);
                json j = commq::counts_to_json(counts);
                std::ostringstream text;
                text << "shots: " << counts.shots() << "\n";
                for (std::size_t i = 0; i < counts.counts.size(); i++) {
                    text << commq::index_to_bits(i, counts.width) << "  " << counts.counts[i] << "\n";
                }
                if (*exact) {
                    auto ex = commq::sandwich_exact(spec, bits);
                    double tv = commq::total_variation(commq::empirical(counts), ex);
                    j["exact"] = commq::distribution_to_json(ex, {})["outcomes"];
                    j["tv"] = tv;
                    text << "tv: " << json(tv).dump() << "\n";
                }
                run.emit(j, text.str());
                return 0;
            };
        });
    }

    // check ...
    auto *check = app.add_subcommand("check", "Structural checks");
    check->require_subcommand(1);
    check->fallthrough();
    {
        auto *s = check->add_subcommand("commuting", "Pairwise commutation of every overlapping gate pair");
        auto in = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(commq::kDefaultTolerance);
        s->add_option("--in", *in, "Circuit file")->required();
        s->add_option("--tol", *tol, "Tolerance");
        s->callback([&, in, tol] {
            action = [&, in, tol] {
                run.set_command("check commuting");
                commq::AnalysisOptions o;
                o.tolerance = *tol;
                o.threads = g.threads;
                auto r = commq::check_pairwise_commuting(run.load(*in), o);
                run.emit(commq::to_json(r));
                return r.pass ? 0 : kExitCheckFailed;
            };
        });
    }
    {
        auto *s = check->add_subcommand("locality", "Every gate acts on at most c qubits");
        auto in = std::make_shared<std::string>();
        auto c = std::make_shared<std::size_t>(5);
        auto tol = std::make_shared<double>(commq::kDefaultTolerance);
        s->add_option("--in", *in, "Circuit file")->required();
        s->add_option("--c", *c, "Locality bound")->required();
        s->add_option("--tol", *tol, "Tolerance");
        s->callback([&, in, c, tol] {
            action = [&, in, c, tol] {
                run.set_command("check locality");
                auto r = commq::check_c_local(run.load(*in), *c, *tol);
                run.emit(commq::to_json(r));
                return r.pass ? 0 : kExitCheckFailed;
            };
        });
    }

    // postselect
    {
        auto *s = app.add_subcommand("postselect", "Conditional acceptance Pr[out = 1 | post = 0]");
        auto sampler_kind = std::make_shared<std::string>("oracle");
        auto circuit = std::make_shared<std::string>();
        auto f = std::make_shared<std::string>();
        auto d = std::make_shared<std::string>();
        auto l = std::make_shared<std::size_t>(0);
        auto x = std::make_shared<std::string>();
        auto shots = std::make_shared<std::uint64_t>(10000);
        auto seed = std::make_shared<std::uint64_t>(0);
        auto exact = std::make_shared<bool>(false);
        auto accept_at = std::make_shared<double>(0.6);
        auto reject_at = std::make_shared<double>(0.4);
        s->add_option("--sampler", *sampler_kind, "Where outcomes come from")->check(CLI::IsMember({"oracle", "weak-sim"}));
        s->add_option("--circuit", *circuit, "Circuit whose outputs are the b+2 bits, or one output plus a postselect list (oracle sampler)");
        s->add_option("--f", *f, "Sandwich F (weak-sim sampler)");
        s->add_option("--d", *d, "Sandwich D (weak-sim sampler)");
        s->add_option("--l", *l, "Sandwich ancilla count (weak-sim sampler)");
        s->add_option("--x", *x, "Input bits");
        s->add_option("--shots", *shots, "Number of samples")->check(CLI::PositiveNumber);
        s->add_option("--seed", *seed, "Master seed");
        s->add_flag("--exact", *exact, "Compute the ratio from the exact distribution");
        s->add_option("--accept-at", *accept_at, "Accept when the interval lies at or above this");
        s->add_option("--reject-at", *reject_at, "Reject when the interval lies at or below this");
        s->callback([&, sampler_kind, circuit, f, d, l, x, shots, seed, exact, accept_at, reject_at] {
            action = [&, sampler_kind, circuit, f, d, l, x, shots, seed, exact, accept_at, reject_at] {
                run.set_command("postselect");
                run.set_seed(*seed);
                Bits bits = commq::parse_bits(*x);
                Distribution dist;
                std::function<std::uint64_t(commq::Rng &)> draw;
                std::size_t width = 0;
                std::shared_ptr<commq::SandwichSpec> spec;
                std::shared_ptr<commq::OracleFSampler> fs;
                if (*sampler_kind == "oracle") {
                    if (circuit->empty()) {
                        throw CLI::ValidationError("--circuit is required with --sampler oracle");
                    }
                    Circuit c = as_en_input(run.load(*circuit));
                    dist = commq::output_distribution(c, bits);
                    width = dist.width();
                    draw = [&dist](commq::Rng &rng) { return std::uint64_t(commq::sample_index(dist, rng)); };
                } else {
                    if (f->empty() || d->empty() || *l == 0) {
                        throw CLI::ValidationError("--f, --d and --l are required with --sampler weak-sim");
                    }
                    spec = std::make_shared<commq::SandwichSpec>(commq::SandwichSpec{run.load(*f), run.load(*d), *l});
                    fs = std::make_shared<commq::OracleFSampler>(spec->f);
                    commq::PhaseTable table(spec->d);
                    width = *l;
                    if (*exact) {
                        dist = commq::sandwich_exact(*spec, bits);
                    }
                    draw = [spec, fs, bits, table](commq::Rng &rng) {
                        Bits z = fs->sample(bits, rng);
                        auto small = commq::small_output_distribution(table, z, spec->l);
                        return std::uint64_t(commq::sample_index(small, rng));
                    };
                }
                auto est = *exact ? commq::conditional_acceptance_exact(dist)
                                  : commq::conditional_acceptance(draw, width, *shots, *seed, g.threads);
                json j = commq::to_json(est);
                j["decision"] = commq::classify(est, *accept_at, *reject_at);
                j["thresholds"] = {{"accept_at", *accept_at}, {"reject_at", *reject_at}};
                run.emit(j);
                return 0;
            };
        });
    }

    // compare
    {
        auto *s = app.add_subcommand("compare", "Max-entry and TV distance between two distribution files");
        auto a = std::make_shared<std::string>();
        auto b = std::make_shared<std::string>();
        auto tol = std::make_shared<double>(-1);
        s->add_option("a", *a, "Distribution file")->required();
        s->add_option("b", *b, "Distribution file")->required();
        s->add_option("--tol", *tol, "Exit 1 when the max-entry difference exceeds this");
        s->callback([&, a, b, tol] {
            action = [&, a, b, tol] {
                run.set_command("compare");
                auto da = run.load_distribution(*a);
                auto db = run.load_distribution(*b);
                if (da.width() != db.width()) {
                    throw commq::ContractError("distributions have widths " + std::to_string(da.width()) + " and " +
                                               std::to_string(db.width()));
                }
                double mx = commq::max_abs_difference(da, db);
                double tv = commq::total_variation(da, db);
                json j = {{"max_abs", mx}, {"tv", tv}};
                bool ok = *tol < 0 || mx <= *tol;
                if (*tol >= 0) {
                    j["tol"] = *tol;
                    j["pass"] = ok;
                }
                run.emit(j);
                return ok ? 0 : kExitCheckFailed;
            };
        });
    }

    // demo
    auto *demo = app.add_subcommand("demo", "End-to-end demonstrations");
    demo->require_subcommand(1);
    demo->fallthrough();
    {
        auto *s = demo->add_subcommand("theorem1", "C -> depth-3 compression -> E_n -> commuting conjugation -> checks");
        auto seed = std::make_shared<std::uint64_t>(7);
        s->add_option("--seed", *seed, "Master seed");
        s->callback([&, seed] {
            action = [&, seed] {
                run.set_command("demo theorem1");
                return demo_theorem1(run, *seed, g.threads);
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }
    try {
        return action();
    } catch (const CLI::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    } catch (const commq::ValidationError &e) {
        std::cerr << "error: " << e.what() << "\n";
        for (const auto &d : e.diagnostics()) {
            std::cerr << "  " << d << "\n";
        }
        return kExitUsage;
    } catch (const commq::ParseError &e) {
        std::cerr << "error: " << e.what() << " at " << e.position() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
