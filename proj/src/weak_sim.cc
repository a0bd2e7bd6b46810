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

#include "commq/weak_sim.h"

#include <cmath>
#include <unordered_map>

#include "commq/error.h"
#include "commq/parallel.h"

namespace commq {

PhaseTable::PhaseTable(const Circuit &d) : n_qubits_(d.n_qubits()) {
    for (std::size_t i = 0; i < d.gates().size(); i++) {
        const Gate &g = d.gates()[i];
        std::string name = "gate " + std::to_string(i) + " " + g.str();
        for (auto q : g.qubits()) {
            if (q >= n_qubits_) {
                throw ValidationError({name + ": qubit out of range"});
            }
        }
        if (!is_diagonal(g)) {
            throw DomainError(name + " is not diagonal in the Z basis");
        }
        Term term;
        term.qubits = g.qubits();
        if (auto r = g.get_if<gates::PhaseShift>()) {
            term.entries = {DyadicPhase{}, phase_of(*r)};
        } else if (auto r = g.get_if<gates::ControlledPhase>()) {
            term.entries = {DyadicPhase{}, DyadicPhase{}, DyadicPhase{}, phase_of(*r)};
        } else if (g.is<gates::CZ>()) {
            term.entries = {DyadicPhase{}, DyadicPhase{}, DyadicPhase{}, DyadicPhase::elementary(+1, 1)};
        } else {
            const Matrix &m = g.get_if<gates::Composite>()->matrix;
            for (Eigen::Index j = 0; j < m.rows(); j++) {
                Complex e = m(j, j);
                auto snapped = DyadicPhase::snap(std::arg(e), kSnapLevel, 1e-9);
                if (std::abs(std::abs(e) - 1) > 1e-9 || !snapped) {
                    throw DomainError(
                        name + ": diagonal entry " + std::to_string(j) + " is not a dyadic phase within 1e-9");
                }
                term.entries.push_back(*snapped);
            }
        }
        terms_.push_back(std::move(term));
    }
}

DyadicPhase PhaseTable::phase(std::uint64_t index) const {
    DyadicPhase f;
    for (const auto &t : terms_) {
        std::size_t k = t.qubits.size();
        std::size_t local = 0;
        for (std::size_t i = 0; i < k; i++) {
            local |= ((index >> t.qubits[i]) & 1) << (k - 1 - i);
        }
        f += t.entries[local];
    }
    return f;
}

void check_sandwich(const SandwichSpec &spec) {
    require_valid(spec.f);
    if (spec.l > kMaxSandwichOutputs) {
        throw ResourceError("l = " + std::to_string(spec.l) + " exceeds the cap of " +
                            std::to_string(kMaxSandwichOutputs));
    }
    if (spec.d.n_qubits() != spec.t() + spec.l) {
        throw ValidationError({"D has " + std::to_string(spec.d.n_qubits()) + " qubits; expected t + l = " +
                               std::to_string(spec.t()) + " + " + std::to_string(spec.l)});
    }
    PhaseTable table(spec.d);
}

Circuit assemble(const SandwichSpec &spec) {
    check_sandwich(spec);
    std::size_t nf = spec.f.n_qubits();
    std::size_t t = spec.t();
    Circuit out = spec.f;
    out.set_gates({});
    std::vector<Qubit> ancillas;
    for (std::size_t j = 0; j < spec.l; j++) {
        ancillas.push_back(out.add_qubit());
    }
    std::vector<Qubit> d_map(t + spec.l);
    for (std::size_t i = 0; i < t; i++) {
        d_map[i] = spec.f.outputs()[i];
    }
    for (std::size_t j = 0; j < spec.l; j++) {
        d_map[t + j] = static_cast<Qubit>(nf + j);
    }
    out.append(spec.f.gates());
    for (auto a : ancillas) {
        out.append(Gate::h(a));
    }
    for (const auto &g : spec.d.gates()) {
        out.append(remap(g, d_map));
    }
    out.append(inverse(spec.f).gates());
    for (auto a : ancillas) {
        out.append(Gate::h(a));
    }
    out.set_outputs(ancillas);
    out.set_postselect({});
    return out;
}

DyadicPhase phase_f(const Circuit &d, const Bits &z, const Bits &w) {
    if (z.size() + w.size() != d.n_qubits()) {
        throw ContractError("phase_f: |z| + |w| must equal D's qubit count");
    }
    std::uint64_t index = 0;
    for (std::size_t i = 0; i < z.size(); i++) {
        index |= std::uint64_t{z[i] != 0} << i;
    }
    for (std::size_t j = 0; j < w.size(); j++) {
        index |= std::uint64_t{w[j] != 0} << (z.size() + j);
    }
    return PhaseTable(d).phase(index);
}

namespace {

Distribution small_distribution(const PhaseTable &table, std::uint64_t z_index, std::size_t l) {
    std::size_t t = table.n_qubits() - l;
    std::size_t dim = std::size_t{1} << l;
    std::vector<Complex> v(dim);
    for (std::size_t w = 0; w < dim; w++) {
        v[w] = table.phase(z_index | (static_cast<std::uint64_t>(w) << t)).unit();
    }
    // Walsh-Hadamard transform
    for (std::size_t h = 1; h < dim; h <<= 1) {
        for (std::size_t i = 0; i < dim; i += h << 1) {
            for (std::size_t j = i; j < i + h; j++) {
                Complex a = v[j], b = v[j + h];
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
    }
    std::vector<double> p(dim);
    double scale = 1.0 / static_cast<double>(dim);
    for (std::size_t y = 0; y < dim; y++) {
        p[y] = std::norm(v[y] * scale);
    }
    return Distribution(l, std::move(p));
}

std::uint64_t z_index_of(const Bits &z) {
    std::uint64_t idx = 0;
    for (std::size_t i = 0; i < z.size(); i++) {
        idx |= std::uint64_t{z[i] != 0} << i;
    }
    return idx;
}

}  // namespace

Distribution small_output_distribution(const PhaseTable &table, const Bits &z0, std::size_t l) {
    if (l > kMaxSandwichOutputs) {
        throw ResourceError("l = " + std::to_string(l) + " exceeds the cap of " + std::to_string(kMaxSandwichOutputs));
    }
    if (z0.size() + l != table.n_qubits()) {
        throw ContractError("z0 has " + std::to_string(z0.size()) + " bits; D expects " +
                            std::to_string(table.n_qubits() - std::min(l, table.n_qubits())));
    }
    return small_distribution(table, z_index_of(z0), l);
}

Distribution small_output_distribution(const Circuit &d, const Bits &z0, std::size_t l) {
    return small_output_distribution(PhaseTable(d), z0, l);
}

Distribution sandwich_mixture(const SandwichSpec &spec, const Distribution &q) {
    check_sandwich(spec);
    if (q.width() != spec.t()) {
        throw ContractError("F distribution has width " + std::to_string(q.width()) + "; F has " +
                            std::to_string(spec.t()) + " outputs");
    }
    PhaseTable table(spec.d);
    std::vector<double> p(std::size_t{1} << spec.l, 0.0);
    for (std::size_t z = 0; z < q.size(); z++) {
        if (q[z] == 0) {
            continue;
        }
        auto small = small_distribution(table, z, spec.l);
        for (std::size_t y = 0; y < p.size(); y++) {
            p[y] += q[z] * small[y];
        }
    }
    return Distribution(spec.l, std::move(p));
}

Distribution sandwich_exact(const SandwichSpec &spec, const Bits &x, const SimOptions &options) {
    check_sandwich(spec);
    return sandwich_mixture(spec, output_distribution(spec.f, x, spec.f.outputs(), options));
}

OracleFSampler::OracleFSampler(Circuit f, SimOptions options) : f_(std::move(f)), options_(options) {
}

const Distribution &OracleFSampler::distribution(const Bits &x) const {
    std::lock_guard lock(mutex_);
    auto key = to_string(x);
    auto it = cache_.find(key);
    if (it == cache_.end()) {
        it = cache_.emplace(key, output_distribution(f_, x, f_.outputs(), options_)).first;
    }
    return it->second;
}

Bits OracleFSampler::sample(const Bits &x, Rng &rng) const {
    const auto &d = distribution(x);
    return parse_bits(index_to_bits(sample_index(d, rng), d.width()));
}

Bits DistributionFSampler::sample(const Bits &, Rng &rng) const {
    return parse_bits(index_to_bits(sample_index(dist_, rng), dist_.width()));
}

Counts weak_sample(
    const SandwichSpec &spec,
    const Bits &x,
    const FSampler &sampler,
    std::uint64_t seed,
    std::uint64_t shots,
    const WeakSampleOptions &options) {
    check_sandwich(spec);
    PhaseTable table(spec.d);
    std::size_t t = spec.t();
    std::size_t l = spec.l;
    std::size_t chunks = chunk_count(shots, options.threads);
    std::vector<std::vector<std::uint64_t>> partial(chunks, std::vector<std::uint64_t>(std::size_t{1} << l, 0));
    parallel_for(shots, options.threads, [&](std::size_t begin, std::size_t end, std::size_t chunk) {
        std::unordered_map<std::uint64_t, Distribution> cache;
        auto &counts = partial[chunk];
        for (std::size_t i = begin; i < end; i++) {
            Rng rng = derived_rng(seed, i);
            Bits z = sampler.sample(x, rng);
            if (z.size() != t) {
                throw ContractError("F sampler returned " + std::to_string(z.size()) + " bits; expected " +
                                    std::to_string(t));
            }
            auto zi = z_index_of(z);
            auto it = cache.find(zi);
            if (it == cache.end()) {
                it = cache.emplace(zi, small_distribution(table, zi, l)).first;
            }
            counts[sample_index(it->second, rng)]++;
        }
    });
    Counts out{l, std::vector<std::uint64_t>(std::size_t{1} << l, 0)};
    for (const auto &c : partial) {
        for (std::size_t y = 0; y < c.size(); y++) {
            out.counts[y] += c[y];
        }
    }
    return out;
}

}  // namespace commq
