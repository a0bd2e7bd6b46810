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

#ifndef COMMQ_WEAK_SIM_H
#define COMMQ_WEAK_SIM_H

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "commq/circuit.h"
#include "commq/distribution.h"
#include "commq/dyadic_phase.h"
#include "commq/statevector.h"

namespace commq {

inline constexpr std::size_t kMaxSandwichOutputs = 20;

/// Diagonal entries of Composite gates are snapped to dyadic phases at this level or coarser.
inline constexpr int kSnapLevel = 24;

/// (F^dagger (x) H^l) D (F (x) H^l).
///
/// D has t + l qubits: qubit i < t of D is F's output i, qubit t + j is the
/// j-th of l fresh |0> ancillas. Every gate of D must be diagonal.
struct SandwichSpec {
    Circuit f;
    Circuit d;
    std::size_t l = 0;

    std::size_t t() const {
        return f.outputs().size();
    }
};

/// Throws ValidationError / DomainError / ResourceError on a malformed spec.
void check_sandwich(const SandwichSpec &spec);

/// The full circuit over F's register followed by the l ancillas; outputs are the ancillas.
Circuit assemble(const SandwichSpec &spec);

/// D's diagonal as a sum of per-gate dyadic phase tables.
class PhaseTable {
   public:
    /// Throws DomainError naming the gate if a gate is not diagonal, or if a
    /// Composite diagonal entry is not within 1e-9 of a dyadic phase.
    explicit PhaseTable(const Circuit &d);

    std::size_t n_qubits() const {
        return n_qubits_;
    }
    /// f(bits), where bit q of `index` is D's qubit q.
    DyadicPhase phase(std::uint64_t index) const;

   private:
    struct Term {
        std::vector<Qubit> qubits;          // list order
        std::vector<DyadicPhase> entries;   // indexed by list-ordered local pattern
    };
    std::size_t n_qubits_ = 0;
    std::vector<Term> terms_;
};

/// f(z, w) for D, z over the first t qubits and w over the last l.
DyadicPhase phase_f(const Circuit &d, const Bits &z, const Bits &w);

/// Measurement distribution of H^l 2^{-l/2} sum_w e^{i f(z0, w)} |w>, computed
/// exactly with a Walsh-Hadamard transform.
Distribution small_output_distribution(const PhaseTable &table, const Bits &z0, std::size_t l);
Distribution small_output_distribution(const Circuit &d, const Bits &z0, std::size_t l);

/// sum_z Pr[F(x) = z] * small_output_distribution(z), with Pr[F(x) = z] from the oracle.
Distribution sandwich_exact(const SandwichSpec &spec, const Bits &x, const SimOptions &options = {});

/// sum_z q(z) * small_output_distribution(z) for an arbitrary distribution q
/// over F's outputs: the exact law of weak_sample driven by a sampler with law q.
Distribution sandwich_mixture(const SandwichSpec &spec, const Distribution &q);

/// Source of z ~ F(x). Implementations must be safe to call concurrently.
class FSampler {
   public:
    virtual ~FSampler() = default;
    /// Outcome over F's t outputs.
    virtual Bits sample(const Bits &x, Rng &rng) const = 0;
    /// Declared additive accuracy per outcome. Not verified.
    virtual double epsilon() const = 0;
};

/// Exact sampling from the statevector oracle; distributions are cached per x.
class OracleFSampler : public FSampler {
   public:
    explicit OracleFSampler(Circuit f, SimOptions options = {});
    Bits sample(const Bits &x, Rng &rng) const override;
    double epsilon() const override {
        return 0;
    }
    const Distribution &distribution(const Bits &x) const;

   private:
    Circuit f_;
    SimOptions options_;
    mutable std::mutex mutex_;
    mutable std::map<std::string, Distribution> cache_;
};

/// Samples a fixed distribution regardless of x (used to inject a biased sampler).
class DistributionFSampler : public FSampler {
   public:
    DistributionFSampler(Distribution dist, double epsilon) : dist_(std::move(dist)), epsilon_(epsilon) {
    }
    Bits sample(const Bits &x, Rng &rng) const override;
    double epsilon() const override {
        return epsilon_;
    }

   private:
    Distribution dist_;
    double epsilon_;
};

struct WeakSampleOptions {
    unsigned threads = 1;
};

/// Per shot i, with rng = derived_rng(seed, i): z0 = sampler(x), then y drawn
/// from small_output_distribution(z0). Counts do not depend on `threads`.
/// Throws ContractError if the sampler returns the wrong length.
Counts weak_sample(
    const SandwichSpec &spec,
    const Bits &x,
    const FSampler &sampler,
    std::uint64_t seed,
    std::uint64_t shots,
    const WeakSampleOptions &options = {});

}  // namespace commq

#endif
