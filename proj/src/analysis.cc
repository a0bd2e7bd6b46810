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

#include "commq/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "commq/error.h"
#include "commq/parallel.h"

namespace commq {

namespace {

std::size_t log2_dim(const Matrix &u) {
    auto dim = static_cast<std::size_t>(u.rows());
    if (dim == 0 || (dim & (dim - 1)) != 0 || u.rows() != u.cols()) {
        throw ContractError("operator is not a square power-of-two matrix");
    }
    return static_cast<std::size_t>(std::countr_zero(dim));
}

// Re-expresses a list-ordered matrix over `from` in the list order `to` (a permutation of `from`).
Matrix reorder(const Matrix &m, const std::vector<Qubit> &from, const std::vector<Qubit> &to) {
    std::size_t k = from.size();
    std::vector<std::size_t> src_pos(k);
    for (std::size_t i = 0; i < k; i++) {
        src_pos[i] = static_cast<std::size_t>(std::find(from.begin(), from.end(), to[i]) - from.begin());
    }
    std::size_t dim = std::size_t{1} << k;
    std::vector<std::size_t> perm(dim);
    for (std::size_t j = 0; j < dim; j++) {
        std::size_t s = 0;
        for (std::size_t i = 0; i < k; i++) {
            if ((j >> (k - 1 - i)) & 1) {
                s |= std::size_t{1} << (k - 1 - src_pos[i]);
            }
        }
        perm[j] = s;
    }
    Matrix out(dim, dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            out(r, c) = m(perm[r], perm[c]);
        }
    }
    return out;
}

// max |AB - BA| for A on (P, O) and B on (O, Q). Only the overlap O is
// summed over, so the cost is 4^|P+O+Q| * 2^|O| rather than a dense product.
double commutator_residual(const Gate &ga, const Gate &gb) {
    auto qa = ga.qubits();
    auto qb = gb.qubits();
    std::vector<Qubit> p, o, q;
    for (auto x : qa) {
        (std::find(qb.begin(), qb.end(), x) != qb.end() ? o : p).push_back(x);
    }
    for (auto x : qb) {
        if (std::find(qa.begin(), qa.end(), x) == qa.end()) {
            q.push_back(x);
        }
    }
    if (o.empty()) {
        return 0;
    }
    std::size_t joint = p.size() + o.size() + q.size();
    if (joint > kMaxAnalysisQubits) {
        throw ResourceError(
            "gates " + ga.str() + " and " + gb.str() + " span " + std::to_string(joint) + " qubits; cap is " +
            std::to_string(kMaxAnalysisQubits));
    }
    std::vector<Qubit> a_order = p;
    a_order.insert(a_order.end(), o.begin(), o.end());
    std::vector<Qubit> b_order = o;
    b_order.insert(b_order.end(), q.begin(), q.end());
    Matrix a = reorder(unitary_of(ga), qa, a_order);
    Matrix b = reorder(unitary_of(gb), qb, b_order);
    std::size_t dp = std::size_t{1} << p.size();
    std::size_t dov = std::size_t{1} << o.size();
    std::size_t dq = std::size_t{1} << q.size();
    double worst = 0;
    for (std::size_t pr = 0; pr < dp; pr++) {
        for (std::size_t orow = 0; orow < dov; orow++) {
            for (std::size_t qr = 0; qr < dq; qr++) {
                for (std::size_t pc = 0; pc < dp; pc++) {
                    for (std::size_t ocol = 0; ocol < dov; ocol++) {
                        for (std::size_t qc = 0; qc < dq; qc++) {
                            Complex ab = 0, ba = 0;
                            for (std::size_t om = 0; om < dov; om++) {
                                ab += a(pr * dov + orow, pc * dov + om) * b(om * dq + qr, ocol * dq + qc);
                                ba += b(orow * dq + qr, om * dq + qc) * a(pr * dov + om, pc * dov + ocol);
                            }
                            worst = std::max(worst, std::abs(ab - ba));
                        }
                    }
                }
            }
        }
    }
    return worst;
}

}  // namespace

CommutationReport check_pairwise_commuting(const Circuit &circuit, const AnalysisOptions &options) {
    const auto &gs = circuit.gates();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < gs.size(); i++) {
        auto qi = gs[i].qubits();
        for (std::size_t j = i + 1; j < gs.size(); j++) {
            bool overlap = std::any_of(qi.begin(), qi.end(), [&](Qubit q) { return gs[j].touches(q); });
            if (overlap) {
                pairs.emplace_back(i, j);
            }
        }
    }
    std::vector<double> residual(pairs.size(), 0);
    parallel_for(pairs.size(), options.threads, [&](std::size_t begin, std::size_t end, std::size_t) {
        for (std::size_t k = begin; k < end; k++) {
            try {
                residual[k] = commutator_residual(gs[pairs[k].first], gs[pairs[k].second]);
            } catch (const ResourceError &e) {
                throw ResourceError(
                    "pair (" + std::to_string(pairs[k].first) + ", " + std::to_string(pairs[k].second) + "): " +
                    e.what());
            }
        }
    });
    CommutationReport report;
    report.pairs_checked = pairs.size();
    for (std::size_t k = 0; k < pairs.size(); k++) {
        report.max_residual = std::max(report.max_residual, residual[k]);
        if (residual[k] > options.tolerance && !report.witness) {
            report.pass = false;
            report.witness = CommutationWitness{pairs[k].first, pairs[k].second, residual[k]};
        }
    }
    return report;
}

Matrix embed_operator(const Matrix &restricted, std::span<const std::size_t> positions, std::size_t k) {
    std::size_t dim = std::size_t{1} << k;
    std::size_t r_dim = std::size_t{1} << positions.size();
    if (static_cast<std::size_t>(restricted.rows()) != r_dim) {
        throw ContractError("restricted operator does not match its positions");
    }
    std::size_t support_mask = 0;
    for (auto pos : positions) {
        support_mask |= std::size_t{1} << (k - 1 - pos);
    }
    // local index of a full index: the support bits packed in list order
    auto local = [&](std::size_t idx) {
        std::size_t out = 0;
        for (std::size_t i = 0; i < positions.size(); i++) {
            if ((idx >> (k - 1 - positions[i])) & 1) {
                out |= std::size_t{1} << (positions.size() - 1 - i);
            }
        }
        return out;
    };
    Matrix out = Matrix::Zero(dim, dim);
    for (std::size_t r = 0; r < dim; r++) {
        for (std::size_t c = 0; c < dim; c++) {
            if ((r & ~support_mask) == (c & ~support_mask)) {
                out(r, c) = restricted(local(r), local(c));
            }
        }
    }
    return out;
}

SupportSet support(const Matrix &u, double tolerance) {
    std::size_t k = log2_dim(u);
    std::size_t dim = std::size_t{1} << k;
    SupportSet out;
    for (std::size_t pos = 0; pos < k; pos++) {
        std::size_t bit = std::size_t{1} << (k - 1 - pos);
        double z_comm = 0, x_comm = 0;
        for (std::size_t r = 0; r < dim; r++) {
            for (std::size_t c = 0; c < dim; c++) {
                if ((r ^ c) & bit) {
                    z_comm = std::max(z_comm, 2 * std::abs(u(r, c)));
                }
                x_comm = std::max(x_comm, std::abs(u(r, c ^ bit) - u(r ^ bit, c)));
            }
        }
        if (z_comm > tolerance || x_comm > tolerance) {
            out.positions.push_back(pos);
        }
    }
    std::size_t r_dim = std::size_t{1} << out.positions.size();
    out.restricted = Matrix(r_dim, r_dim);
    // rows and columns where every position outside the support is 0
    auto full = [&](std::size_t local) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < out.positions.size(); i++) {
            if ((local >> (out.positions.size() - 1 - i)) & 1) {
                idx |= std::size_t{1} << (k - 1 - out.positions[i]);
            }
        }
        return idx;
    };
    for (std::size_t r = 0; r < r_dim; r++) {
        for (std::size_t c = 0; c < r_dim; c++) {
            out.restricted(r, c) = u(full(r), full(c));
        }
    }
    out.residual = max_abs_difference(u, embed_operator(out.restricted, out.positions, k));
    return out;
}

LocalityReport check_c_local(const Circuit &circuit, std::size_t bound, double tolerance) {
    LocalityReport report;
    report.bound = bound;
    for (const auto &g : circuit.gates()) {
        std::size_t s = support(unitary_of(g), tolerance).positions.size();
        report.support_sizes.push_back(s);
        report.max_support = std::max(report.max_support, s);
        if (s > bound) {
            report.pass = false;
        }
    }
    return report;
}

nlohmann::json to_json(const CommutationReport &report) {
    nlohmann::json j;
    j["pass"] = report.pass;
    j["pairs_checked"] = report.pairs_checked;
    j["max_residual"] = report.max_residual;
    if (report.witness) {
        j["witness"] = {
            {"first", report.witness->first},
            {"second", report.witness->second},
            {"magnitude", report.witness->magnitude}};
    } else {
        j["witness"] = nullptr;
    }
    return j;
}

nlohmann::json to_json(const LocalityReport &report) {
    return {
        {"pass", report.pass},
        {"bound", report.bound},
        {"max_support", report.max_support},
        {"support_sizes", report.support_sizes}};
}

}  // namespace commq
