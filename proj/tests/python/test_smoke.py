# Copyright 2026 The commq Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import itertools
import json
import math
import pathlib

import pytest

import commq

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def bits(n):
    return ["".join(t) for t in itertools.product("01", repeat=n)]


def example():
    return commq.Circuit.load(str(DATA / "two_qubit_example.json"))


def test_or_reduction_zero_iff_zero_input():
    for commuting in (False, True):
        c = commq.or_reduction(3, commuting=commuting)
        assert len(c.outputs) == 2
        for x in bits(3):
            p0 = commq.output_distribution(c, x)["00"]
            assert p0 == pytest.approx(1.0 if x == "000" else 0.0, abs=1e-12)


def test_json_round_trip():
    c = example()
    again = commq.Circuit.from_json(c.to_json())
    assert again == c
    assert json.loads(c.to_json())["qubits"] == 2


def test_compression_and_commuting_pipeline():
    cc = commq.compress_depth3(example())
    assert cc["b"] == 6
    assert cc["circuit"].depth == 3
    a = commq.with_postselection_outputs(cc["circuit"])
    en = commq.build_En(a)
    conj = commq.build_conjugated_En(a)
    assert commq.check_commuting(conj)["pass"]
    assert commq.check_locality(conj, 5)["max_support"] == 5
    for x in bits(2):
        want = commq.output_distribution(en["circuit"], x)
        got = commq.output_distribution(conj, x)
        assert max(abs(want[k] - got[k]) for k in want) < 1e-9


def test_strong_sim_matches_statevector():
    c = commq.Circuit.load(str(DATA / "clifford.json"))
    ref = commq.output_distribution(c, "10")
    for y, p in ref.items():
        assert commq.strong_sim(c, "10", y) == pytest.approx(p, abs=1e-9)


def test_weak_sample_is_seeded_and_close():
    f = commq.Circuit.load(str(DATA / "iqp_f.json"))
    d = commq.Circuit.load(str(DATA / "iqp_d.json"))
    exact = commq.sandwich_exact(f, d, 2, "10")
    assert sum(exact.values()) == pytest.approx(1.0, abs=1e-12)
    a = commq.weak_sample(f, d, 2, "10", 20000, 11)
    b = commq.weak_sample(f, d, 2, "10", 20000, 11, threads=3)
    assert a == b
    emp = {k: v / 20000 for k, v in a.items()}
    assert commq.total_variation(emp, exact) < 0.02


def test_magic_compile_and_fanout_audit():
    c = commq.Circuit.load(str(DATA / "clifford_t.json"))
    compiled, gadgets = commq.magic_compile(c)
    assert len(gadgets) == 1
    audit = commq.audit_non_clifford_layer(commq.fanout_or_reduction(3))
    assert audit["single_layer"]


def test_postselect_filter_and_exact_acceptance():
    assert commq.postselect_filter("0001") == (0, 1)
    assert commq.postselect_filter("0000") == (0, 0)
    assert commq.postselect_filter("0101") == (1, 1)
    est = commq.conditional_acceptance_exact({"000": 0.1, "001": 0.2, "110": 0.7})
    assert est["value"] == pytest.approx(2 / 3)


def test_errors_are_typed():
    with pytest.raises(commq.ParseError):
        commq.Circuit.from_json("{")
    with pytest.raises(commq.ContractError):
        commq.postselect_filter("0")
    assert issubclass(commq.ValidationError, commq.Error)
    assert math.isfinite(commq.or_ancilla_count(5))
