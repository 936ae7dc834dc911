import itertools

import pytest

from magiclab import graph as gr
from magiclab import partition as pt
from magiclab.labeling import verify_cdm
from magiclab.oracle import FOUND, brute_force_partition

WORKED = ((3, 15, 16), (1, 6, 13, 14), (2, 9, 11, 12), (4, 5, 7, 8, 10))


def test_instance():
    i = pt.PartitionInstance((3, 4, 4, 5))
    assert (i.n, i.k, i.target) == (16, 4, 34)
    assert i.prefix_sums() == [3, 7, 11, 16]
    assert pt.PartitionInstance((2, 2, 2, 4)).target is None
    with pytest.raises(pt.PartitionError):
        pt.PartitionInstance((0, 3))


def test_necessary_mod():
    assert pt.necessary_mod(pt.PartitionInstance((3, 4, 4, 5))).passed
    assert not pt.necessary_mod(pt.PartitionInstance((1, 2, 3, 4))).passed
    assert pt.necessary_mod(pt.PartitionInstance((1, 2, 2, 2))).passed


def test_residue_condition_is_not_integrality():
    assert pt.residue_condition(16, 4) and not pt.residue_condition(10, 4)
    # n=9, k=3: target 15 exists (magic square rows) although 9 mod 6 = 3
    assert not pt.residue_condition(9, 3)
    sol = pt.solve(pt.PartitionInstance((3, 3, 3)))
    assert isinstance(sol, pt.PartitionSolution)
    for k in (1, 2, 4, 8):
        for n in range(k, 60):
            assert pt.residue_condition(n, k) == (n * (n + 1) // 2 % k == 0)


def test_necessary_prefix():
    c = pt.necessary_prefix(pt.PartitionInstance((2, 4, 4, 6)))
    assert not c.passed and "31 < 34" in c.detail
    assert pt.necessary_prefix(pt.PartitionInstance((3, 4, 4, 5))).passed
    assert pt.necessary_prefix(pt.PartitionInstance((1, 1, 1))).passed
    # unsorted input is sorted before the check
    assert not pt.necessary_prefix(pt.PartitionInstance((6, 4, 2, 4))).passed


def test_solve():
    sol = pt.solve(pt.PartitionInstance((3, 4, 4, 5)))
    assert isinstance(sol, pt.PartitionSolution)
    assert [len(p) for p in sol.parts] == [3, 4, 4, 5]
    assert {sum(p) for p in sol.parts} == {34}
    assert pt.solve(pt.PartitionInstance((2, 4, 4, 6))).reason == "prefix"
    assert pt.solve(pt.PartitionInstance((1, 1, 1))).reason == "exhausted"
    assert isinstance(pt.solve(pt.PartitionInstance((1,))), pt.PartitionSolution)
    with pytest.raises(pt.PartitionError):
        pt.solve(pt.PartitionInstance((40, 40)))


def test_worked_example_validates():
    sol = pt.PartitionSolution((3, 4, 4, 5), WORKED).validate()
    assert sol.to_text().splitlines()[0] == "3: 3 15 16"
    with pytest.raises(pt.PartitionError):
        pt.PartitionSolution((3, 4, 4, 5), WORKED[:3] + ((4, 5, 7, 8, 9),)).validate()


def test_solve_agrees_with_enumeration():
    for n in range(1, 13):
        for k in range(1, n + 1):
            for sizes in _compositions(n, k):
                got = pt.solve(pt.PartitionInstance(sizes))
                want = brute_force_partition(sizes)
                assert isinstance(got, pt.PartitionSolution) == (want.status == FOUND), sizes


def _compositions(n, k):
    # non-decreasing size vectors
    out = set()
    for cut in itertools.combinations_with_replacement(range(1, n + 1), k):
        if sum(cut) == n:
            out.add(tuple(sorted(cut)))
    return sorted(out)


@pytest.mark.parametrize("base", [gr.cycle(4), gr.complete(4), gr.disjoint_copies(2, gr.complete(2))])
def test_blow_up(base):
    b = base.is_regular()
    g, lab = pt.blow_up_labeling(base, (3, 4, 4, 5))
    assert verify_cdm(g, lab).constant == (b + 1) * 34
    g, lab = pt.labeling_from_parts(base, pt.PartitionSolution((3, 4, 4, 5), WORKED))
    assert verify_cdm(g, lab).constant == (b + 1) * 34
    assert pt.blow_up_labeling(base, (2, 4, 4, 6)).reason == "prefix"


def test_blow_up_rejects_irregular():
    with pytest.raises(pt.PartitionError):
        pt.blow_up_labeling(gr.complete_bipartite(1, 2), (1, 2, 3))


def test_parse():
    assert pt.parse_instance("4 3 4 4 5").sizes == (3, 4, 4, 5)
    with pytest.raises(pt.PartitionError):
        pt.parse_instance("3 1 2")
    with pytest.raises(pt.PartitionError):
        pt.parse_instance("x")
