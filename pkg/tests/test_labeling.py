from fractions import Fraction

import pytest

from magiclab import graph as gr
from magiclab import labeling as lb


def test_weights_and_verdicts():
    k3 = gr.complete(3)
    v = lb.verify_cdm(k3, [3, 1, 2])
    assert v.magic and v.constant == 6 and v.to_text() == "MAGIC k'=6"
    c4 = gr.cycle(4)
    v = lb.verify_cdm(c4, [1, 2, 3, 4])
    assert not v.magic
    # w(0) = 4+1+2 = 7, w(1) = 1+2+3 = 6
    assert v.to_text() == "NOT-MAGIC v=0 w=7 u=1 w=6"
    assert lb.weight(c4, [1, 2, 3, 4], 2) == 9
    assert lb.weights(c4, [1, 2, 3, 4]).tolist() == [7, 6, 9, 8]


def test_not_a_bijection():
    v = lb.verify_cdm(gr.complete(3), [1, 1, 2])
    assert not v.magic and "bijection" in v.to_text()
    with pytest.raises(lb.LabelingError):
        lb.verify_cdm(gr.complete(3), [1, 2])


def test_regular_constant():
    assert lb.regular_magic_constant(gr.complete(5)) == 15
    assert lb.regular_magic_constant(gr.cycle(4)) == Fraction(15, 2)
    assert lb.regular_magic_constant(gr.complete_bipartite(1, 2)) is None
    assert lb.regular_magic_constant(gr.cycle(9)) == 15


def test_distance_antimagic():
    c5 = gr.cycle(5)
    assert lb.verify_distance_antimagic(c5, [1, 2, 3, 4, 5])
    assert not lb.verify_distance_antimagic(gr.complete_bipartite(1, 2), [1, 2, 3])


def test_text_round_trip():
    labs = [3, 1, 2, 6, 5, 4]
    assert lb.parse_labeling(lb.to_text(labs)) == labs
    assert lb.parse_labeling(lb.to_text(labs, 3) + "# MAGIC k'=1\n") == labs
    assert lb.to_text(labs, 3) == "6\n3 1 2\n6 5 4\n"
    with pytest.raises(lb.LabelingError):
        lb.parse_labeling("3\n1 2\n")
    with pytest.raises(lb.LabelingError):
        lb.parse_labeling("")
