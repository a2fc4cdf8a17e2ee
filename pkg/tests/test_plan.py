import pytest
from hypothesis import given

from strategies import perm_pairs
from taskswap.errors import PermutationError
from taskswap.perm import Permutation, identity
from taskswap.plan import PlanCheck, SwapPlan, apply_plan, check_plan, plan_states
from taskswap.planners import plan
from taskswap.topology import line, ring

P = Permutation.of
LINE_SRC, LINE_TGT = P(2, 5, 6, 3, 1, 4, 8, 7), P(1, 6, 2, 3, 4, 5, 7, 8)
LINE_PLAN = SwapPlan.from_pairs([(2, 3), (3, 4), (4, 5), (5, 6), (7, 8), (1, 2), (3, 4), (2, 3), (1, 2)])


def test_serialisation():
    d = LINE_PLAN.to_dict()
    assert d["length"] == 9 and d["swaps"][0] == [2, 3]
    assert SwapPlan.from_dict(d) == LINE_PLAN
    states = LINE_PLAN.to_dict(LINE_SRC)["states"]
    assert len(states) == 10 and states[0] == LINE_SRC.to_list() and states[-1] == LINE_TGT.to_list()


@pytest.mark.parametrize("bad", [[], {"swaps": [[1]]}, {"swaps": [[1, 2]], "length": 2}, {"swaps": "x"}])
def test_from_dict_rejects(bad):
    with pytest.raises(PermutationError):
        SwapPlan.from_dict(bad)


def test_verify_examples():
    g = line(8)
    assert check_plan(g, LINE_SRC, LINE_TGT, LINE_PLAN).to_dict() == {"verdict": "OK"}
    swaps = list(LINE_PLAN.pairs())
    swaps[4] = (1, 8)
    bad = check_plan(g, LINE_SRC, LINE_TGT, SwapPlan.from_pairs(swaps))
    assert (bad.ok, bad.step, bad.reason) == (False, 5, "non-edge")
    short = check_plan(g, LINE_SRC, LINE_TGT, SwapPlan(LINE_PLAN.swaps[:-1]))
    assert (short.ok, short.reason) == (False, "endpoint-mismatch")
    assert short.to_dict()["reached"] == apply_plan(LINE_SRC, SwapPlan(LINE_PLAN.swaps[:-1])).to_list()


def test_out_of_range_swap_is_a_non_edge():
    assert check_plan(line(3), identity(3), identity(3), SwapPlan.from_pairs([(3, 4)])).reason == "non-edge"


def test_plan_check_ok():
    assert PlanCheck(True).to_dict() == {"verdict": "OK"}


@given(perm_pairs(3, 8))
def test_states_follow_the_plan(pair):
    src, tgt = pair
    result = plan(ring(src.n), src, tgt)
    states = plan_states(src, result)
    assert states[-1] == tgt
    assert all(sum(a != b for a, b in zip(x, y)) == 2 for x, y in zip(states, states[1:]))
    assert check_plan(ring(src.n), src, tgt, result).ok
