"""Shared hypothesis strategies."""

from hypothesis import strategies as st

from bidend.fqsym import Perm
from bidend.pforest import DecorationSet, enumerate_forests

SINGLE = DecorationSet.single()
ABC = DecorationSet.parse("a,b,c")


def forests(decorations=SINGLE, min_weight=1, max_weight=5):
    return st.integers(min_weight, max_weight).flatmap(
        lambda n: st.sampled_from(enumerate_forests(decorations, n)))


def perms(min_n=1, max_n=5):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.permutations(range(1, n + 1)).map(Perm))
