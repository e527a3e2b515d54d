import functools

import pytest

from cmkit import (
    FiniteGroup,
    Permutation,
    QuasiplatonicSurface,
    build_gm,
    canonical_vector,
    character_table,
)


@functools.lru_cache(maxsize=None)
def gm_bundle(m):
    """(instance, surface, table) for gm(m), computed once per session."""
    inst = build_gm(m)
    X = QuasiplatonicSurface.from_vector(canonical_vector(inst))
    T = character_table(inst.group)
    return inst, X, T


@functools.lru_cache(maxsize=None)
def symmetric_3():
    return FiniteGroup.from_generators(3, [Permutation([1, 0, 2]), Permutation([1, 2, 0])])


@functools.lru_cache(maxsize=None)
def klein_4():
    return FiniteGroup.from_generators(4, [Permutation([1, 0, 2, 3]), Permutation([0, 1, 3, 2])])


@pytest.fixture
def s3():
    return symmetric_3()


@pytest.fixture
def v4():
    return klein_4()
