import random
from fractions import Fraction

import pytest
from hypothesis import settings

from birevnf.continuous import SymmetryContext
from birevnf.poly import GaussianRational, PolyMap, Polynomial
from birevnf.symmetry_ops import pipeline

settings.register_profile("exact", deadline=None, max_examples=25, derandomize=True)
settings.load_profile("exact")


SEED = 20260809


def make_rng(salt: int = 0) -> random.Random:
    return random.Random(SEED + salt)


def random_coefficient(rng: random.Random) -> GaussianRational:
    return GaussianRational(
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
        Fraction(rng.randint(-4, 4), rng.randint(1, 3)),
    )


def random_polynomial(
    rng: random.Random, nblocks: int, max_degree: int = 6, terms: int = 4
) -> Polynomial:
    nvars = 2 * nblocks + 2
    built: dict = {}
    for _ in range(terms):
        degree = rng.randint(0, max_degree)
        mono = [0] * nvars
        for _ in range(degree):
            mono[rng.randrange(nvars)] += 1
        built[tuple(mono)] = random_coefficient(rng)
    return Polynomial(nvars, built)


def random_real_polynomial(
    rng: random.Random, nblocks: int, max_degree: int = 6, terms: int = 4
) -> Polynomial:
    p = random_polynomial(rng, nblocks, max_degree, terms)
    doubled = p + p.conj()
    return doubled


def random_polymap(
    rng: random.Random, nblocks: int, max_degree: int = 6, terms: int = 3
) -> PolyMap:
    xs = tuple(random_real_polynomial(rng, nblocks, max_degree, terms) for _ in range(2))
    zs = tuple(random_polynomial(rng, nblocks, max_degree, terms) for _ in range(nblocks))
    return PolyMap(xs, zs)


@pytest.fixture(scope="session")
def nonres2_plus():
    return SymmetryContext.from_case("non_resonant", (2,), (1, 1, 1))


@pytest.fixture(scope="session")
def nonres2_minus():
    return SymmetryContext.from_case("non_resonant", (2,), (-1, 1, 1))


@pytest.fixture(scope="session")
def c3_contexts():
    signs_by_type = {
        "A": (1, 1, 1, 1),
        "B": (1, 1, -1, 1),
        "C": (-1, 1, 1, 1),
        "D": (-1, 1, -1, 1),
    }
    return {
        typ: SymmetryContext.from_case("res_n1n2_C3", (1, 2), signs)
        for typ, signs in signs_by_type.items()
    }


@pytest.fixture(scope="session")
def c3_gensets(c3_contexts):
    return {typ: pipeline(ctx) for typ, ctx in c3_contexts.items()}
