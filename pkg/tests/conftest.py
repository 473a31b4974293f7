import random
from fractions import Fraction

import pytest

from nakayama.catalog import entry
from nakayama.hopf import Character
from nakayama.scalars import QQ_q


@pytest.fixture(scope="session")
def built():
    """Session cache of catalog builds (completion is the expensive part)."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = entry(name).build()
        return cache[name]

    return get


def sample_character(h, family, rng):
    """A seeded random valid character of a catalog presentation."""
    q = QQ_q.q
    one = h.field.one
    if family == "quantum":
        # diagonal torus characters: X_ii -> lambda_i with product 1
        n = int(len(h.generators) ** 0.5)
        lams = []
        for _ in range(n - 1):
            lams.append(q ** rng.randint(-2, 2))
        prod = one
        for l in lams:
            prod = prod * l
        lams.append(one / prod)
        vals = []
        for idx in range(n * n):
            i, j = idx // n, idx % n
            vals.append(lams[i] if i == j else h.field.zero)
        return Character(h, vals)
    if family in ("laurent", "group"):
        # values on tower generators subject to the conjugation relations;
        # +-1 is always admissible, and free factors allow any unit
        data = h.polycyclic
        d = data.hirsch_length
        vals = [None] * (2 * d)
        for j in range(d):
            acts_nontrivially = any(
                data.actions[k][j][j] == -1
                for k in range(j + 1, d)) or any(
                data.actions[j][i][m] != (1 if i == m else 0)
                for i in range(j) for m in range(j))
            if acts_nontrivially:
                v = h.field.coerce(rng.choice((1, -1)))
            else:
                v = h.field.coerce(Fraction(rng.choice((1, 2, 3, -1, -2)), 1))
            vals[2 * j] = v
            vals[2 * j + 1] = one / v
        return Character(h, vals)
    if family == "enveloping":
        # linear functionals vanishing on the derived subalgebra
        from nakayama.builders import _bracket_vec

        dim = h.lie_dim
        span = set()
        for i in range(dim):
            for j in range(i + 1, dim):
                span.update(_bracket_vec(h.lie_brackets, h.field, i, j))
        vals = [h.field.zero if i in span
                else h.field.coerce(rng.randint(-3, 3)) for i in range(dim)]
        return Character(h, vals)
    raise ValueError(family)


@pytest.fixture
def char_sampler():
    return sample_character
