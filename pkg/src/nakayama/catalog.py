"""The algebra catalog: named builders with recommended bounds.

Families: fd (structure tensors), quantum (presented, descent method),
enveloping (presented, CE resolution + trace oracle), laurent and group
(presented, tower resolution + adjoint trace oracle).
"""

from __future__ import annotations

from .builders import (PolycyclicData, build_enveloping, build_group_algebra,
                       build_laurent, build_quantum_matrices, build_quantum_sl,
                       build_uq_sl2)
from .fdbuilders import (build_fd_group_algebra, build_sweedler, build_taft,
                         small_group_tables)
from .scalars import QQ


class CatalogEntry:
    def __init__(self, name, family, description, builder,
                 degree_bound=6, truncate=8, window=3):
        self.name = name
        self.family = family
        self.description = description
        self.builder = builder
        self.degree_bound = degree_bound
        self.truncate = truncate
        self.window = window

    def build(self, degree_bound=None):
        return self.builder(degree_bound or self.degree_bound)

    def as_dict(self):
        return {"name": self.name, "family": self.family,
                "description": self.description,
                "degree_bound": self.degree_bound,
                "truncate": self.truncate, "window": self.window}


def _catalog():
    entries = []

    def add(name, family, description, builder, **kw):
        entries.append(CatalogEntry(name, family, description, builder, **kw))

    add("sweedler", "fd", "4-dimensional Sweedler algebra over Q",
        lambda d: build_sweedler())
    for level in (3, 5):
        add(f"taft-{level}", "fd",
            f"Taft algebra of dimension {level * level} over Q(zeta_{level})",
            lambda d, level=level: build_taft(level))
    for gname in sorted(small_group_tables()):
        add(f"group-{gname}", "fd", f"group algebra of {gname} over Q",
            lambda d, g=gname: build_fd_group_algebra(
                small_group_tables()[g], f"group-{g}"))
        add(f"dual-group-{gname}", "fd", f"dual of the group algebra of {gname}",
            lambda d, g=gname: _dual_named(g))

    add("oq-m-2", "quantum", "quantum 2x2 matrices over Q(q) (bialgebra)",
        lambda d: build_quantum_matrices(2, degree_bound=d))
    add("oq-sl-2", "quantum", "quantized coordinate ring of SL_2 over Q(q)",
        lambda d: build_quantum_sl(2, degree_bound=d))
    add("oq-sl-3", "quantum", "quantized coordinate ring of SL_3 over Q(q)",
        lambda d: build_quantum_sl(3, degree_bound=d))
    add("oq-sl-2-q1", "quantum", "coordinate ring of SL_2 at q = 1 over Q",
        lambda d: build_quantum_sl(2, field=QQ, q=1, degree_bound=d))
    add("uq-sl2", "quantum",
        "quantized enveloping algebra of sl_2 (axiom checks only)",
        lambda d: build_uq_sl2(degree_bound=d))

    for n in (1, 2, 3):
        add(f"u-abelian-{n}", "enveloping", f"U of the abelian Lie algebra Q^{n}",
            lambda d, n=n: build_enveloping(
                {}, names=tuple(f"y{i}" for i in range(n)), degree_bound=d))
    add("u-solvable-2", "enveloping", "U of the Lie algebra [x,y] = x",
        lambda d: build_enveloping({(0, 1): [(0, 1)]}, names=("x", "y"),
                                   degree_bound=d))
    add("u-heisenberg", "enveloping", "U of the Heisenberg Lie algebra [x,y] = z",
        lambda d: build_enveloping({(0, 1): [(2, 1)]}, names=("x", "y", "z"),
                                   degree_bound=d))
    add("u-sl2", "enveloping", "U(sl_2) by structure constants",
        lambda d: build_enveloping(
            {(0, 1): [(2, 1)], (0, 2): [(0, -2)], (1, 2): [(1, 2)]},
            names=("e", "f", "h"), degree_bound=d))

    add("laurent-1", "laurent", "group algebra of Z",
        lambda d: build_laurent(1, degree_bound=max(d, 8)), degree_bound=8)
    add("laurent-2", "laurent", "group algebra of Z^2",
        lambda d: build_laurent(2, degree_bound=max(d, 8)), degree_bound=8)
    add("laurent-3", "laurent", "group algebra of Z^3",
        lambda d: build_laurent(3, degree_bound=max(d, 8)), degree_bound=8,
        truncate=6, window=2)
    add("klein-bottle-group", "group",
        "group algebra of Z x| Z with inverting action",
        lambda d: build_group_algebra(
            PolycyclicData(("x", "t"), [[], [[-1]]]), degree_bound=max(d, 8)),
        degree_bound=8)
    add("heisenberg-group", "group",
        "group algebra of the discrete Heisenberg group",
        lambda d: build_group_algebra(
            PolycyclicData(("z", "x", "y"), [[], [[1]], [[1, 0], [1, 1]]]),
            degree_bound=max(d, 8)),
        degree_bound=8, truncate=6, window=2)
    return {e.name: e for e in entries}


def _dual_named(gname):
    h = build_fd_group_algebra(small_group_tables()[gname], f"group-{gname}")
    d = h.dual()
    d.name = f"dual-group-{gname}"
    return d


_CATALOG = None


def catalog():
    global _CATALOG
    if _CATALOG is None:
        _CATALOG = _catalog()
    return _CATALOG


def entry(name) -> CatalogEntry:
    cat = catalog()
    if name not in cat:
        raise KeyError(f"no catalog entry named {name!r}")
    return cat[name]


def names():
    return sorted(catalog())
