"""Constructors for the finite-dimensional catalog: the 4-dimensional
Sweedler algebra, Taft algebras over cyclotomic fields, and group
algebras (with duals) of every group of order at most 8."""

from __future__ import annotations

from fractions import Fraction

from .fd import FDHopf, vadd_into
from .scalars import QQ, CyclotomicField


# ---------------------------------------------------------------------------
# small group multiplication tables
# ---------------------------------------------------------------------------

def cyclic_table(n):
    return [[(i + j) % n for j in range(n)] for i in range(n)]


def product_table(t1, t2):
    n1, n2 = len(t1), len(t2)

    def idx(a, b):
        return a * n2 + b

    out = [[0] * (n1 * n2) for _ in range(n1 * n2)]
    for a1 in range(n1):
        for b1 in range(n2):
            for a2 in range(n1):
                for b2 in range(n2):
                    out[idx(a1, b1)][idx(a2, b2)] = idx(t1[a1][a2], t2[b1][b2])
    return out


def dihedral_table(n):
    """Dihedral group of order 2n: elements (i, s) with s r^i, srs = r^-1."""
    def idx(i, s):
        return i + n * s

    out = [[0] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for s in (0, 1):
            for j in range(n):
                for t in (0, 1):
                    # (r^i s^s)(r^j s^t) = r^(i + j or i - j) s^(s xor t)
                    k = (i + j) % n if s == 0 else (i - j) % n
                    out[idx(i, s)][idx(j, t)] = idx(k, s ^ t)
    return out


def quaternion_table():
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k."""
    units = ["1", "i", "j", "k"]
    # (sign, unit) products for the quaternion units
    def umul(a, b):
        tbl = {
            ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"),
            ("1", "k"): (1, "k"), ("i", "1"): (1, "i"), ("j", "1"): (1, "j"),
            ("k", "1"): (1, "k"), ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"),
            ("k", "k"): (-1, "1"), ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
            ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"), ("k", "i"): (1, "j"),
            ("i", "k"): (-1, "j"),
        }
        return tbl[(a, b)]

    def idx(sign, u):
        return units.index(u) * 2 + (0 if sign == 1 else 1)

    out = [[0] * 8 for _ in range(8)]
    for s1 in (1, -1):
        for u1 in units:
            for s2 in (1, -1):
                for u2 in units:
                    s, u = umul(u1, u2)
                    out[idx(s1, u1)][idx(s2, u2)] = idx(s1 * s2 * s, u)
    return out


def small_group_tables():
    """Multiplication tables for every group of order <= 8, keyed by name."""
    c2, c3, c4 = cyclic_table(2), cyclic_table(3), cyclic_table(4)
    return {
        "c1": cyclic_table(1),
        "c2": c2,
        "c3": c3,
        "c4": c4,
        "c2xc2": product_table(c2, c2),
        "c5": cyclic_table(5),
        "c6": cyclic_table(6),
        "s3": dihedral_table(3),
        "c7": cyclic_table(7),
        "c8": cyclic_table(8),
        "c4xc2": product_table(c4, c2),
        "c2xc2xc2": product_table(product_table(c2, c2), c2),
        "d4": dihedral_table(4),
        "q8": quaternion_table(),
    }


def build_fd_group_algebra(table, name, field=None):
    """Group algebra of a finite group given by its multiplication table."""
    if field is None:
        field = QQ
    n = len(table)
    one = field.one
    # identity element and inverses from the table
    e = next(i for i in range(n)
             if all(table[i][j] == j and table[j][i] == j for j in range(n)))
    inv = [next(j for j in range(n) if table[i][j] == e) for i in range(n)]
    names = [f"g{i}" for i in range(n)]
    mult = [[{table[i][j]: one} for j in range(n)] for i in range(n)]
    unit = {e: one}
    coproduct = [[(i, i, one)] for i in range(n)]
    counit = [one] * n
    antipode = [{inv[i]: one} for i in range(n)]
    return FDHopf(field, names, mult, unit, coproduct, counit, antipode,
                  generators=None, name=name)


# ---------------------------------------------------------------------------
# Sweedler and Taft algebras
# ---------------------------------------------------------------------------

def _taft_like(level, field, zeta, name):
    """Algebra on g^a x^b (0 <= a, b < level) with x g = zeta g x, x^level = 0."""
    n = level * level
    one = field.one

    def idx(a, b):
        return a * level + b

    zpow = [one]
    for _ in range(level - 1):
        zpow.append(zpow[-1] * zeta)

    def zp(k):
        return zpow[k % level]

    names = []
    for a in range(level):
        for b in range(level):
            gp = "" if a == 0 else ("g" if a == 1 else f"g^{a}")
            xp = "" if b == 0 else ("x" if b == 1 else f"x^{b}")
            if gp and xp:
                names.append(gp + "*" + xp)
            else:
                names.append(gp + xp or "1")

    mult = [[dict() for _ in range(n)] for _ in range(n)]
    for a in range(level):
        for b in range(level):
            for c in range(level):
                for d in range(level):
                    if b + d >= level:
                        continue
                    mult[idx(a, b)][idx(c, d)] = {
                        idx((a + c) % level, b + d): zp(b * c)}
    unit = {0: one}

    # coproduct by expanding Delta(g)^a Delta(x)^b in the tensor square
    def t_mul(s, t):
        out = {}
        for (i1, j1), c in s.items():
            for (i2, j2), d in t.items():
                for p, cp in mult[i1][i2].items():
                    for r, cr in mult[j1][j2].items():
                        vadd_into(out, {(p, r): c * d * cp * cr})
        return out

    dg = {(idx(1, 0), idx(1, 0)): one}
    dx = {(idx(0, 1), 0): one, (idx(1, 0), idx(0, 1)): one}
    coproduct = []
    for a in range(level):
        for b in range(level):
            acc = {(0, 0): one}
            for _ in range(a):
                acc = t_mul(acc, dg)
            for _ in range(b):
                acc = t_mul(acc, dx)
            coproduct.append([(i, j, c) for (i, j), c in acc.items()])

    counit = [one if b == 0 else field.zero
              for a in range(level) for b in range(level)]

    # antipode: S(g) = g^-1, S(x) = -g^-1 x, extended anti-multiplicatively
    sg = {idx(level - 1, 0): one}
    sx = {idx(level - 1, 1): -one}

    def mul_vec(u, v):
        acc = {}
        for i, ci in u.items():
            for j, cj in v.items():
                vadd_into(acc, mult[i][j], ci * cj)
        return acc

    antipode = []
    for a in range(level):
        for b in range(level):
            acc = {0: one}
            for _ in range(b):
                acc = mul_vec(acc, sx)
            for _ in range(a):
                acc = mul_vec(acc, sg)
            antipode.append(acc)

    return FDHopf(field, names, mult, unit, coproduct, counit, antipode,
                  generators=[idx(1, 0), idx(0, 1)], name=name)


def build_sweedler(field=None):
    """The 4-dimensional Sweedler algebra over Q (Taft at level 2)."""
    if field is None:
        field = QQ
    return _taft_like(2, field, -field.one, "sweedler")


def build_taft(level):
    """The Taft algebra of dimension level^2 over Q(zeta_level)."""
    field = CyclotomicField(level)
    return _taft_like(level, field, field.zeta, f"taft-{level}")
