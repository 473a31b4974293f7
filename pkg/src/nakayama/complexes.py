"""Free resolutions of the trivial module: bar (finite-dimensional),
Chevalley-Eilenberg for enveloping algebras, and iterated mapping-cone
towers for poly-Z group algebras.

Complexes of free left modules carry right-multiplication differentials:
a map A^r -> A^s is an r x s matrix of algebra elements acting on row
vectors.  Composition of two right multiplications is the matrix product
in the same order, so d о d = 0 is the exact statement that consecutive
matrices multiply to zero after normal forms.
"""

from __future__ import annotations

from itertools import combinations

from .builders import _bracket_vec
from .hopf import HopfPresentation
from .linalg import Matrix, solve
from .rewrite import NCPoly


class FreeComplex:
    """Finite complex of free left modules over a presented algebra.

    ``ranks[i]`` is the rank in homological degree i; ``diffs[i]`` (for
    i >= 1) is the ranks[i] x ranks[i-1] matrix of the differential,
    entries normal-formed NCPolys.
    """

    def __init__(self, sys, ranks, diffs, labels=None):
        self.sys = sys
        self.ranks = list(ranks)
        self.diffs = [None]
        for d in diffs:
            self.diffs.append([[sys.normal_form(e) for e in row] for row in d])
        self.labels = labels or {}

    @property
    def length(self):
        return len(self.ranks) - 1

    def diff(self, i):
        """Differential out of degree i (None for i = 0 or out of range)."""
        if i < 1 or i > self.length:
            return None
        return self.diffs[i]

    def entry_degree(self):
        d = 0
        for i in range(1, self.length + 1):
            for row in self.diffs[i]:
                for e in row:
                    d = max(d, e.degree())
        return d

    def verify_d_squared(self):
        """Exact check that consecutive differentials compose to zero."""
        sys = self.sys
        for i in range(2, self.length + 1):
            a, b = self.diffs[i], self.diffs[i - 1]
            for r in range(self.ranks[i]):
                for c in range(self.ranks[i - 2]):
                    acc = NCPoly.zero()
                    for m in range(self.ranks[i - 1]):
                        acc = acc + sys.mul(a[r][m], b[m][c])
                    if not sys.normal_form(acc).is_zero():
                        raise ValueError(
                            f"d^2 != 0 at degree {i}, entry ({r},{c})")
        return True

    def export_text(self):
        """Documented textual chain-complex format (ranks + entry polynomials)."""
        from .formats import ncpoly_to_str

        lines = [f"field {self.sys.field.name}",
                 "generators " + " ".join(self.sys.generators),
                 "ranks " + " ".join(str(r) for r in self.ranks)]
        for i in range(1, self.length + 1):
            for r in range(self.ranks[i]):
                for c in range(self.ranks[i - 1]):
                    e = self.diffs[i][r][c]
                    if not e.is_zero():
                        lines.append(
                            f"d {i} {r} {c} = {ncpoly_to_str(e, self.sys)}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Chevalley-Eilenberg
# ---------------------------------------------------------------------------

def ce_resolution(h: HopfPresentation) -> FreeComplex:
    """The Chevalley-Eilenberg resolution U(g) (x) Wedge^* g of k.

    Ranks are binomial(d, i); the differential combines right
    multiplication by the wedged generators with the bracket
    contractions.  d^2 = 0 is verified symbolically.
    """
    field = h.field
    dim = h.lie_dim
    table = h.lie_brackets
    basis = [list(combinations(range(dim), p)) for p in range(dim + 1)]
    index = [{S: i for i, S in enumerate(layer)} for layer in basis]
    diffs = []
    for p in range(1, dim + 1):
        rows = []
        for S in basis[p]:
            row = [NCPoly.zero() for _ in basis[p - 1]]
            for a, s in enumerate(S):
                T = S[:a] + S[a + 1:]
                sign = field.one if a % 2 == 0 else -field.one
                row[index[p - 1][T]] = row[index[p - 1][T]] + \
                    NCPoly.term((s,), sign)
            for a in range(len(S)):
                for b in range(a + 1, len(S)):
                    s, t = S[a], S[b]
                    rest = tuple(x for i, x in enumerate(S) if i not in (a, b))
                    br = _bracket_vec(table, field, s, t)
                    for k, c in br.items():
                        if k in rest:
                            continue
                        T = tuple(sorted(rest + (k,)))
                        pos = T.index(k)
                        sgn = field.one if (a + b + pos) % 2 == 0 \
                            else -field.one
                        row[index[p - 1][T]] = row[index[p - 1][T]] + \
                            NCPoly.const(sgn * c)
            rows.append(row)
        diffs.append(rows)
    cx = FreeComplex(h.sys, [len(layer) for layer in basis], diffs,
                     labels={"kind": "chevalley-eilenberg"})
    cx.verify_d_squared()
    return cx


# ---------------------------------------------------------------------------
# mapping-cone towers for poly-Z group algebras
# ---------------------------------------------------------------------------

def _solve_chain_lift(sys, D, phi_prev, rank, max_degree=4):
    """A rank x rank right-multiplier matrix Phi with Phi D = D phi_prev.

    Unknown entries are sought as combinations of normal words of
    bounded degree; the bound grows until the exact linear system has a
    solution.  Any solution is a valid chain lift.
    """
    field = sys.field
    prev_rank = len(D[0]) if D else 0
    rhs = [[NCPoly.zero() for _ in range(prev_rank)] for _ in range(rank)]
    for a in range(rank):
        for c in range(prev_rank):
            acc = NCPoly.zero()
            for m in range(prev_rank):
                acc = acc + sys.mul(D[a][m], phi_prev[m][c])
            rhs[a][c] = sys.normal_form(acc)
    for bound in range(1, max_degree + 1):
        words = sys.normal_words(bound)
        nw = len(words)
        unknowns = [(a, b, w) for a in range(rank) for b in range(rank)
                    for w in words]
        uidx = {u: i for i, u in enumerate(unknowns)}
        # precompute w * D[b][c]
        prod = {}
        support = {}
        for b in range(rank):
            for c in range(prev_rank):
                for w in words:
                    p = sys.mul(NCPoly.term(w, field.one), D[b][c])
                    prod[(b, c, w)] = p
        rows = []
        rhsv = []
        eq_index = {}
        for a in range(rank):
            for c in range(prev_rank):
                coords = {}
                for b in range(rank):
                    for w in words:
                        j = uidx[(a, b, w)]
                        for mono, coeff in prod[(b, c, w)].terms.items():
                            slot = coords.setdefault(mono, {})
                            slot[j] = slot.get(j, field.zero) + coeff
                monos = set(coords) | set(rhs[a][c].terms)
                for mono in sorted(monos, key=lambda m: (len(m), m)):
                    row = [field.zero] * len(unknowns)
                    for j, coeff in coords.get(mono, {}).items():
                        row[j] = coeff
                    rows.append(row)
                    rhsv.append(rhs[a][c].terms.get(mono, field.zero))
        sol = solve(Matrix.from_rows(rows, field), rhsv) if rows else []
        if sol is None:
            continue
        phi = [[NCPoly.zero() for _ in range(rank)] for _ in range(rank)]
        for (a, b, w), j in uidx.items():
            c = sol[j]
            if c:
                phi[a][b] = phi[a][b] + NCPoly.term(w, c)
        return [[sys.normal_form(e) for e in row] for row in phi]
    raise ValueError("no bounded-degree chain lift found")


def tower_resolution(h: HopfPresentation) -> FreeComplex:
    """Free resolution of k over a poly-Z group algebra by iterated cones.

    Each tower stage glues two copies of the previous resolution along a
    chain lift of right multiplication by (t - 1); ranks are binomial
    coefficients in the Hirsch length.  d^2 = 0 is verified exactly.
    """
    sys = h.sys
    field = sys.field
    data = h.polycyclic
    d = data.hirsch_length
    one = field.one
    ranks = [1]
    diffs = []  # diffs[i-1]: matrix for degree i
    for j in range(d):
        t = NCPoly.term((2 * j,), one)
        tm1 = t - NCPoly.const(one)
        trivial = all(
            data.actions[j][i][m] == (1 if i == m else 0)
            for i in range(j) for m in range(j))
        phis = [[[tm1]]]
        for i in range(1, len(ranks)):
            if trivial:
                phi = [[tm1 if a == b else NCPoly.zero()
                        for b in range(ranks[i])] for a in range(ranks[i])]
            else:
                phi = _solve_chain_lift(sys, diffs[i - 1], phis[i - 1],
                                        ranks[i])
            phis.append(phi)
        new_ranks = [1]
        new_diffs = []
        for i in range(1, len(ranks) + 1):
            rsrc_lo = ranks[i - 1]
            rsrc_hi = ranks[i] if i < len(ranks) else 0
            rtgt_lo = ranks[i - 2] if i >= 2 else 0
            rtgt_hi = ranks[i - 1]
            rows = []
            for a in range(rsrc_lo):
                row = []
                for c in range(rtgt_lo):
                    row.append(NCPoly.zero() - diffs[i - 2][a][c])
                for c in range(rtgt_hi):
                    row.append(phis[i - 1][a][c])
                rows.append(row)
            for a in range(rsrc_hi):
                row = [NCPoly.zero()] * rtgt_lo
                for c in range(rtgt_hi):
                    row.append(diffs[i - 1][a][c])
                rows.append(row)
            new_diffs.append(rows)
            new_ranks.append(rsrc_lo + rsrc_hi)
        ranks = new_ranks
        diffs = new_diffs
    cx = FreeComplex(sys, ranks, diffs, labels={"kind": "tower"})
    cx.verify_d_squared()
    return cx


# ---------------------------------------------------------------------------
# bar resolution for finite-dimensional algebras
# ---------------------------------------------------------------------------

class BarResolution:
    """The (unnormalized) bar resolution of a finite-dimensional algebra
    over its enveloping algebra, truncated at a finite length.

    Degree k holds A^{(x)(k+2)}; as a free module over A (x) A^op its
    rank is dim(A)^k.  Elements are sparse dicts over index tuples.
    """

    def __init__(self, h, length):
        self.h = h
        self.length = length
        self.ranks = [h.dimension ** k for k in range(length + 1)]
        self.dims = [h.dimension ** (k + 2) for k in range(length + 1)]

    def boundary(self, k, v):
        """The bar differential B_k -> B_{k-1} on a sparse element."""
        h = self.h
        out = {}
        for idx, c in v.items():
            for pos in range(k + 1):
                sign = c if pos % 2 == 0 else -c
                prod = h.mult[idx[pos]][idx[pos + 1]]
                for m, cm in prod.items():
                    key = idx[:pos] + (m,) + idx[pos + 2:]
                    cur = out.get(key)
                    x = sign * cm
                    if not x:
                        continue
                    if cur is None:
                        out[key] = x
                    else:
                        cur = cur + x
                        if cur:
                            out[key] = cur
                        else:
                            del out[key]
        return out

    def homotopy(self, k, v):
        """s(a_0 (x) ...) = 1 (x) a_0 (x) ...; shows the complex is contractible."""
        h = self.h
        out = {}
        for idx, c in v.items():
            for u, cu in h.unit.items():
                key = (u,) + idx
                x = c * cu
                cur = out.get(key)
                if cur is None:
                    out[key] = x
                else:
                    out[key] = cur + x
        return out

    def check_contractible(self, samples, rng):
        """d s + s d = id on random sparse elements of each degree."""
        h = self.h
        f = h.field
        for k in range(1, self.length):
            for _ in range(samples):
                idx = tuple(rng.randrange(h.dimension) for _ in range(k + 2))
                v = {idx: f.one}
                lhs = {}
                for key, c in self.boundary(k + 1, self.homotopy(k, v)).items():
                    lhs[key] = lhs.get(key, f.zero) + c
                for key, c in self.homotopy(k - 1, self.boundary(k, v)).items():
                    lhs[key] = lhs.get(key, f.zero) + c
                lhs = {key: c for key, c in lhs.items() if c}
                if lhs != v:
                    return False
        return True
