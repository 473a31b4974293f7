"""Finite-dimensional Hopf algebras via exact structure tensors.

Everything here is sparse-dict linear algebra over an exact field:
multiplication is a map (i, j) -> sparse vector, the coproduct a list of
(j, k, coeff) triples per basis element, the antipode a sparse matrix.
The module computes integrals, the modular character, the Frobenius /
Nakayama structure, the distinguished group-like of the dual, and the
order-type invariants, all exactly.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .linalg import Matrix, kernel, rref, solve
from .scalars import QQ, CyclotomicField


class NotUnimodularDimension(ValueError):
    """An integral space fails to be one-dimensional."""


class NotCharacter(ValueError):
    """A right action on an integral line is not by a character."""


class DegenerateForm(ValueError):
    """The bilinear form of a would-be Frobenius functional is degenerate."""


# -- sparse vector helpers ---------------------------------------------------

def vadd_into(acc, v, c=None):
    for k, x in v.items():
        if c is not None:
            x = c * x
        if not x:
            continue
        cur = acc.get(k)
        if cur is None:
            acc[k] = x
        else:
            cur = cur + x
            if cur:
                acc[k] = cur
            else:
                del acc[k]
    return acc


def vscale(v, c):
    return {k: c * x for k, x in v.items()} if c else {}


def vsub(a, b):
    out = dict(a)
    vadd_into(out, {k: -x for k, x in b.items()})
    return out


def to_dense(v, n, zero):
    out = [zero] * n
    for k, c in v.items():
        out[k] = c
    return out


def to_sparse(vals):
    return {i: c for i, c in enumerate(vals) if c}


class FDHopf:
    """A finite-dimensional Hopf algebra given by structure tensors.

    ``mult[i][j]`` is the sparse product e_i e_j, ``coproduct[i]`` lists
    (j, k, c) triples of Delta(e_i), ``antipode[i]`` is the sparse image
    S(e_i).  ``generators`` marks an algebra generating set used to slice
    the more expensive checks; None means all basis elements.
    """

    def __init__(self, field, names, mult, unit, coproduct, counit, antipode,
                 generators=None, name=""):
        self.field = field
        self.names = tuple(names)
        self.dimension = len(self.names)
        self.mult = mult
        self.unit = unit
        self.coproduct = coproduct
        self.counit = list(counit)
        self.antipode = antipode
        self.generators = list(generators) if generators is not None else None
        self.name = name or "fd-hopf"

    # -- basic operations ----------------------------------------------------

    def gen_indices(self):
        return self.generators if self.generators is not None \
            else list(range(self.dimension))

    def mul_vec(self, u, v):
        acc = {}
        for i, ci in u.items():
            mi = self.mult[i]
            for j, cj in v.items():
                vadd_into(acc, mi[j], ci * cj)
        return acc

    def delta_vec(self, v):
        acc = {}
        for i, ci in v.items():
            for (j, k, c) in self.coproduct[i]:
                key = (j, k)
                cur = acc.get(key)
                x = ci * c
                if cur is None:
                    acc[key] = x
                else:
                    cur = cur + x
                    if cur:
                        acc[key] = cur
                    else:
                        del acc[key]
        return acc

    def eps_vec(self, v):
        acc = self.field.zero
        for i, c in v.items():
            acc = acc + c * self.counit[i]
        return acc

    def apply_matrix(self, images, v):
        acc = {}
        for i, c in v.items():
            vadd_into(acc, images[i], c)
        return acc

    def antipode_vec(self, v):
        return self.apply_matrix(self.antipode, v)

    def is_group_like(self, v):
        if self.eps_vec(v) != self.field.one:
            return False
        want = {}
        for i, ci in v.items():
            for j, cj in v.items():
                vadd_into(want, {(i, j): ci * cj})
        return not vsub(self.delta_vec(v), want)

    # -- validation ----------------------------------------------------------

    def validate(self):
        """Exact check of all algebra / coalgebra / Hopf axioms on basis tuples."""
        f = self.field
        n = self.dimension
        one_vec = self.unit
        for i in range(n):
            ei = {i: f.one}
            if vsub(self.mul_vec(one_vec, ei), ei) or \
               vsub(self.mul_vec(ei, one_vec), ei):
                raise ValueError(f"{self.name}: unit law fails at {self.names[i]}")
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    lhs = self.mul_vec(self.mult[i][j], {k: f.one})
                    rhs = self.mul_vec({i: f.one}, self.mult[j][k])
                    if vsub(lhs, rhs):
                        raise ValueError(
                            f"{self.name}: associativity fails at "
                            f"({self.names[i]},{self.names[j]},{self.names[k]})")
        # coassociativity and counit laws
        for i in range(n):
            left, right = {}, {}
            for (j, k, c) in self.coproduct[i]:
                for (a, b, d) in self.coproduct[j]:
                    vadd_into(left, {(a, b, k): c * d})
                for (a, b, d) in self.coproduct[k]:
                    vadd_into(right, {(j, a, b): c * d})
            if vsub(left, right):
                raise ValueError(f"{self.name}: coassociativity fails at {self.names[i]}")
            lhs, rhs = {}, {}
            for (j, k, c) in self.coproduct[i]:
                vadd_into(lhs, {k: c * self.counit[j]})
                vadd_into(rhs, {j: c * self.counit[k]})
            if vsub(lhs, {i: f.one}) or vsub(rhs, {i: f.one}):
                raise ValueError(f"{self.name}: counit law fails at {self.names[i]}")
        # Delta and eps are algebra maps
        for i in range(n):
            for j in range(n):
                prod = self.mult[i][j]
                want = self.delta_vec(prod)
                have = {}
                for (a, b, c) in self.coproduct[i]:
                    for (x, y, d) in self.coproduct[j]:
                        left = self.mult[a][x]
                        right = self.mult[b][y]
                        cd = c * d
                        for p, cp in left.items():
                            for r, cr in right.items():
                                vadd_into(have, {(p, r): cd * cp * cr})
                if vsub(want, have):
                    raise ValueError(
                        f"{self.name}: coproduct not multiplicative at "
                        f"({self.names[i]},{self.names[j]})")
                se = self.field.zero
                for k, c in prod.items():
                    se = se + c * self.counit[k]
                if se != self.counit[i] * self.counit[j]:
                    raise ValueError(
                        f"{self.name}: counit not multiplicative at "
                        f"({self.names[i]},{self.names[j]})")
        # antipode axiom
        for i in range(n):
            acc_l, acc_r = {}, {}
            for (j, k, c) in self.coproduct[i]:
                vadd_into(acc_l, self.mul_vec(self.antipode[j], {k: f.one}), c)
                vadd_into(acc_r, self.mul_vec({j: f.one}, self.antipode[k]), c)
            target = vscale(self.unit, self.counit[i])
            if vsub(acc_l, target) or vsub(acc_r, target):
                raise ValueError(f"{self.name}: antipode axiom fails at {self.names[i]}")
        return True

    # -- duality ---------------------------------------------------------------

    def dual(self):
        """The dual Hopf algebra on the dual basis (tensors transposed)."""
        f = self.field
        n = self.dimension
        mult = [[{} for _ in range(n)] for _ in range(n)]
        for x in range(n):
            for (j, k, c) in self.coproduct[x]:
                cur = mult[j][k].get(x)
                mult[j][k][x] = c if cur is None else cur + c
        for row in mult:
            for cell in row:
                for x in [k for k, v in cell.items() if not v]:
                    del cell[x]
        unit = to_sparse(self.counit)
        coproduct = []
        for a in range(n):
            triples = []
            for i in range(n):
                for j in range(n):
                    c = self.mult[i][j].get(a)
                    if c:
                        triples.append((i, j, c))
            coproduct.append(triples)
        counit = to_dense(self.unit, n, f.zero)
        antipode = [dict() for _ in range(n)]
        for b in range(n):
            for a, c in self.antipode[b].items():
                antipode[a][b] = c
        return FDHopf(f, [nm + "*" for nm in self.names], mult, unit,
                      coproduct, counit, antipode, None, f"dual({self.name})")

    def __repr__(self):
        return f"FDHopf({self.name}, dim={self.dimension})"


class LinearAuto:
    """An invertible linear endomorphism, stored as sparse basis images."""

    __slots__ = ("h", "images")

    def __init__(self, h: FDHopf, images):
        self.h = h
        self.images = [dict(im) for im in images]

    @classmethod
    def identity(cls, h):
        return cls(h, [{i: h.field.one} for i in range(h.dimension)])

    def apply(self, v):
        return self.h.apply_matrix(self.images, v)

    def compose(self, other):
        return LinearAuto(self.h, [self.apply(im) for im in other.images])

    def power(self, k):
        out = LinearAuto.identity(self.h)
        for _ in range(k):
            out = self.compose(out)
        return out

    def inverse(self):
        n = self.h.dimension
        f = self.h.field
        m = Matrix.from_rows(
            [to_dense(self.images[j], n, f.zero) for j in range(n)], f
        ).transpose()
        cols = []
        for i in range(n):
            e = [f.zero] * n
            e[i] = f.one
            x = solve(m, e)
            if x is None:
                raise ValueError("linear map is not invertible")
            cols.append(to_sparse(x))
        return LinearAuto(self.h, cols)

    def is_algebra_map(self):
        h = self.h
        f = h.field
        n = h.dimension
        if vsub(self.apply(h.unit), h.unit):
            return False
        for i in range(n):
            for j in range(n):
                lhs = self.apply(h.mult[i][j])
                rhs = h.mul_vec(self.images[i], self.images[j])
                if vsub(lhs, rhs):
                    return False
        return True

    def __eq__(self, other):
        return isinstance(other, LinearAuto) and all(
            not vsub(a, b) for a, b in zip(self.images, other.images))

    def __repr__(self):
        return f"LinearAuto({self.h.name})"


# ---------------------------------------------------------------------------
# integrals and the modular character
# ---------------------------------------------------------------------------

def _integral_space(h: FDHopf, side):
    f = h.field
    n = h.dimension
    rows = []
    for i in range(n):
        ei = {i: f.one}
        for k in range(n):
            row = [f.zero] * n
            for t in range(n):
                prod = h.mult[i][t] if side == "left" else h.mult[t][i]
                c = prod.get(k)
                if c:
                    row[t] = row[t] + c
            row[k] = row[k] - h.counit[i]
            if any(row):
                rows.append(row)
    if not rows:
        return [[f.one if j == i else f.zero for j in range(n)] for i in range(n)]
    return kernel(Matrix.from_rows(rows, f))


def left_integral_space(h: FDHopf):
    """Basis of {t : a t = eps(a) t}; must be one-dimensional."""
    basis = _integral_space(h, "left")
    if len(basis) != 1:
        raise NotUnimodularDimension(
            f"{h.name}: left integral space has dimension {len(basis)}")
    return basis


def right_integral_space(h: FDHopf):
    basis = _integral_space(h, "right")
    if len(basis) != 1:
        raise NotUnimodularDimension(
            f"{h.name}: right integral space has dimension {len(basis)}")
    return basis


def modular_character(h: FDHopf):
    """The character pi0 with t a = pi0(a) t on the left integral line."""
    f = h.field
    t = to_sparse(left_integral_space(h)[0])
    idx, lead = next(iter(sorted(t.items())))
    values = []
    for a in range(h.dimension):
        ta = h.mul_vec(t, {a: f.one})
        c = ta.get(idx, f.zero) / lead
        if vsub(ta, vscale(t, c)):
            raise NotCharacter(
                f"{h.name}: right action of {h.names[a]} on the integral "
                "line is not scalar")
        values.append(c)
    if not char_is_multiplicative(h, values):
        raise NotCharacter(f"{h.name}: integral action is not multiplicative")
    return values


def char_value(h, chi, v):
    acc = h.field.zero
    for i, c in v.items():
        acc = acc + c * chi[i]
    return acc


def char_is_multiplicative(h, chi):
    if char_value(h, chi, h.unit) != h.field.one:
        return False
    for i in range(h.dimension):
        for j in range(h.dimension):
            if char_value(h, chi, h.mult[i][j]) != chi[i] * chi[j]:
                return False
    return True


def convolve_chars(h, chi1, chi2):
    out = []
    for i in range(h.dimension):
        acc = h.field.zero
        for (j, k, c) in h.coproduct[i]:
            acc = acc + c * chi1[j] * chi2[k]
        out.append(acc)
    return out


def char_antipode(h, chi):
    return [char_value(h, chi, h.antipode[i]) for i in range(h.dimension)]


def winding_left_auto(h, chi):
    """Xi^l[chi]: a -> sum chi(a_1) a_2, as a linear automorphism."""
    images = []
    for i in range(h.dimension):
        acc = {}
        for (j, k, c) in h.coproduct[i]:
            vadd_into(acc, {k: c * chi[j]})
        images.append(acc)
    return LinearAuto(h, images)


def winding_right_auto(h, chi):
    images = []
    for i in range(h.dimension):
        acc = {}
        for (j, k, c) in h.coproduct[i]:
            vadd_into(acc, {j: c * chi[k]})
        images.append(acc)
    return LinearAuto(h, images)


def s_squared_auto(h):
    return LinearAuto(h, [h.antipode_vec(h.antipode[i])
                          for i in range(h.dimension)])


# ---------------------------------------------------------------------------
# Frobenius structure and the Nakayama automorphism
# ---------------------------------------------------------------------------

def frobenius_functional(h: FDHopf):
    """A nonzero left integral of the dual, as a covector on h."""
    lam = left_integral_space(h.dual())[0]
    return lam


def nakayama(h: FDHopf):
    """The Nakayama automorphism: lambda(a b) = lambda(b nu(a)).

    lambda is a left integral of the dual; the associated bilinear form
    (a, b) -> lambda(a b) must be nondegenerate (DegenerateForm otherwise).
    The result is verified to be an algebra automorphism.
    """
    f = h.field
    n = h.dimension
    lam = frobenius_functional(h)

    def lam_of(v):
        acc = f.zero
        for k, c in v.items():
            acc = acc + c * lam[k]
        return acc

    b = Matrix.from_rows(
        [[lam_of(h.mult[i][j]) for j in range(n)] for i in range(n)], f)
    _, rk, _ = rref(b)
    if rk != n:
        raise DegenerateForm(f"{h.name}: integral form is degenerate")
    images = []
    for a in range(n):
        rhs = [b[a, j] for j in range(n)]
        # solve lambda(e_j nu(e_a)) = lambda(e_a e_j) for nu(e_a)
        x = solve(b, rhs)
        images.append(to_sparse(x))
    nu = LinearAuto(h, images)
    if not nu.is_algebra_map():
        raise DegenerateForm(f"{h.name}: Nakayama map is not an algebra map")
    return nu


def equal_up_to_inner(h: FDHopf, f_auto: LinearAuto, g_auto: LinearAuto,
                      seed=0, budget=200):
    """A unit u with f(a) u = u g(a) for all a, or None.

    The u-equation is linear; the solution space is searched for a unit
    first along its basis, then over seeded random small-height
    combinations within the budget.  A definite no comes from the counit
    obstruction (inner automorphisms preserve eps).
    """
    f = h.field
    n = h.dimension
    eps_f = [h.eps_vec(f_auto.images[i]) for i in range(n)]
    eps_g = [h.eps_vec(g_auto.images[i]) for i in range(n)]
    if eps_f != eps_g:
        return None
    rows = []
    for a in h.gen_indices():
        fa = f_auto.images[a]
        ga = g_auto.images[a]
        for k in range(n):
            row = [f.zero] * n
            for t in range(n):
                # coefficient of u_t in (f(a) u - u g(a))_k
                for i, ci in fa.items():
                    c = h.mult[i][t].get(k)
                    if c:
                        row[t] = row[t] + ci * c
                for j, cj in ga.items():
                    c = h.mult[t][j].get(k)
                    if c:
                        row[t] = row[t] - cj * c
            if any(row):
                rows.append(row)
    space = kernel(Matrix.from_rows(rows, f)) if rows else \
        [[f.one if j == i else f.zero for j in range(n)] for i in range(n)]
    if not space:
        return None

    def is_unit(vec):
        u = to_sparse(vec)
        if not u:
            return None
        m = Matrix.from_rows(
            [to_dense(h.mul_vec(u, {j: f.one}), n, f.zero) for j in range(n)],
            f).transpose()
        x = solve(m, to_dense(h.unit, n, f.zero))
        if x is None:
            return None
        return u

    for vec in space:
        u = is_unit(vec)
        if u is not None:
            return u
    rng = random.Random(seed)
    for _ in range(budget):
        coeffs = [f.coerce(Fraction(rng.randint(-3, 3))) for _ in space]
        vec = [f.zero] * n
        for c, bvec in zip(coeffs, space):
            if c:
                for i, x in enumerate(bvec):
                    vec[i] = vec[i] + c * x
        u = is_unit(vec)
        if u is not None:
            return u
    return None


# ---------------------------------------------------------------------------
# the fourth power of the antipode
# ---------------------------------------------------------------------------

def distinguished_group_like(h: FDHopf):
    """The distinguished group-like of h: the character by which the dual
    algebra acts from the left on its one-dimensional space of right
    integrals.  (The mirror convention, via left integrals, produces the
    inverse group-like.)"""
    d = h.dual()
    f = h.field
    lam = to_sparse(right_integral_space(d)[0])
    idx, lead = next(iter(sorted(lam.items())))
    vals = []
    for a in range(h.dimension):
        fa = d.mul_vec({a: f.one}, lam)
        c = fa.get(idx, f.zero) / lead
        if vsub(fa, vscale(lam, c)):
            raise NotCharacter(
                f"{h.name}: left action on the dual's right integral line "
                "is not scalar")
        vals.append(c)
    g = to_sparse(vals)
    if not h.is_group_like(g):
        raise NotCharacter(f"{h.name}: dual integral character is not group-like")
    return g


def radford_s4_check(h: FDHopf):
    """Verify S^4 = Ad_g o Phi o Xi^{-1} as an exact matrix identity.

    Xi and Phi are the left and right winding automorphisms of the
    modular character, g the distinguished group-like of the dual.
    """
    f = h.field
    n = h.dimension
    pi0 = modular_character(h)
    xi = winding_left_auto(h, pi0)
    phi = winding_right_auto(h, pi0)
    xi_inv = winding_left_auto(h, char_antipode(h, pi0))
    g = distinguished_group_like(h)
    g_inv = h.antipode_vec(g)
    ad_g = LinearAuto(h, [h.mul_vec(h.mul_vec(g, {i: f.one}), g_inv)
                          for i in range(n)])
    s2 = s_squared_auto(h)
    s4 = s2.compose(s2)
    rhs = ad_g.compose(phi.compose(xi_inv))
    failures = []
    for i in range(n):
        if vsub(s4.images[i], rhs.images[i]):
            failures.append(h.names[i])
    return {
        "ok": not failures,
        "failures": failures,
        "pi0": pi0,
        "group_like": g,
        "s4_images": s4.images,
        "rhs_images": rhs.images,
    }


def integral_order(h: FDHopf, bound=64):
    """Smallest n <= bound with pi0^{*n} = eps (the order of Xi), else None."""
    eps = list(h.counit)
    pi0 = modular_character(h)
    acc = pi0
    for n in range(1, bound + 1):
        if acc == eps:
            return n
        acc = convolve_chars(h, acc, pi0)
    return None


def nakayama_order(h: FDHopf, bound=16, seed=0):
    """Smallest n <= bound with nu^n inner, else None."""
    nu = nakayama(h)
    ident = LinearAuto.identity(h)
    acc = nu
    for n in range(1, bound + 1):
        if equal_up_to_inner(h, acc, ident, seed=seed) is not None:
            return n
        acc = nu.compose(acc)
    return None


# ---------------------------------------------------------------------------
# group-likes and the center
# ---------------------------------------------------------------------------

def _eigen_candidates(field):
    cands = [field.zero, field.one, -field.one]
    for r in (2, 3):
        fr = field.coerce(Fraction(r))
        cands += [fr, -fr, field.one / fr, -(field.one / fr)]
    if isinstance(field, CyclotomicField):
        z = field.zeta
        p = z
        for _ in range(field.level - 1):
            cands += [p, -p]
            p = p * z
    out = []
    for c in cands:
        if c not in out:
            out.append(c)
    return out


def group_likes(h: FDHopf):
    """All group-like elements with coordinates in the base field.

    Group-likes are joint eigenvectors of the operators (e_i^* (x) id)Delta
    with eigenvalue tuple equal to their own coordinates; the search
    branches over a bounded candidate set of eigenvalues and each
    candidate is verified exactly, so every returned element is genuinely
    group-like.
    """
    f = h.field
    n = h.dimension
    ops = []
    for i in range(n):
        col_images = [dict() for _ in range(n)]
        for m in range(n):
            for (j, k, c) in h.coproduct[m]:
                if j == i:
                    vadd_into(col_images[m], {k: c})
        ops.append(col_images)
    cands = _eigen_candidates(f)
    spaces = [([], [[f.one if j == i else f.zero for j in range(n)]
                    for i in range(n)])]
    for i in range(n):
        nxt = []
        for lams, basis in spaces:
            m = len(basis)
            ti_b = []
            for bvec in basis:
                acc = {}
                for idx, c in to_sparse(bvec).items():
                    vadd_into(acc, ops[i][idx], c)
                ti_b.append(to_dense(acc, n, f.zero))
            for lam in cands:
                rows = []
                for k in range(n):
                    rows.append([ti_b[t][k] - lam * basis[t][k] for t in range(m)])
                ker = kernel(Matrix.from_rows(rows, f))
                if not ker:
                    continue
                nb = []
                for w in ker:
                    vec = [f.zero] * n
                    for t, c in enumerate(w):
                        if c:
                            for idx in range(n):
                                vec[idx] = vec[idx] + c * basis[t][idx]
                    nb.append(vec)
                nxt.append((lams + [lam], nb))
        spaces = nxt
        if not spaces:
            return []
    out = []
    seen = set()
    for lams, _ in spaces:
        g = to_sparse(lams)
        key = tuple(sorted(g.items(), key=lambda t: t[0]))
        if key in seen:
            continue
        if h.is_group_like(g):
            seen.add(key)
            out.append(g)
    return out


def center(h: FDHopf):
    """Basis of the center, via the commutator kernels."""
    f = h.field
    n = h.dimension
    rows = []
    for a in range(n):
        for k in range(n):
            row = [f.zero] * n
            for t in range(n):
                c1 = h.mult[a][t].get(k)
                if c1:
                    row[t] = row[t] + c1
                c2 = h.mult[t][a].get(k)
                if c2:
                    row[t] = row[t] - c2
            if any(row):
                rows.append(row)
    if not rows:
        return [[f.one if j == i else f.zero for j in range(n)] for i in range(n)]
    return kernel(Matrix.from_rows(rows, f))


# ---------------------------------------------------------------------------
# the twisted-bimodule tensor identity
# ---------------------------------------------------------------------------

def adjoint_tensor_check(h: FDHopf, chi):
    """Verify k_chi (x)_A L(A^e) ~= A twisted by Xi[chi] S^2, explicitly.

    L(A^e) is A (x) A with the diagonal action x.(a (x) n) = sum x_1 a (x)
    n S(x_2); theta(a (x) n) = sum chi(a_1) n S^2(a_2) realizes the
    quotient map onto the twisted bimodule, and the comparison map
    Phi(a (x) n) = sum a_1 (x) n S(a_2) with its explicit inverse pins the
    kernel dimension.  All identities are checked exactly on basis
    elements, with algebra inputs sliced to a generating set.
    """
    f = h.field
    n = h.dimension
    s2 = s_squared_auto(h)
    psi = winding_left_auto(h, chi).compose(s2)
    gens = h.gen_indices()
    checks = []

    def theta(a, nvec):
        acc = {}
        for (a1, a2, c) in h.coproduct[a]:
            w = h.mul_vec(nvec, s2.images[a2])
            vadd_into(acc, w, c * chi[a1])
        return acc

    def theta_pair(a, m):
        return theta(a, {m: f.one})

    def act(x, a, m):
        # x . (e_a (x) e_m) for the Delta-twisted action on A (x) A
        out = {}
        for (x1, x2, c) in h.coproduct[x]:
            left = h.mul_vec({x1: f.one}, {a: f.one})
            right = h.mul_vec({m: f.one}, h.antipode[x2])
            for p, cp in left.items():
                for r, cr in right.items():
                    vadd_into(out, {(p, r): c * cp * cr})
        return out

    def theta_of_tensor(t):
        acc = {}
        for (a, m), c in t.items():
            vadd_into(acc, theta_pair(a, m), c)
        return acc

    ok = True
    loc = None
    # (1) theta intertwines the diagonal action with chi
    for x in gens:
        for a in range(n):
            for m in range(n):
                lhs = theta_of_tensor(act(x, a, m))
                rhs = vscale(theta_pair(a, m), chi[x])
                if vsub(lhs, rhs):
                    ok, loc = False, ("theta-equivariance", h.names[x],
                                      h.names[a], h.names[m])
                    break
            if not ok:
                break
        if not ok:
            break
    checks.append({"check": "theta-equivariance", "ok": ok, "location": loc})

    # (2) theta is left A-linear for the residual left action a (x) n -> a (x) bn
    ok2, loc2 = True, None
    for b in gens:
        for a in range(n):
            for m in range(n):
                bn = h.mul_vec({b: f.one}, {m: f.one})
                lhs = {}
                for r, cr in bn.items():
                    vadd_into(lhs, theta_pair(a, r), cr)
                rhs = h.mul_vec({b: f.one}, theta_pair(a, m))
                if vsub(lhs, rhs):
                    ok2, loc2 = False, ("left-linearity", h.names[b])
                    break
            if not ok2:
                break
        if not ok2:
            break
    checks.append({"check": "left-linearity", "ok": ok2, "location": loc2})

    # (3) the residual right action a (x) n -> ab (x) n becomes the twist
    ok3, loc3 = True, None
    for b in gens:
        for a in range(n):
            for m in range(n):
                ab = h.mul_vec({a: f.one}, {b: f.one})
                lhs = {}
                for r, cr in ab.items():
                    vadd_into(lhs, theta_pair(r, m), cr)
                rhs = h.mul_vec(theta_pair(a, m), psi.images[b])
                if vsub(lhs, rhs):
                    ok3, loc3 = False, ("right-twist", h.names[b])
                    break
            if not ok3:
                break
        if not ok3:
            break
    checks.append({"check": "right-twist", "ok": ok3, "location": loc3})

    # (4) the comparison map and its inverse identify the kernel dimension
    def phi_pair(a, m, square):
        out = {}
        for (a1, a2, c) in h.coproduct[a]:
            img = s2.images[a2] if square else h.antipode[a2]
            w = h.mul_vec({m: f.one}, img)
            for r, cr in w.items():
                vadd_into(out, {(a1, r): c * cr})
        return out

    ok4, loc4 = True, None
    for a in range(n):
        for m in range(n):
            fwd = phi_pair(a, m, True)
            back = {}
            for (p, r), c in fwd.items():
                vadd_into(back, phi_pair(p, r, False), c)
            if vsub(back, {(a, m): f.one}):
                ok4, loc4 = False, ("comparison-inverse", h.names[a], h.names[m])
                break
        if not ok4:
            break
    checks.append({"check": "comparison-inverse", "ok": ok4, "location": loc4})

    # (5) the comparison map carries the diagonal action to left multiplication
    ok5, loc5 = True, None
    for x in gens:
        for a in range(n):
            for m in range(n):
                lhs = {}
                for (p, r), c in act(x, a, m).items():
                    vadd_into(lhs, phi_pair(p, r, True), c)
                rhs = {}
                for (p, r), c in phi_pair(a, m, True).items():
                    xe = h.mul_vec({x: f.one}, {p: f.one})
                    for t, ct in xe.items():
                        vadd_into(rhs, {(t, r): c * ct})
                if vsub(lhs, rhs):
                    ok5, loc5 = False, ("comparison-equivariance", h.names[x])
                    break
            if not ok5:
                break
        if not ok5:
            break
    checks.append({"check": "comparison-equivariance", "ok": ok5, "location": loc5})

    # theta is onto (theta(1 (x) n) = n); with the kernel pinned by (4)/(5)
    # the induced map on the quotient is a bijection
    all_ok = all(c["ok"] for c in checks)
    return {"ok": all_ok, "checks": checks,
            "quotient_dimension": n, "twist": "winding(chi) o S^2"}
