"""Builders for the catalog families: quantum matrices and quantum SL_n,
enveloping algebras, poly-Z group algebras, Laurent tori, and U_q(sl_2).

Each builder returns a :class:`~nakayama.hopf.HopfPresentation` whose
rewrite system has been completed to the requested degree bound.
Generator listing order is the monomial-order precedence.
"""

from __future__ import annotations

from itertools import permutations

from .hopf import HopfPresentation
from .rewrite import NCPoly, RewriteSystem, complete, orient
from .scalars import QQ, QQ_q


class JacobiViolation(ValueError):
    """The supplied structure constants do not satisfy the Jacobi identity."""


class NonInvertibleAction(ValueError):
    """A polycyclic conjugation action is not an invertible integer action."""


# ---------------------------------------------------------------------------
# quantum matrices and quantum SL_n
# ---------------------------------------------------------------------------

def _inversions(perm):
    n = len(perm)
    return sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])


def quantum_minor(n, rows, cols, q, field, gi):
    """Quantum minor det_q of the submatrix with the given rows/columns.

    Rows and columns are 1-based ascending lists; the result is the sum
    over bijections of (-q)^(inversions) times the row-ordered monomial.
    """
    m = len(rows)
    out = NCPoly.zero()
    for perm in permutations(range(m)):
        coeff = field.one
        k = _inversions(perm)
        sign = field.one if k % 2 == 0 else -field.one
        coeff = sign
        for _ in range(k):
            coeff = coeff * q
        word = tuple(gi(rows[t], cols[perm[t]]) for t in range(m))
        out = out + NCPoly.term(word, coeff)
    return out


def _neg_q_power(q, field, e):
    """(-q)^e for a possibly negative integer e."""
    out = field.one
    if e >= 0:
        for _ in range(e):
            out = out * (-q)
    else:
        inv = field.one / (-q)
        for _ in range(-e):
            out = out * inv
    return out


def _quantum_matrix_rules(n, q, field, gi):
    one = field.one
    qinv = one / q
    lam = q - qinv
    elements = []
    for u in range(n * n):
        for v in range(u):
            a, b = u // n + 1, u % n + 1
            c, d = v // n + 1, v % n + 1
            lhs = NCPoly.term((u, v), one)
            if a == c or b == d:
                elements.append(lhs - NCPoly.term((v, u), qinv))
            elif b < d:
                # rows a>c, cols b<d: opposite corners commute
                elements.append(lhs - NCPoly.term((v, u), one))
            else:
                # rows a>c, cols b>d: straightening relation
                il = gi(c, b)
                kj = gi(a, d)
                elements.append(
                    lhs - NCPoly.term((v, u), one) + NCPoly.term((il, kj), lam))
    return elements


def build_quantum_matrices(n, field=None, q=None, degree_bound=6):
    """The quantum matrix bialgebra on n^2 generators (no antipode)."""
    if field is None:
        field = QQ_q
    if q is None:
        q = field.q if hasattr(field, "q") else field.one
    q = field.coerce(q)
    names = tuple(f"X{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))

    def gi(i, j):
        return (i - 1) * n + (j - 1)

    elements = _quantum_matrix_rules(n, q, field, gi)
    seed = [orient(e, field) for e in elements]
    sys = complete(RewriteSystem(names, field, seed), degree_bound)

    coproduct = []
    counit = []
    for idx in range(n * n):
        i, j = idx // n + 1, idx % n + 1
        coproduct.append({((gi(i, t),), (gi(t, j),)): field.one
                          for t in range(1, n + 1)})
        counit.append(field.one if i == j else field.zero)
    h = HopfPresentation(sys, coproduct, counit, antipode=None,
                         name=f"Oq(M_{n})", defining_rules=seed)
    h.q = q
    return h


def build_quantum_sl(n, field=None, q=None, degree_bound=6):
    """The quantized coordinate ring of SL_n, antipode by quantum cofactors."""
    if field is None:
        field = QQ_q
    if q is None:
        q = field.q if hasattr(field, "q") else field.one
    q = field.coerce(q)
    names = tuple(f"X{i}{j}" for i in range(1, n + 1) for j in range(1, n + 1))

    def gi(i, j):
        return (i - 1) * n + (j - 1)

    elements = _quantum_matrix_rules(n, q, field, gi)
    allidx = list(range(1, n + 1))
    det = quantum_minor(n, allidx, allidx, q, field, gi)
    elements.append(det - NCPoly.const(field.one))
    seed = [orient(e, field) for e in elements]
    sys = complete(RewriteSystem(names, field, seed), degree_bound)

    coproduct = []
    counit = []
    antipode = []
    antipode_inv = []
    qinv = field.one / q
    for idx in range(n * n):
        i, j = idx // n + 1, idx % n + 1
        coproduct.append({((gi(i, t),), (gi(t, j),)): field.one
                          for t in range(1, n + 1)})
        counit.append(field.one if i == j else field.zero)
        rows = [r for r in allidx if r != j]
        cols = [c for c in allidx if c != i]
        minor = quantum_minor(n, rows, cols, q, field, gi)
        antipode.append(sys.normal_form(minor.scale(_neg_q_power(q, field, i - j))))
        antipode_inv.append(sys.normal_form(
            minor.scale(_neg_q_power(qinv, field, i - j))))
    h = HopfPresentation(sys, coproduct, counit, antipode, antipode_inv,
                         name=f"Oq(SL_{n})", defining_rules=seed)
    h.q = q
    # the descent order used in the integral computation: work down the
    # last column/row pairs, then recurse on the leading submatrix
    chain = []
    for size in range(n, 1, -1):
        for i in range(1, size):
            chain.append(f"X{i}{size}")
            chain.append(f"X{size}{i}")
    h.descent_chain = chain
    return h


# ---------------------------------------------------------------------------
# enveloping algebras
# ---------------------------------------------------------------------------

def _bracket_table(dim, brackets, field):
    """Normalize {(i,j): [(k, c), ...]} (i<j) into full antisymmetric form."""
    table = {}
    for (i, j), terms in brackets.items():
        if not (0 <= i < j < dim):
            raise ValueError("bracket indices must satisfy 0 <= i < j < dim")
        vec = {}
        for k, c in terms:
            c = field.coerce(c)
            if c:
                vec[k] = vec.get(k, field.zero) + c
        table[(i, j)] = {k: c for k, c in vec.items() if c}
    return table


def _bracket_vec(table, field, i, j):
    if i == j:
        return {}
    if i < j:
        return dict(table.get((i, j), {}))
    return {k: -c for k, c in table.get((j, i), {}).items()}


def build_enveloping(brackets, names=None, field=None, degree_bound=6):
    """Universal enveloping algebra from structure constants.

    ``brackets`` maps pairs (i, j) with i < j to a list of (k, coeff)
    giving [y_i, y_j]; the Jacobi identity is verified exactly.
    """
    if field is None:
        field = QQ
    if names is None:
        dim = 1 + max([max(i, j) for i, j in brackets] or [0])
        names = tuple(f"y{k}" for k in range(dim))
    names = tuple(names)
    dim = len(names)
    table = _bracket_table(dim, brackets, field)

    def brk_elem(vec_a, vec_b):
        out = {}
        for i, ca in vec_a.items():
            for j, cb in vec_b.items():
                for k, c in _bracket_vec(table, field, i, j).items():
                    v = out.get(k, field.zero) + ca * cb * c
                    if v:
                        out[k] = v
                    else:
                        out.pop(k, None)
        return out

    for i in range(dim):
        for j in range(i + 1, dim):
            for k in range(j + 1, dim):
                acc = {}
                for vec in (
                    brk_elem(_bracket_vec(table, field, i, j), {k: field.one}),
                    brk_elem(_bracket_vec(table, field, j, k), {i: field.one}),
                    brk_elem(_bracket_vec(table, field, k, i), {j: field.one}),
                ):
                    for m, c in vec.items():
                        v = acc.get(m, field.zero) + c
                        if v:
                            acc[m] = v
                        else:
                            acc.pop(m, None)
                if acc:
                    raise JacobiViolation(
                        f"Jacobi fails on ({names[i]},{names[j]},{names[k]})")

    rules = []
    for j in range(dim):
        for i in range(j):
            rhs = NCPoly.term((i, j), field.one)
            for k, c in _bracket_vec(table, field, j, i).items():
                rhs = rhs + NCPoly.term((k,), c)
            rules.append(orient(NCPoly.term((j, i), field.one) - rhs, field))
    seed = list(rules)
    sys = complete(RewriteSystem(names, field, rules), degree_bound)

    coproduct = [
        {((i,), ()): field.one, ((), (i,)): field.one} for i in range(dim)
    ]
    counit = [field.zero] * dim
    antipode = [NCPoly.term((i,), -field.one) for i in range(dim)]
    h = HopfPresentation(sys, coproduct, counit, antipode, antipode,
                         name="U(" + ",".join(names) + ")", defining_rules=seed)
    h.lie_brackets = table
    h.lie_dim = dim
    return h


# ---------------------------------------------------------------------------
# poly-Z group algebras
# ---------------------------------------------------------------------------

class PolycyclicData:
    """A poly-(infinite cyclic) group given by lower-triangular integer actions.

    ``actions[j]`` is a (j)x(j) integer matrix (for the (j+1)-st generator,
    0-indexed) whose row i is the exponent vector of t_j t_i t_j^{-1} on
    t_0 .. t_{j-1}.  Triangularity with diagonal +-1 keeps the cyclic
    series normal and the actions invertible over the integers.
    """

    def __init__(self, names, actions):
        self.names = tuple(names)
        d = len(self.names)
        self.actions = []
        for j in range(d):
            mat = [list(map(int, row)) for row in actions[j]] if j else []
            if len(mat) != j or any(len(r) != j for r in mat):
                raise ValueError(f"action matrix {j} must be {j}x{j}")
            for i in range(j):
                if abs(mat[i][i]) != 1:
                    raise NonInvertibleAction(
                        f"diagonal action entry for {self.names[j]} on "
                        f"{self.names[i]} must be +-1")
                for m in range(i + 1, j):
                    if mat[i][m]:
                        raise NonInvertibleAction(
                            "conjugation actions must be lower triangular")
            self.actions.append(mat)

    @property
    def hirsch_length(self):
        return len(self.names)

    def inverse_action(self, j):
        """Integer inverse of the j-th action matrix by forward substitution."""
        mat = self.actions[j]
        m = len(mat)
        inv = [[0] * m for _ in range(m)]
        for c in range(m):
            for i in range(m):
                s = (1 if i == c else 0) - sum(
                    mat[i][k] * inv[k][c] for k in range(i))
                inv[i][c] = s * mat[i][i]  # dividing by a +-1 diagonal entry
        for i in range(m):
            for c in range(m):
                s = sum(mat[i][k] * inv[k][c] for k in range(m))
                if s != (1 if i == c else 0):
                    raise NonInvertibleAction("action matrix is not invertible over Z")
        return inv

    def adjoint_trace_value(self, j):
        """Product of the determinants of the j-th generator's factor actions."""
        t = 1
        for i in range(j):
            t *= self.actions[j][i][i]
        return t


def _exp_word(exps):
    """Sorted monomial word for an exponent vector over tower generators."""
    word = []
    for m, e in enumerate(exps):
        if e > 0:
            word.extend([2 * m] * e)
        elif e < 0:
            word.extend([2 * m + 1] * (-e))
    return tuple(word)


def build_group_algebra(data: PolycyclicData, field=None, degree_bound=8):
    """Group algebra of a poly-Z group as a presented Hopf algebra.

    Generator letters come in (t, t^-1) pairs; the monomial order lists
    the tower generators bottom-up.
    """
    if field is None:
        field = QQ
    d = data.hirsch_length
    names = []
    for nm in data.names:
        names.extend([nm, nm + "_inv"])
    one = field.one
    elements = []
    for i in range(d):
        elements.append(NCPoly.term((2 * i, 2 * i + 1), one) - NCPoly.const(one))
        elements.append(NCPoly.term((2 * i + 1, 2 * i), one) - NCPoly.const(one))
    for j in range(d):
        mat = data.actions[j]
        inv = data.inverse_action(j) if j else []
        for i in range(j):
            w_pos = _exp_word(mat[i])
            w_neg = _exp_word([-e for e in mat[i]])
            v_pos = _exp_word(inv[i])
            v_neg = _exp_word([-e for e in inv[i]])
            tj, tj_i = 2 * j, 2 * j + 1
            ti, ti_i = 2 * i, 2 * i + 1
            elements.append(NCPoly.term((tj, ti), one)
                            - NCPoly.term(w_pos + (tj,), one))
            elements.append(NCPoly.term((tj, ti_i), one)
                            - NCPoly.term(w_neg + (tj,), one))
            elements.append(NCPoly.term((tj_i, ti), one)
                            - NCPoly.term(v_pos + (tj_i,), one))
            elements.append(NCPoly.term((tj_i, ti_i), one)
                            - NCPoly.term(v_neg + (tj_i,), one))
    rules = [orient(e, field) for e in elements if not e.is_zero()]
    seed = list(rules)
    sys = complete(RewriteSystem(names, field, rules), degree_bound)

    ng = 2 * d
    coproduct = [{((i,), (i,)): one} for i in range(ng)]
    counit = [one] * ng
    antipode = []
    for i in range(d):
        antipode.append(NCPoly.term((2 * i + 1,), one))
        antipode.append(NCPoly.term((2 * i,), one))
    h = HopfPresentation(sys, coproduct, counit, antipode, antipode,
                         name="k[" + "*".join(data.names) + "]", defining_rules=seed)
    h.polycyclic = data
    return h


def build_laurent(n, field=None, degree_bound=8):
    """Group algebra of Z^n (Laurent polynomials in n variables)."""
    data = PolycyclicData(
        [f"x{i + 1}" for i in range(n)],
        [[[1 if a == b else 0 for b in range(j)] for a in range(j)]
         for j in range(n)],
    )
    h = build_group_algebra(data, field=field, degree_bound=degree_bound)
    h.name = f"k[Z^{n}]"
    return h


# ---------------------------------------------------------------------------
# U_q(sl_2), shipped for presentation-level axiom checks only
# ---------------------------------------------------------------------------

def build_uq_sl2(field=None, degree_bound=6):
    if field is None:
        field = QQ_q
    q = field.q
    one = field.one
    qinv = one / q
    lam_inv = one / (q - qinv)
    E, F, K, Ki = 0, 1, 2, 3
    elements = [
        NCPoly.term((K, Ki), one) - NCPoly.const(one),
        NCPoly.term((Ki, K), one) - NCPoly.const(one),
        NCPoly.term((K, E), one) - NCPoly.term((E, K), q * q),
        NCPoly.term((K, F), one) - NCPoly.term((F, K), qinv * qinv),
        NCPoly.term((Ki, E), one) - NCPoly.term((E, Ki), qinv * qinv),
        NCPoly.term((Ki, F), one) - NCPoly.term((F, Ki), q * q),
        NCPoly.term((F, E), one) - NCPoly.term((E, F), one)
        + NCPoly.term((K,), lam_inv) - NCPoly.term((Ki,), lam_inv),
    ]
    seed = [orient(e, field) for e in elements]
    sys = complete(RewriteSystem(("E", "F", "K", "K_inv"), field, seed),
                   degree_bound)
    coproduct = [
        {((E,), ()): one, ((K,), (E,)): one},
        {((F,), (Ki,)): one, ((), (F,)): one},
        {((K,), (K,)): one},
        {((Ki,), (Ki,)): one},
    ]
    counit = [field.zero, field.zero, one, one]
    antipode = [
        NCPoly.term((Ki, E), -one),
        NCPoly.term((F, K), -one),
        NCPoly.term((Ki,), one),
        NCPoly.term((K,), one),
    ]
    antipode_inv = [
        NCPoly.term((E, Ki), -one),
        NCPoly.term((K, F), -one),
        NCPoly.term((Ki,), one),
        NCPoly.term((K,), one),
    ]
    return HopfPresentation(sys, coproduct, counit, antipode, antipode_inv,
                            name="Uq(sl2)", defining_rules=seed)
