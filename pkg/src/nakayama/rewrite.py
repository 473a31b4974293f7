"""Noncommutative polynomial arithmetic and bounded diamond-lemma rewriting.

Words are tuples of generator indices; the empty word is the monomial 1.
A rewrite system carries oriented rules ``lhs -> rhs`` where ``lhs`` is a
word that is strictly larger, in the degree-then-lexicographic order
induced by the generator listing, than every monomial of ``rhs``.
Completion resolves all overlap ambiguities up to a degree bound and
records that bound as the system's confluence certificate: normal forms
are unique for elements of degree at most the certificate.
"""

from __future__ import annotations

import heapq
from fractions import Fraction


class StepBudgetExceeded(RuntimeError):
    """Rewriting exceeded the configured step budget."""


class OrderViolation(RuntimeError):
    """A derived relation cannot be oriented as a rewrite rule."""


class InsufficientConfluence(RuntimeError):
    """The system's confluence certificate is too weak to decide the question."""


def word_key(w):
    """Sort key realizing degree-then-lexicographic order."""
    return (len(w), w)


def _heap_key(w):
    # deglex-descending ordering for the reduction agenda
    return (-len(w), tuple(-x for x in w))


class NCPoly:
    """A finite k-linear combination of words, stored as dict word -> scalar."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for w, c in (terms.items() if isinstance(terms, dict) else terms):
                if c:
                    acc = self.terms.get(w)
                    if acc is None:
                        self.terms[w] = c
                    else:
                        acc = acc + c
                        if acc:
                            self.terms[w] = acc
                        else:
                            del self.terms[w]

    @classmethod
    def zero(cls):
        return cls()

    @classmethod
    def term(cls, w, c):
        p = cls()
        if c:
            p.terms[tuple(w)] = c
        return p

    @classmethod
    def const(cls, c):
        return cls.term((), c)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, NCPoly) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            acc = out.get(w)
            if acc is None:
                out[w] = c
            else:
                acc = acc + c
                if acc:
                    out[w] = acc
                else:
                    del out[w]
        p = NCPoly()
        p.terms = out
        return p

    def __neg__(self):
        p = NCPoly()
        p.terms = {w: -c for w, c in self.terms.items()}
        return p

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        p = NCPoly()
        if c:
            p.terms = {w: c * x for w, x in self.terms.items()}
        return p

    def free_mul(self, other):
        """Concatenation product in the free algebra (no reduction)."""
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                c = c1 * c2
                acc = out.get(w)
                if acc is None:
                    out[w] = c
                else:
                    acc = acc + c
                    if acc:
                        out[w] = acc
                    else:
                        del out[w]
        p = NCPoly()
        p.terms = out
        return p

    def degree(self):
        return max((len(w) for w in self.terms), default=-1)

    def leading_word(self):
        return max(self.terms, key=word_key)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0]), reverse=True)

    def constant_coefficient(self, zero):
        return self.terms.get((), zero)

    def __repr__(self):
        if not self.terms:
            return "NCPoly(0)"
        bits = [f"{c}*{'.'.join(map(str, w)) or '1'}" for w, c in self.sorted_terms()]
        return "NCPoly(" + " + ".join(bits) + ")"


class RewriteRule:
    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs, rhs):
        self.lhs = tuple(lhs)
        self.rhs = rhs
        lk = word_key(self.lhs)
        for w in rhs.terms:
            if word_key(w) >= lk:
                raise OrderViolation(f"rule lhs {lhs} not larger than rhs monomial {w}")

    def __repr__(self):
        return f"RewriteRule({self.lhs} -> {self.rhs!r})"


def orient(p, field):
    """Turn a nonzero polynomial into the rule lm -> -(rest)/lc."""
    if p.is_zero():
        raise ValueError("cannot orient zero")
    lw = p.leading_word()
    if not lw:
        raise OrderViolation("relation ideal contains a nonzero constant")
    lc = p.terms[lw]
    rest = NCPoly()
    inv = field.one / lc
    rest.terms = {w: -(c * inv) for w, c in p.terms.items() if w != lw}
    return RewriteRule(lw, rest)


class RewriteSystem:
    """An alphabet with oriented, inter-reduced rewrite rules.

    Generator precedence is the listing order (index 0 is smallest).
    Systems are immutable once built; :func:`complete` and
    :func:`quotient` return new systems.
    """

    def __init__(self, generators, field, rules=(), cert_degree=0,
                 step_budget=5_000_000):
        self.generators = tuple(generators)
        self.field = field
        self.rules = sorted(rules, key=lambda r: word_key(r.lhs))
        self.cert_degree = cert_degree
        self.step_budget = step_budget
        self._index = {}
        self._max_lhs = 0
        for rule in self.rules:
            self._index.setdefault(rule.lhs[0], []).append(rule)
            self._max_lhs = max(self._max_lhs, len(rule.lhs))
        for lst in self._index.values():
            lst.sort(key=lambda r: word_key(r.lhs))
        self._nf_cache = {}

    # -- construction helpers ------------------------------------------------

    def gen(self, i):
        if isinstance(i, str):
            i = self.generators.index(i)
        return NCPoly.term((i,), self.field.one)

    def word(self, letters):
        idx = []
        for l in letters:
            idx.append(self.generators.index(l) if isinstance(l, str) else l)
        return NCPoly.term(tuple(idx), self.field.one)

    def const(self, c):
        return NCPoly.const(self.field.coerce(c))

    def with_rules(self, rules, cert_degree=0):
        return RewriteSystem(self.generators, self.field, rules, cert_degree,
                             self.step_budget)

    # -- reduction -----------------------------------------------------------

    def _find_redex(self, w):
        idx = self._index
        n = len(w)
        for i in range(n):
            cands = idx.get(w[i])
            if not cands:
                continue
            rem = n - i
            for rule in cands:
                L = len(rule.lhs)
                if L <= rem and w[i:i + L] == rule.lhs:
                    return i, rule
        return None

    def is_normal_word(self, w):
        return self._find_redex(w) is None

    def normal_form(self, p, budget=None):
        """Fully reduced representative of p modulo the relation ideal."""
        if budget is None:
            budget = self.step_budget
        agenda = dict(p.terms)
        heap = [(_heap_key(w), w) for w in agenda]
        heapq.heapify(heap)
        result = {}
        steps = 0
        while heap:
            _, w = heapq.heappop(heap)
            c = agenda.pop(w, None)
            if c is None or not c:
                continue
            hit = self._find_redex(w)
            if hit is None:
                acc = result.get(w)
                if acc is None:
                    result[w] = c
                else:
                    acc = acc + c
                    if acc:
                        result[w] = acc
                    else:
                        del result[w]
                continue
            steps += 1
            if steps > budget:
                raise StepBudgetExceeded(
                    f"normal form exceeded {budget} reduction steps")
            i, rule = hit
            pre = w[:i]
            post = w[i + len(rule.lhs):]
            for rw, rc in rule.rhs.terms.items():
                nw = pre + rw + post
                nc = c * rc
                acc = agenda.get(nw)
                if acc is None:
                    agenda[nw] = nc
                    heapq.heappush(heap, (_heap_key(nw), nw))
                else:
                    acc = acc + nc
                    if acc:
                        agenda[nw] = acc
                    else:
                        del agenda[nw]
        out = NCPoly()
        out.terms = result
        return out

    def nf_word(self, w):
        """Cached normal form of a single word."""
        cached = self._nf_cache.get(w)
        if cached is None:
            cached = self.normal_form(NCPoly.term(w, self.field.one))
            self._nf_cache[w] = cached
        return cached

    def shuffled_normal_form(self, p, rng, budget=None):
        """Reduce with randomized redex choices; confluence oracle for tests."""
        if budget is None:
            budget = self.step_budget
        cur = dict(p.terms)
        steps = 0
        while True:
            redexes = []
            for w in cur:
                n = len(w)
                for i in range(n):
                    cands = self._index.get(w[i])
                    if not cands:
                        continue
                    for rule in cands:
                        L = len(rule.lhs)
                        if L <= n - i and w[i:i + L] == rule.lhs:
                            redexes.append((w, i, rule))
            if not redexes:
                break
            w, i, rule = redexes[rng.randrange(len(redexes))]
            steps += 1
            if steps > budget:
                raise StepBudgetExceeded("shuffled reduction exceeded budget")
            c = cur.pop(w)
            pre, post = w[:i], w[i + len(rule.lhs):]
            for rw, rc in rule.rhs.terms.items():
                nw = pre + rw + post
                acc = cur.get(nw)
                nc = c * rc
                if acc is None:
                    cur[nw] = nc
                else:
                    acc = acc + nc
                    if acc:
                        cur[nw] = acc
                    else:
                        del cur[nw]
        out = NCPoly()
        out.terms = {w: c for w, c in cur.items() if c}
        return out

    def mul(self, p, q):
        return self.normal_form(p.free_mul(q))

    def mul_many(self, polys):
        acc = NCPoly.const(self.field.one)
        for p in polys:
            acc = self.mul(acc, p)
        return acc

    # -- normal word enumeration ---------------------------------------------

    def normal_words(self, max_degree):
        """All normal words of degree <= max_degree, in deglex order."""
        out = [()]
        layer = [()]
        ng = len(self.generators)
        for _ in range(max_degree):
            nxt = []
            for w in layer:
                for g in range(ng):
                    cand = w + (g,)
                    # w is normal, so only suffixes ending at the new letter matter
                    lo = max(0, len(cand) - self._max_lhs)
                    ok = True
                    for i in range(lo, len(cand)):
                        cands = self._index.get(cand[i])
                        if not cands:
                            continue
                        rem = len(cand) - i
                        for rule in cands:
                            if len(rule.lhs) == rem and cand[i:] == rule.lhs:
                                ok = False
                                break
                        if not ok:
                            break
                    if ok:
                        nxt.append(cand)
            out.extend(nxt)
            layer = nxt
        out.sort(key=word_key)
        return out


# ---------------------------------------------------------------------------
# completion
# ---------------------------------------------------------------------------

def _interreduce(rules, field, sys_like):
    """Inter-reduce a rule list; returns a canonical sorted list."""
    rules = sorted(rules, key=lambda r: word_key(r.lhs))
    changed = True
    while changed:
        changed = False
        for i, rule in enumerate(list(rules)):
            others = rules[:i] + rules[i + 1:]
            helper = sys_like.with_rules(others)
            lhs_poly = NCPoly.term(rule.lhs, field.one)
            red_lhs = helper.normal_form(lhs_poly)
            red_rhs = helper.normal_form(rule.rhs)
            if red_lhs == lhs_poly:
                if red_rhs == rule.rhs:
                    continue
                rules = others + [RewriteRule(rule.lhs, red_rhs)]
            else:
                diff = red_lhs - red_rhs
                if diff.is_zero():
                    rules = others
                else:
                    rules = others + [orient(diff, field)]
            rules.sort(key=lambda r: word_key(r.lhs))
            changed = True
            break
    return rules


def _overlaps(r1, r2):
    """Proper suffix-prefix gluings of the two lhs words."""
    a, b = r1.lhs, r2.lhs
    for k in range(1, min(len(a), len(b))):
        if a[len(a) - k:] == b[:k]:
            yield a + b[k:], len(a) - k
    # inclusion ambiguities are impossible in an inter-reduced system


def complete(sys: RewriteSystem, degree_bound: int) -> RewriteSystem:
    """Resolve all overlap ambiguities of combined degree <= degree_bound.

    Returns a new system whose confluence certificate is the bound.  New
    rules derived from unresolved overlaps are inserted in canonical
    order, so the result is independent of traversal order.
    """
    field = sys.field
    rules = _interreduce(list(sys.rules), field, sys)
    while True:
        work = sys.with_rules(rules)
        new_elements = []
        for r1 in rules:
            for r2 in rules:
                for word, pos in _overlaps(r1, r2):
                    if len(word) > degree_bound:
                        continue
                    # reduce the gluing in the two ambiguous ways
                    p1 = NCPoly.term(word[len(r1.lhs):], field.one)
                    via1 = work.normal_form(r1.rhs.free_mul(p1))
                    pre = NCPoly.term(word[:pos], field.one)
                    via2 = work.normal_form(pre.free_mul(r2.rhs))
                    diff = via1 - via2
                    if not diff.is_zero():
                        new_elements.append(work.normal_form(diff))
        new_elements = [e for e in new_elements if not e.is_zero()]
        if not new_elements:
            return sys.with_rules(rules, cert_degree=degree_bound)
        new_elements.sort(key=lambda e: word_key(e.leading_word()))
        for e in new_elements:
            e = sys.with_rules(rules).normal_form(e)
            if not e.is_zero():
                rules.append(orient(e, field))
        rules = _interreduce(rules, field, sys)


# ---------------------------------------------------------------------------
# tau-normal elements, nonzerodivisor certificates, quotients
# ---------------------------------------------------------------------------

def is_tau_normal(x: NCPoly, sys: RewriteSystem):
    """Detect a diagonal automorphism tau with x*g = tau(g)*x for all generators.

    Returns a dict {generator index: scalar} or None when no diagonal tau
    exists.  Only diagonal twists (g -> scalar*g) are sought.
    """
    if x.is_zero():
        return None
    if sys.cert_degree and x.degree() + 1 > sys.cert_degree:
        raise InsufficientConfluence(
            f"certificate degree {sys.cert_degree} cannot decide normality of "
            f"a degree-{x.degree()} element")
    x = sys.normal_form(x)
    if x.is_zero():
        return None
    taus = {}
    for g in range(len(sys.generators)):
        gp = NCPoly.term((g,), sys.field.one)
        xg = sys.mul(x, gp)
        gx = sys.mul(gp, x)
        if xg.is_zero() and gx.is_zero():
            taus[g] = sys.field.one
            continue
        if xg.is_zero() != gx.is_zero():
            return None
        if set(xg.terms) != set(gx.terms):
            return None
        ratio = None
        for w, c in xg.terms.items():
            r = c / gx.terms[w]
            if ratio is None:
                ratio = r
            elif ratio != r:
                return None
        taus[g] = ratio
    return taus


def certify_nonzerodivisor(sys: RewriteSystem, x: NCPoly, degree: int):
    """Certify that x is not a zero divisor on normal words up to a degree.

    Left and right multiplication by x are checked injective on the span
    of normal words of degree <= degree - deg(x).  Fast path: if the
    leading monomials of the products are pairwise distinct the maps are
    triangular, hence injective; otherwise an exact kernel computation
    decides.  Returns the certified degree.
    """
    from .linalg import Matrix, kernel

    x = sys.normal_form(x)
    if x.is_zero():
        return None
    d = x.degree()
    words = sys.normal_words(max(0, degree - d))
    for side in ("left", "right"):
        products = []
        for w in words:
            wp = NCPoly.term(w, sys.field.one)
            prod = sys.mul(x, wp) if side == "left" else sys.mul(wp, x)
            if prod.is_zero():
                return None
            products.append(prod)
        leads = [p.leading_word() for p in products]
        if len(set(leads)) == len(leads):
            continue
        support = sorted({w for p in products for w in p.terms}, key=word_key)
        col = {w: i for i, w in enumerate(support)}
        rows = []
        for p in products:
            row = [sys.field.zero] * len(support)
            for w, c in p.terms.items():
                row[col[w]] = c
            rows.append(row)
        mat = Matrix.from_rows(rows, sys.field).transpose()
        if kernel(mat):
            return None
    return degree


def quotient(sys: RewriteSystem, x: NCPoly, degree_bound: int) -> RewriteSystem:
    """Presentation of the quotient by the two-sided ideal generated by x."""
    x = sys.normal_form(x)
    if x.is_zero():
        return complete(sys, degree_bound)
    rules = list(sys.rules) + [orient(x, sys.field)]
    base = sys.with_rules(_interreduce(rules, sys.field, sys))
    return complete(base, degree_bound)
