"""Presented Hopf algebras: coproduct/counit/antipode on generators,
characters, winding automorphisms, and bounded axiom verification.

A presentation stores the structure maps on generators only; everything
is extended multiplicatively (anti-multiplicatively for the antipode)
and reduced to normal form.  All verification is *modulo relations at a
finite certificate degree*: a pass is recorded together with the degree
it was checked at, never claimed globally.

Tensor squares A (x) A are plain dicts mapping pairs of normal words to
scalars; both legs are kept in normal form.
"""

from __future__ import annotations

from .rewrite import NCPoly, RewriteSystem, word_key


class RelationViolation(ValueError):
    """A character or algebra map fails to annihilate a defining relation."""


# ---------------------------------------------------------------------------
# tensor-square arithmetic (dict[(word, word)] -> scalar)
# ---------------------------------------------------------------------------

def t2_zero():
    return {}


def t2_add_into(acc, t, c=None):
    for k, v in t.items():
        if c is not None:
            v = c * v
        if not v:
            continue
        cur = acc.get(k)
        if cur is None:
            acc[k] = v
        else:
            cur = cur + v
            if cur:
                acc[k] = cur
            else:
                del acc[k]
    return acc


def t2_from_polys(p, r):
    out = {}
    for w1, c1 in p.terms.items():
        for w2, c2 in r.terms.items():
            c = c1 * c2
            if c:
                t2_add_into(out, {(w1, w2): c})
    return out


def t2_mul(sys, a, b):
    out = {}
    for (u1, u2), c in a.items():
        for (v1, v2), d in b.items():
            p1 = sys.nf_word(u1 + v1)
            p2 = sys.nf_word(u2 + v2)
            cd = c * d
            for w1, c1 in p1.terms.items():
                for w2, c2 in p2.terms.items():
                    t2_add_into(out, {(w1, w2): cd * c1 * c2})
    return out


def t2_scale(t, c):
    return {k: c * v for k, v in t.items()} if c else {}


def t2_sub(a, b):
    out = dict(a)
    t2_add_into(out, {k: -v for k, v in b.items()})
    return out


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------

class HopfPresentation:
    """A Hopf (or bi-) algebra presented by a rewrite system.

    ``coproduct[i]`` is a tensor-square dict for the i-th generator,
    ``counit[i]`` a scalar, ``antipode[i]`` an NCPoly (or the whole list
    None for a bialgebra without antipode).  ``antipode_inverse`` is
    optional and records that the antipode is known to be bijective.
    """

    def __init__(self, sys: RewriteSystem, coproduct, counit, antipode,
                 antipode_inverse=None, name="", defining_rules=None):
        self.sys = sys
        self.field = sys.field
        self.coproduct = list(coproduct)
        self.counit = [sys.field.coerce(c) for c in counit]
        self.antipode = list(antipode) if antipode is not None else None
        self.antipode_inverse = (
            list(antipode_inverse) if antipode_inverse is not None else None
        )
        self.name = name
        # the seed relations; the completed rules are their consequences, so
        # structure-map compatibility only ever needs checking on these
        self.defining_rules = (
            list(defining_rules) if defining_rules is not None else list(sys.rules)
        )
        self._delta_cache = {(): {((), ()): sys.field.one}}
        self._s_cache = {}
        self._s_inv_cache = {}

    @property
    def generators(self):
        return self.sys.generators

    def gen(self, g):
        return self.sys.gen(g)

    def gen_index(self, g):
        return self.sys.generators.index(g) if isinstance(g, str) else g

    # -- multiplicative extensions -------------------------------------------

    def eps_word(self, w):
        out = self.field.one
        for g in w:
            out = out * self.counit[g]
            if not out:
                return out
        return out

    def eps_poly(self, p):
        acc = self.field.zero
        for w, c in p.terms.items():
            acc = acc + c * self.eps_word(w)
        return acc

    def delta_word(self, w):
        cached = self._delta_cache.get(w)
        if cached is not None:
            return cached
        head = self.delta_word(w[:-1])
        out = t2_mul(self.sys, head, self.coproduct[w[-1]])
        self._delta_cache[w] = out
        return out

    def delta_poly(self, p):
        out = {}
        for w, c in p.terms.items():
            t2_add_into(out, self.delta_word(w), c)
        return out

    def _anti_extend(self, images, cache, w):
        cached = cache.get(w)
        if cached is not None:
            return cached
        if not w:
            out = NCPoly.const(self.field.one)
        else:
            out = self.sys.mul(self._anti_extend(images, cache, w[1:]), images[w[0]])
        cache[w] = out
        return out

    def antipode_word(self, w):
        if self.antipode is None:
            raise RelationViolation("presentation has no antipode")
        return self._anti_extend(self.antipode, self._s_cache, w)

    def antipode_poly(self, p):
        out = NCPoly.zero()
        for w, c in p.terms.items():
            out = out + self.antipode_word(w).scale(c)
        return out

    def antipode_inverse_poly(self, p):
        if self.antipode_inverse is None:
            raise RelationViolation("presentation has no antipode inverse")
        out = NCPoly.zero()
        for w, c in p.terms.items():
            out = out + self._anti_extend(
                self.antipode_inverse, self._s_inv_cache, w).scale(c)
        return out

    def __repr__(self):
        return f"HopfPresentation({self.name or ','.join(self.generators)})"


# ---------------------------------------------------------------------------
# characters and algebra maps
# ---------------------------------------------------------------------------

class Character:
    """An algebra homomorphism to the base field, stored on generators."""

    __slots__ = ("h", "values")

    def __init__(self, h: HopfPresentation, values, check=True):
        self.h = h
        self.values = tuple(h.field.coerce(v) for v in values)
        if len(self.values) != len(h.generators):
            raise ValueError("one value per generator required")
        if check:
            self.validate()

    def validate(self):
        for rule in self.h.sys.rules:
            lhs = self.of_word(rule.lhs)
            rhs = self.of_poly(rule.rhs)
            if lhs != rhs:
                raise RelationViolation(
                    f"character violates relation at {self._rule_name(rule)}")
        return self

    def _rule_name(self, rule):
        return "*".join(self.h.generators[g] for g in rule.lhs)

    def of_word(self, w):
        out = self.h.field.one
        for g in w:
            out = out * self.values[g]
            if not out:
                return out
        return out

    def of_poly(self, p):
        acc = self.h.field.zero
        for w, c in p.terms.items():
            acc = acc + c * self.of_word(w)
        return acc

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        vals = ", ".join(f"{n}:{v}" for n, v in zip(self.h.generators, self.values))
        return f"Character({vals})"


class AlgebraMap:
    """An algebra endomorphism given by generator images, verified on relations."""

    __slots__ = ("sys", "images", "cert_degree")

    def __init__(self, sys: RewriteSystem, images, check=True):
        self.sys = sys
        self.images = tuple(sys.normal_form(p) for p in images)
        self.cert_degree = sys.cert_degree
        if check:
            self.validate()

    @classmethod
    def identity(cls, sys):
        return cls(sys, [sys.gen(i) for i in range(len(sys.generators))], check=False)

    @classmethod
    def diagonal(cls, sys, scalars, check=True):
        imgs = [NCPoly.term((i,), sys.field.coerce(c)) for i, c in enumerate(scalars)]
        return cls(sys, imgs, check=check)

    def validate(self):
        for rule in self.sys.rules:
            lhs = self.apply_word(rule.lhs)
            rhs = self.apply(rule.rhs)
            if lhs != rhs:
                name = "*".join(self.sys.generators[g] for g in rule.lhs)
                raise RelationViolation(f"map violates relation at {name}")
        return self

    def apply_word(self, w):
        return self.sys.mul_many([self.images[g] for g in w])

    def apply(self, p):
        out = NCPoly.zero()
        for w, c in p.terms.items():
            out = out + self.apply_word(w).scale(c)
        return self.sys.normal_form(out)

    def compose(self, other):
        """self after other: x -> self(other(x))."""
        return AlgebraMap(self.sys, [self.apply(im) for im in other.images],
                          check=False)

    def is_identity(self):
        return all(
            im == NCPoly.term((i,), self.sys.field.one)
            for i, im in enumerate(self.images)
        )

    def diagonal_scalars(self):
        """Per-generator scalars when the map is diagonal, else None."""
        out = []
        for i, im in enumerate(self.images):
            if len(im.terms) != 1:
                return None
            (w, c), = im.terms.items()
            if w != (i,):
                return None
            out.append(c)
        return out

    def __eq__(self, other):
        return isinstance(other, AlgebraMap) and self.images == other.images

    def __repr__(self):
        body = ", ".join(
            f"{self.sys.generators[i]}->{im!r}" for i, im in enumerate(self.images)
        )
        return f"AlgebraMap({body})"


# ---------------------------------------------------------------------------
# winding automorphisms and friends
# ---------------------------------------------------------------------------

def winding_left(h: HopfPresentation, pi: Character) -> AlgebraMap:
    """The automorphism g -> sum pi(g_1) g_2."""
    images = []
    for i in range(len(h.generators)):
        out = NCPoly.zero()
        for (w1, w2), c in h.coproduct[i].items():
            v = c * pi.of_word(w1)
            if v:
                out = out + NCPoly.term(w2, v)
        images.append(h.sys.normal_form(out))
    return AlgebraMap(h.sys, images)


def winding_right(h: HopfPresentation, pi: Character) -> AlgebraMap:
    """The automorphism g -> sum g_1 pi(g_2)."""
    images = []
    for i in range(len(h.generators)):
        out = NCPoly.zero()
        for (w1, w2), c in h.coproduct[i].items():
            v = c * pi.of_word(w2)
            if v:
                out = out + NCPoly.term(w1, v)
        images.append(h.sys.normal_form(out))
    return AlgebraMap(h.sys, images)


def convolve(h: HopfPresentation, pi: Character, pi2: Character) -> Character:
    """Convolution product g -> sum pi(g_1) pi2(g_2)."""
    vals = []
    for i in range(len(h.generators)):
        acc = h.field.zero
        for (w1, w2), c in h.coproduct[i].items():
            acc = acc + c * pi.of_word(w1) * pi2.of_word(w2)
        vals.append(acc)
    return Character(h, vals)


def char_antipode_dual(h: HopfPresentation, pi: Character) -> Character:
    """The convolution inverse pi o S."""
    return Character(h, [pi.of_poly(h.antipode_poly(h.gen(i)))
                         for i in range(len(h.generators))])


def pi_of(h: HopfPresentation, sigma: AlgebraMap) -> Character:
    """The character eps o sigma attached to an algebra endomorphism."""
    return Character(h, [h.eps_poly(sigma.images[i])
                         for i in range(len(h.generators))])


def s_squared(h: HopfPresentation) -> AlgebraMap:
    return AlgebraMap(h.sys, [h.antipode_poly(h.antipode[i])
                              for i in range(len(h.generators))])


def compose(f: AlgebraMap, g: AlgebraMap) -> AlgebraMap:
    return f.compose(g)


def twist_character(pi: Character, sigma: AlgebraMap) -> Character:
    """pi o sigma, the character of the twisted trivial module."""
    return Character(pi.h, [pi.of_poly(sigma.images[i])
                            for i in range(len(sigma.images))])


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

class AxiomReport:
    def __init__(self, name, degree):
        self.name = name
        self.degree = degree
        self.checks = []

    def record(self, axiom, location, ok, skipped=False):
        self.checks.append(
            {"axiom": axiom, "location": location,
             "ok": bool(ok), "skipped": bool(skipped)})

    @property
    def ok(self):
        return all(c["ok"] or c["skipped"] for c in self.checks)

    def failures(self):
        return [c for c in self.checks if not c["ok"] and not c["skipped"]]

    def as_dict(self):
        return {"name": self.name, "degree": self.degree,
                "ok": self.ok, "checks": self.checks}


def verify_hopf_axioms(h: HopfPresentation, degree_bound=None) -> AxiomReport:
    """Check the bialgebra and antipode axioms modulo relations.

    Everything is verified on generators and on the defining relations,
    at the system's confluence certificate degree.  The report never
    aborts; every failure carries the axiom name and its location.
    """
    sys = h.sys
    if degree_bound is None:
        degree_bound = sys.cert_degree
    rep = AxiomReport(h.name, degree_bound)
    one = sys.field.one

    def rule_name(rule):
        return "*".join(sys.generators[g] for g in rule.lhs)

    def s_degree(w):
        # degree of the anti-multiplicative image, used to guard decisiveness
        return sum(
            max((h.antipode[g].degree() for g in w), default=0) for g in w)

    # defining relations are respected by the structure maps; the completed
    # rules are ideal consequences, so this settles the whole ideal
    for rule in h.defining_rules:
        if len(rule.lhs) > degree_bound:
            continue
        lhs_t2 = h.delta_word(rule.lhs)
        rhs_t2 = h.delta_poly(rule.rhs)
        rep.record("coproduct-respects-relations", rule_name(rule),
                   not t2_sub(lhs_t2, rhs_t2))
        rep.record("counit-respects-relations", rule_name(rule),
                   h.eps_word(rule.lhs) == h.eps_poly(rule.rhs))
        if h.antipode is None:
            rep.record("antipode-respects-relations", rule_name(rule),
                       False, skipped=True)
        elif s_degree(rule.lhs) > sys.cert_degree > 0:
            # a zero normal form would not be decisive past the certificate
            rep.record("antipode-respects-relations", rule_name(rule),
                       False, skipped=True)
        else:
            diff = h.antipode_word(rule.lhs) - h.antipode_poly(rule.rhs)
            rep.record("antipode-respects-relations", rule_name(rule),
                       diff.is_zero())

    # generator-level axioms
    for i, gname in enumerate(sys.generators):
        dg = h.coproduct[i]
        # coassociativity as tensor cubes
        left, right = {}, {}
        for (w1, w2), c in dg.items():
            for (u1, u2), d in h.delta_word(w1).items():
                key = (u1, u2, w2)
                cur = left.get(key)
                v = c * d
                left[key] = v if cur is None else cur + v
            for (u1, u2), d in h.delta_word(w2).items():
                key = (w1, u1, u2)
                cur = right.get(key)
                v = c * d
                right[key] = v if cur is None else cur + v
        diff3 = {k: v for k, v in left.items() if v}
        for k, v in right.items():
            if not v:
                continue
            cur = diff3.get(k)
            cur = -v if cur is None else cur - v
            if cur:
                diff3[k] = cur
            else:
                diff3.pop(k, None)
        rep.record("coassociativity", gname, not diff3)

        # counit laws
        lhs = NCPoly.zero()
        rhs = NCPoly.zero()
        for (w1, w2), c in dg.items():
            lhs = lhs + NCPoly.term(w2, c * h.eps_word(w1))
            rhs = rhs + NCPoly.term(w1, c * h.eps_word(w2))
        gpoly = sys.gen(i)
        rep.record("counit-left", gname, sys.normal_form(lhs) == gpoly)
        rep.record("counit-right", gname, sys.normal_form(rhs) == gpoly)

        # antipode axiom m(S (x) id)Delta = eps * 1 = m(id (x) S)Delta
        if h.antipode is not None:
            target = NCPoly.const(h.counit[i])
            sleft = NCPoly.zero()
            sright = NCPoly.zero()
            for (w1, w2), c in dg.items():
                sleft = sleft + h.sys.mul(
                    h.antipode_word(w1), NCPoly.term(w2, one)).scale(c)
                sright = sright + h.sys.mul(
                    NCPoly.term(w1, one), h.antipode_word(w2)).scale(c)
            rep.record("antipode-left", gname,
                       sys.normal_form(sleft - target).is_zero())
            rep.record("antipode-right", gname,
                       sys.normal_form(sright - target).is_zero())
        else:
            rep.record("antipode-left", gname, False, skipped=True)
            rep.record("antipode-right", gname, False, skipped=True)

        # bijectivity witness
        if h.antipode is not None and h.antipode_inverse is not None:
            gp = sys.gen(i)
            back = sys.normal_form(h.antipode_inverse_poly(h.antipode[i]))
            forth = sys.normal_form(h.antipode_poly(h.antipode_inverse[i]))
            rep.record("antipode-inverse", gname, back == gp and forth == gp)

    return rep
