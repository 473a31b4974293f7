"""Integral characters by descent through normal elements.

For a presented augmented algebra with a chain of tau-normal
non-zero-divisors in the augmentation ideal, killing the chain elements
one at a time relates the integral character of each quotient to the
previous one through the inverse twist.  Once the quotient is a
commutative algebra of group-like (or invertible) generators its
integral character is the counit, and composing the inverse twists back
up the tower yields the modular character of the original algebra.

The module also houses the two closed-form oracles used to cross-check
homological computations: the trace character of the adjoint
representation for enveloping algebras, and the determinant character of
the conjugation action for poly-Z group algebras.
"""

from __future__ import annotations

from .hopf import AlgebraMap, Character, HopfPresentation, compose, s_squared, \
    winding_left
from .rewrite import InsufficientConfluence, NCPoly, certify_nonzerodivisor, \
    is_tau_normal, quotient


class NotNormal(ValueError):
    """A chain element is not diagonally tau-normal (or is a zero divisor)."""


class NotAugmented(ValueError):
    """A chain element does not lie in the augmentation ideal."""


class BaseCaseUnrecognized(ValueError):
    """The final quotient is not a recognized commutative base."""


class CertificateTooWeak(ValueError):
    """The confluence certificate cannot decide a descent question."""


class DescentStep:
    __slots__ = ("label", "element", "tau", "quotient", "nzd_degree")

    def __init__(self, label, element, tau, quo, nzd_degree):
        self.label = label
        self.element = element
        self.tau = tau
        self.quotient = quo
        self.nzd_degree = nzd_degree

    def as_dict(self, names, field):
        return {
            "element": self.label,
            "tau": {names[g]: field.to_str(c) for g, c in sorted(self.tau.items())},
            "nonzerodivisor_degree": self.nzd_degree,
            "quotient_rules": len(self.quotient.rules),
        }


class DescentTrace:
    def __init__(self, steps, base_tag, character):
        self.steps = steps
        self.base_tag = base_tag
        self.character = character

    def as_dict(self, h):
        return {
            "steps": [s.as_dict(h.generators, h.field) for s in self.steps],
            "base": self.base_tag,
            "character": {n: h.field.to_str(v)
                          for n, v in zip(h.generators, self.character.values)},
        }


def _base_case_tag(h: HopfPresentation, base):
    """Recognize the terminal quotient: commutative, generators group-like
    modulo the killed ideal or paired with inverse generators."""
    sys = base
    field = sys.field
    survivors = [g for g in range(len(sys.generators))
                 if not sys.normal_form(NCPoly.term((g,), field.one)).is_zero()]
    for a in survivors:
        for b in survivors:
            if a < b:
                comm = sys.normal_form(
                    NCPoly.term((a, b), field.one) - NCPoly.term((b, a), field.one))
                if not comm.is_zero():
                    raise BaseCaseUnrecognized(
                        f"generators {sys.generators[a]}, {sys.generators[b]} "
                        "do not commute in the base quotient")
    all_invertible = True
    for g in survivors:
        # group-like modulo the killed generators
        dg = h.coproduct[g]
        diff = dict(dg)
        gl = True
        want = {((g,), (g,)): field.one}
        acc = {}
        for (w1, w2), c in diff.items():
            p1 = sys.normal_form(NCPoly.term(w1, field.one))
            p2 = sys.normal_form(NCPoly.term(w2, field.one))
            for u1, c1 in p1.terms.items():
                for u2, c2 in p2.terms.items():
                    key = (u1, u2)
                    cur = acc.get(key)
                    v = c * c1 * c2
                    if cur is None:
                        acc[key] = v
                    else:
                        cur = cur + v
                        if cur:
                            acc[key] = cur
                        else:
                            del acc[key]
        for key, v in want.items():
            cur = acc.get(key)
            cur = -v if cur is None else cur - v
            if cur:
                acc[key] = cur
            else:
                acc.pop(key, None)
        gl = not acc
        if gl:
            continue
        all_invertible = False
        has_inverse = False
        gp = NCPoly.term((g,), field.one)
        for hG in survivors:
            hp = NCPoly.term((hG,), field.one)
            one = NCPoly.const(field.one)
            if sys.normal_form(gp.free_mul(hp)) == one and \
               sys.normal_form(hp.free_mul(gp)) == one:
                has_inverse = True
                break
        if not has_inverse:
            raise BaseCaseUnrecognized(
                f"generator {sys.generators[g]} is neither group-like modulo "
                "the chain nor paired with an inverse generator")
    return "laurent" if not all_invertible else "group-like-torus"


def descend(h: HopfPresentation, chain=None, degree_bound=None, nzd_degree=3):
    """Integral character of h by descending through the given chain.

    Returns (pi0, trace).  Chain entries are generator names or NCPolys;
    each must lie in the augmentation ideal, be diagonally tau-normal
    and certified a non-zero-divisor in the current quotient.  The
    returned character annihilates all defining relations of h.
    """
    if chain is None:
        chain = getattr(h, "descent_chain", None)
        if chain is None:
            raise NotNormal("no descent chain supplied and none shipped")
    if degree_bound is None:
        degree_bound = h.sys.cert_degree or 6
    field = h.field
    current = h.sys
    steps = []
    for entry in chain:
        if isinstance(entry, NCPoly):
            p = entry
            label = repr(entry)
        else:
            p = h.sys.gen(entry)
            label = entry if isinstance(entry, str) else h.generators[entry]
        if h.eps_poly(p):
            raise NotAugmented(f"{label} is not in the augmentation ideal")
        pcur = current.normal_form(p)
        if pcur.is_zero():
            raise NotNormal(f"{label} already vanishes in the current quotient")
        try:
            tau = is_tau_normal(pcur, current)
        except InsufficientConfluence as exc:
            raise CertificateTooWeak(str(exc)) from exc
        if tau is None:
            raise NotNormal(f"{label} is not diagonally tau-normal at its step")
        cert = certify_nonzerodivisor(current, pcur, nzd_degree)
        if cert is None:
            raise NotNormal(f"{label} is a zero divisor at its step")
        quo = quotient(current, pcur, degree_bound)
        steps.append(DescentStep(label, pcur, tau, quo, cert))
        current = quo

    base_tag = _base_case_tag(h, current)

    values = []
    for g in range(len(h.generators)):
        c = field.one
        dead = False
        system = h.sys
        for step in steps:
            if system.normal_form(NCPoly.term((g,), field.one)).is_zero():
                dead = True
                break
            c = c / step.tau[g]
            system = step.quotient
        if not dead and current.normal_form(
                NCPoly.term((g,), field.one)).is_zero():
            dead = True
        values.append(field.zero if dead else c * h.counit[g])
    pi0 = Character(h, values)
    return pi0, DescentTrace(steps, base_tag, pi0)


def xi_of(h: HopfPresentation, pi0: Character) -> AlgebraMap:
    """The left winding automorphism of the integral character."""
    return winding_left(h, pi0)


def nakayama_presented(h: HopfPresentation, pi0: Character) -> AlgebraMap:
    """The Nakayama automorphism S^2 o winding(pi0), verified on relations."""
    return compose(s_squared(h), xi_of(h, pi0))


def propose_chain(h: HopfPresentation):
    """Generator candidates in the augmentation ideal found tau-normal."""
    out = []
    for g, name in enumerate(h.generators):
        if h.counit[g]:
            continue
        tau = is_tau_normal(h.sys.gen(g), h.sys)
        if tau is not None:
            out.append(name)
    return out


# ---------------------------------------------------------------------------
# closed-form oracles
# ---------------------------------------------------------------------------

def adjoint_trace(h: HopfPresentation) -> Character:
    """The determinant character of a poly-Z group's conjugation action.

    Values are +-1 on each tower generator (and equal on its inverse):
    the product of the diagonal action entries on the infinite cyclic
    factors below it.
    """
    data = h.polycyclic
    field = h.field
    values = []
    for j in range(data.hirsch_length):
        t = data.adjoint_trace_value(j)
        v = field.one if t == 1 else -field.one
        values.extend([v, v])
    return Character(h, values)


def lie_trace_character(h: HopfPresentation) -> Character:
    """x -> tr(ad x) on Lie generators, the enveloping-algebra oracle."""
    from .builders import _bracket_vec

    field = h.field
    dim = h.lie_dim
    values = []
    for i in range(dim):
        acc = field.zero
        for j in range(dim):
            acc = acc + _bracket_vec(h.lie_brackets, field, i, j).get(j, field.zero)
        values.append(acc)
    return Character(h, values)
