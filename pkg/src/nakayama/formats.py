"""Textual interchange formats.

Three formats live here, all plain text, all lossless round-trips:

* presentation files -- a Hopf algebra by generators, oriented rules and
  structure maps on generators (grammar below);
* structure-tensor files -- a finite-dimensional Hopf algebra as sparse
  exact tensors;
* chain-complex export -- ranks plus differential entries (the parser
  needs the ambient presentation's rewrite system).

Presentation grammar, one declaration per line, '#' comments::

    field Q | Q(q) | Q(zeta_L)
    generators NAME NAME ...
    rule WORD -> POLY
    counit NAME = SCALAR
    coproduct NAME = POLY @ POLY + ...
    antipode NAME = POLY
    antipode-inverse NAME = POLY
    option degree-bound INT

Scalar and polynomial expressions use integers, 'q' or 'zeta', the
generator names, and  + - * / ^ ( )  with '@' separating tensor legs.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .hopf import HopfPresentation, t2_add_into
from .rewrite import NCPoly, RewriteRule, RewriteSystem, complete
from .scalars import field_by_name


class FormatError(ValueError):
    pass


_TOKEN = re.compile(r"\s*(\d+|[A-Za-z_][A-Za-z_0-9']*|\*\*|->|[-+*/^()@])")


def _tokenize(s):
    out = []
    pos = 0
    while pos < len(s):
        m = _TOKEN.match(s, pos)
        if not m:
            if s[pos:].strip():
                raise FormatError(f"cannot tokenize {s[pos:]!r}")
            break
        out.append(m.group(1))
        pos = m.end()
    return out


class _Parser:
    """Recursive descent over  sum > tensor > product > power > atom."""

    def __init__(self, tokens, field, gen_index=None):
        self.toks = tokens
        self.i = 0
        self.field = field
        self.gen_index = gen_index or {}

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def take(self, tok=None):
        cur = self.peek()
        if cur is None or (tok is not None and cur != tok):
            raise FormatError(f"expected {tok!r}, found {cur!r}")
        self.i += 1
        return cur

    # -- value algebra: scalars, polynomials, tensor pairs --------------------

    def _as_poly(self, v):
        if isinstance(v, NCPoly):
            return v
        return NCPoly.const(self.field.coerce(v) if not hasattr(v, "terms")
                            else v)

    def _mul(self, a, b):
        if isinstance(a, dict) or isinstance(b, dict):
            raise FormatError("tensor factors cannot be multiplied again")
        if isinstance(a, NCPoly) and isinstance(b, NCPoly):
            return a.free_mul(b)
        if isinstance(a, NCPoly):
            return a.scale(self.field.coerce(b))
        if isinstance(b, NCPoly):
            return b.scale(self.field.coerce(a))
        return a * b

    def _div(self, a, b):
        if isinstance(b, NCPoly):
            raise FormatError("cannot divide by a polynomial")
        b = self.field.coerce(b)
        inv = self.field.one / b
        if isinstance(a, NCPoly):
            return a.scale(inv)
        return a * inv

    def _add(self, a, b, sign=1):
        if isinstance(a, dict) or isinstance(b, dict):
            a = a if isinstance(a, dict) else self._tensorize(a)
            b = b if isinstance(b, dict) else self._tensorize(b)
            out = dict(a)
            t2_add_into(out, b, self.field.one if sign > 0 else -self.field.one)
            return out
        if isinstance(a, NCPoly) or isinstance(b, NCPoly):
            a, b = self._as_poly(a), self._as_poly(b)
            return a + b if sign > 0 else a - b
        return a + b if sign > 0 else a - b

    def _tensorize(self, v):
        p = self._as_poly(v)
        out = {}
        for w, c in p.terms.items():
            t2_add_into(out, {(w, ()): c})
        return out

    def parse_sum(self):
        sign = 1
        if self.peek() == "-":
            self.take()
            sign = -1
        acc = self.parse_tensor()
        if sign < 0:
            acc = self._mul(acc, -self.field.one) if not isinstance(acc, dict) \
                else {k: -v for k, v in acc.items()}
        while self.peek() in ("+", "-"):
            op = self.take()
            nxt = self.parse_tensor()
            acc = self._add(acc, nxt, 1 if op == "+" else -1)
        return acc

    def parse_tensor(self):
        left = self.parse_product()
        if self.peek() != "@":
            return left
        self.take("@")
        right = self.parse_product()
        lp, rp = self._as_poly(left), self._as_poly(right)
        out = {}
        for w1, c1 in lp.terms.items():
            for w2, c2 in rp.terms.items():
                t2_add_into(out, {(w1, w2): c1 * c2})
        return out

    def parse_product(self):
        acc = self.parse_power()
        while self.peek() in ("*", "/"):
            op = self.take()
            nxt = self.parse_power()
            acc = self._mul(acc, nxt) if op == "*" else self._div(acc, nxt)
        return acc

    def parse_power(self):
        base = self.parse_atom()
        if self.peek() != "^":
            return base
        self.take("^")
        neg = False
        if self.peek() == "-":
            self.take()
            neg = True
        exp = int(self.take())
        if isinstance(base, NCPoly):
            if neg:
                raise FormatError("negative powers of algebra elements")
            out = NCPoly.const(self.field.one)
            for _ in range(exp):
                out = out.free_mul(base)
            return out
        if neg:
            base = self.field.one / self.field.coerce(base)
        out = self.field.one
        for _ in range(exp):
            out = out * base
        return out

    def parse_atom(self):
        tok = self.peek()
        if tok == "(":
            self.take()
            v = self.parse_sum()
            self.take(")")
            return v
        if tok == "-":
            self.take()
            v = self.parse_atom()
            return self._mul(v, -self.field.one)
        if tok is None:
            raise FormatError("unexpected end of expression")
        self.take()
        if tok.isdigit():
            return self.field.coerce(Fraction(int(tok)))
        if tok == "q" and hasattr(self.field, "q"):
            return self.field.q
        if tok == "zeta" and hasattr(self.field, "zeta"):
            return self.field.zeta
        if tok in self.gen_index:
            return NCPoly.term((self.gen_index[tok],), self.field.one)
        raise FormatError(f"unknown symbol {tok!r}")


def parse_scalar(text, field):
    p = _Parser(_tokenize(text), field)
    v = p.parse_sum()
    if p.peek() is not None:
        raise FormatError(f"trailing input {p.peek()!r}")
    if isinstance(v, (NCPoly, dict)):
        raise FormatError("expected a scalar")
    return field.coerce(v)


def parse_ncpoly(text, sys):
    gidx = {n: i for i, n in enumerate(sys.generators)}
    p = _Parser(_tokenize(text), sys.field, gidx)
    v = p.parse_sum()
    if p.peek() is not None:
        raise FormatError(f"trailing input {p.peek()!r}")
    if isinstance(v, dict):
        raise FormatError("expected a polynomial, found a tensor")
    if not isinstance(v, NCPoly):
        v = NCPoly.const(sys.field.coerce(v))
    return v


def parse_tensor2(text, sys):
    gidx = {n: i for i, n in enumerate(sys.generators)}
    p = _Parser(_tokenize(text), sys.field, gidx)
    v = p.parse_sum()
    if p.peek() is not None:
        raise FormatError(f"trailing input {p.peek()!r}")
    if isinstance(v, NCPoly):
        out = {}
        for w, c in v.terms.items():
            t2_add_into(out, {(w, ()): c})
        return out
    if not isinstance(v, dict):
        out = {}
        t2_add_into(out, {((), ()): sys.field.coerce(v)})
        return out
    return v


# ---------------------------------------------------------------------------
# printers
# ---------------------------------------------------------------------------

def _scalar_str(c, field):
    s = field.to_str(c)
    return s


def _coeff_prefix(c, field):
    s = _scalar_str(c, field)
    if s == "1":
        return ""
    if s == "-1":
        return "-"
    if any(op in s[1:] for op in "+-") or "/" in s:
        return f"({s})*"
    return f"{s}*"


def word_to_str(w, sys):
    if not w:
        return "1"
    out = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        name = sys.generators[w[i]]
        out.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return "*".join(out)


def ncpoly_to_str(p, sys):
    if p.is_zero():
        return "0"
    bits = []
    for w, c in p.sorted_terms():
        pref = _coeff_prefix(c, sys.field)
        body = word_to_str(w, sys)
        if body == "1":
            bits.append(_scalar_str(c, sys.field))
        else:
            bits.append(pref + body)
    out = bits[0]
    for b in bits[1:]:
        out += ("" if b.startswith("-") else "+") + b
    return out


def tensor2_to_str(t, sys):
    if not t:
        return "0"
    bits = []
    for (w1, w2), c in sorted(t.items()):
        pref = _coeff_prefix(c, sys.field)
        bits.append(f"{pref}{word_to_str(w1, sys)} @ {word_to_str(w2, sys)}")
    out = bits[0]
    for b in bits[1:]:
        out += ("" if b.startswith("-") else "+") + b
    return out


# ---------------------------------------------------------------------------
# presentation files
# ---------------------------------------------------------------------------

def serialize_presentation(h: HopfPresentation) -> str:
    sys = h.sys
    lines = ["# nakayama presentation v1"]
    if h.name:
        lines.append(f"name {h.name}")
    lines.append(f"field {sys.field.name}")
    lines.append("generators " + " ".join(sys.generators))
    lines.append(f"option degree-bound {sys.cert_degree}")
    for rule in sys.rules:
        lines.append(
            f"rule {word_to_str(rule.lhs, sys)} -> {ncpoly_to_str(rule.rhs, sys)}")
    for i, name in enumerate(sys.generators):
        lines.append(f"counit {name} = {_scalar_str(h.counit[i], sys.field)}")
        lines.append(f"coproduct {name} = {tensor2_to_str(h.coproduct[i], sys)}")
        if h.antipode is not None:
            lines.append(
                f"antipode {name} = {ncpoly_to_str(h.antipode[i], sys)}")
        if h.antipode_inverse is not None:
            lines.append(
                "antipode-inverse "
                f"{name} = {ncpoly_to_str(h.antipode_inverse[i], sys)}")
    return "\n".join(lines) + "\n"


def parse_presentation(text: str) -> HopfPresentation:
    field = None
    gens = None
    name = ""
    bound = 6
    rules = []
    counit = {}
    coproduct = {}
    antipode = {}
    antipode_inv = {}
    sys = None

    def need_sys():
        if sys is None:
            raise FormatError("generators/field must precede structure lines")
        return sys

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            name = rest
        elif head == "field":
            field = field_by_name(rest)
        elif head == "generators":
            if field is None:
                raise FormatError("field must precede generators")
            gens = tuple(rest.split())
            sys = RewriteSystem(gens, field)
        elif head == "option":
            key, _, val = rest.partition(" ")
            if key == "degree-bound":
                bound = int(val)
        elif head == "rule":
            lhs_s, _, rhs_s = rest.partition("->")
            lhs = parse_ncpoly(lhs_s.strip(), need_sys())
            if len(lhs.terms) != 1:
                raise FormatError("rule lhs must be a single monomial")
            (w, c), = lhs.terms.items()
            rhs = parse_ncpoly(rhs_s.strip(), need_sys())
            if c != field.one:
                rhs = rhs.scale(field.one / c)
            rules.append(RewriteRule(w, rhs))
        elif head in ("counit", "coproduct", "antipode", "antipode-inverse"):
            gen, _, expr = rest.partition("=")
            gen = gen.strip()
            expr = expr.strip()
            if gen not in gens:
                raise FormatError(f"unknown generator {gen!r}")
            if head == "counit":
                counit[gen] = parse_scalar(expr, field)
            elif head == "coproduct":
                coproduct[gen] = parse_tensor2(expr, need_sys())
            elif head == "antipode":
                antipode[gen] = parse_ncpoly(expr, need_sys())
            else:
                antipode_inv[gen] = parse_ncpoly(expr, need_sys())
        else:
            raise FormatError(f"unknown declaration {head!r}")

    if field is None or gens is None:
        raise FormatError("missing field or generators")
    missing = [g for g in gens if g not in counit or g not in coproduct]
    if missing:
        raise FormatError(f"missing counit/coproduct for {missing}")
    base = RewriteSystem(gens, field, rules)
    base = complete(base, bound)
    has_s = len(antipode) == len(gens)
    has_si = len(antipode_inv) == len(gens)
    return HopfPresentation(
        base,
        [coproduct[g] for g in gens],
        [counit[g] for g in gens],
        [antipode[g] for g in gens] if has_s else None,
        [antipode_inv[g] for g in gens] if has_si else None,
        name=name,
        defining_rules=rules,
    )


# ---------------------------------------------------------------------------
# structure-tensor files
# ---------------------------------------------------------------------------

def serialize_fd(h) -> str:
    f = h.field
    lines = ["# nakayama fd-hopf v1", f"name {h.name}", f"field {f.name}",
             f"dimension {h.dimension}", "names " + " ".join(h.names)]
    if h.generators is not None:
        lines.append("generators " + " ".join(str(i) for i in h.generators))

    def vec(v):
        return " ".join(f"{k}:{_scalar_str(c, f)}" for k, c in sorted(v.items()))

    lines.append("unit = " + vec(h.unit))
    lines.append("counit = " + " ".join(_scalar_str(c, f) for c in h.counit))
    for i in range(h.dimension):
        for j in range(h.dimension):
            if h.mult[i][j]:
                lines.append(f"mult {i} {j} = " + vec(h.mult[i][j]))
    for i in range(h.dimension):
        body = " ".join(f"{j},{k}:{_scalar_str(c, f)}"
                        for (j, k, c) in sorted(h.coproduct[i]))
        lines.append(f"coproduct {i} = {body}")
    for i in range(h.dimension):
        if h.antipode[i]:
            lines.append(f"antipode {i} = " + vec(h.antipode[i]))
    return "\n".join(lines) + "\n"


def parse_fd(text: str):
    from .fd import FDHopf

    field = None
    names = None
    dim = None
    name = ""
    generators = None
    unit = {}
    counit = None
    mult = None
    coproduct = None
    antipode = None

    def pvec(s):
        out = {}
        for part in s.split():
            k, _, c = part.partition(":")
            out[int(k)] = parse_scalar(c, field)
        return out

    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "name":
            name = rest
        elif head == "field":
            field = field_by_name(rest)
        elif head == "dimension":
            dim = int(rest)
            mult = [[dict() for _ in range(dim)] for _ in range(dim)]
            coproduct = [[] for _ in range(dim)]
            antipode = [dict() for _ in range(dim)]
        elif head == "names":
            names = rest.split()
        elif head == "generators":
            generators = [int(x) for x in rest.split()]
        elif head == "unit":
            unit = pvec(rest.partition("=")[2].strip())
        elif head == "counit":
            counit = [parse_scalar(x, field)
                      for x in rest.partition("=")[2].split()]
        elif head == "mult":
            ij, _, body = rest.partition("=")
            i, j = (int(x) for x in ij.split())
            mult[i][j] = pvec(body.strip())
        elif head == "coproduct":
            istr, _, body = rest.partition("=")
            i = int(istr)
            triples = []
            for part in body.split():
                jk, _, c = part.partition(":")
                j, k = (int(x) for x in jk.split(","))
                triples.append((j, k, parse_scalar(c, field)))
            coproduct[i] = triples
        elif head == "antipode":
            istr, _, body = rest.partition("=")
            antipode[int(istr)] = pvec(body.strip())
        else:
            raise FormatError(f"unknown declaration {head!r}")
    if None in (field, names, dim, counit):
        raise FormatError("incomplete structure-tensor file")
    return FDHopf(field, names, mult, unit, coproduct, counit, antipode,
                  generators, name)


# ---------------------------------------------------------------------------
# chain-complex files
# ---------------------------------------------------------------------------

def parse_complex(text: str, sys):
    from .complexes import FreeComplex

    ranks = None
    entries = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, _, rest = line.partition(" ")
        rest = rest.strip()
        if head == "field":
            if rest != sys.field.name:
                raise FormatError("field mismatch")
        elif head == "generators":
            if tuple(rest.split()) != sys.generators:
                raise FormatError("generator mismatch")
        elif head == "ranks":
            ranks = [int(x) for x in rest.split()]
        elif head == "d":
            spec, _, body = rest.partition("=")
            i, r, c = (int(x) for x in spec.split())
            entries.append((i, r, c, parse_ncpoly(body.strip(), sys)))
        else:
            raise FormatError(f"unknown declaration {head!r}")
    if ranks is None:
        raise FormatError("missing ranks")
    diffs = [
        [[NCPoly.zero() for _ in range(ranks[i - 1])] for _ in range(ranks[i])]
        for i in range(1, len(ranks))
    ]
    for (i, r, c, p) in entries:
        diffs[i - 1][r][c] = p
    return FreeComplex(sys, ranks, diffs)
