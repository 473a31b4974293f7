"""Exact computer algebra for Hopf algebras: integrals, winding and Nakayama
automorphisms, and twisted Hochschild (co)homology, over Q, Q(q) and
cyclotomic fields."""

from .scalars import QQ, QQ_q, CyclotomicField, RatFunc, Cyclo, specialize
from .rewrite import NCPoly, RewriteRule, RewriteSystem, complete, quotient

__all__ = [
    "QQ", "QQ_q", "CyclotomicField", "RatFunc", "Cyclo", "specialize",
    "NCPoly", "RewriteRule", "RewriteSystem", "complete", "quotient",
]
