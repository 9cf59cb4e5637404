"""Monomial orders.

An order is compiled against a ring into a key function on exponent tuples:
``a > b`` in the order exactly when ``key(a) > key(b)`` as Python tuples.  All
supported keys are injective, so sorting by key is a total order.
"""

from __future__ import annotations

from dataclasses import dataclass

KINDS = ("lex", "grevlex", "wlex", "elim")


@dataclass(frozen=True)
class MonomialOrder:
    """``kind`` is one of

    * ``"lex"``: lexicographic on the variable ranking;
    * ``"grevlex"``: weighted degree, then reverse lexicographic;
    * ``"wlex"``: weighted degree, then lexicographic (weighted-then-lex);
    * ``"elim"``: weighted degree in ``block`` first, then ``grevlex``.
      Any polynomial whose leading monomial avoids ``block`` avoids it entirely.

    ``ranking`` lists variable names from largest to smallest; ``None`` means
    the ring's own variable order.
    """

    kind: str = "grevlex"
    ranking: tuple[str, ...] | None = None
    block: tuple[str, ...] = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown monomial order kind {self.kind!r}")
        if self.ranking is not None:
            object.__setattr__(self, "ranking", tuple(self.ranking))
            if len(set(self.ranking)) != len(self.ranking):
                raise ValueError("ranking repeats a variable")
        object.__setattr__(self, "block", tuple(self.block))
        if self.kind == "elim" and not self.block:
            raise ValueError("elimination order needs a nonempty block")

    def __str__(self):
        s = self.kind
        if self.ranking is not None:
            s += "(" + ">".join(self.ranking) + ")"
        if self.block:
            s += "[" + ",".join(self.block) + "]"
        return s


def lex(*ranking: str) -> MonomialOrder:
    return MonomialOrder("lex", ranking or None)


def grevlex(*ranking: str) -> MonomialOrder:
    return MonomialOrder("grevlex", ranking or None)


def wlex(*ranking: str) -> MonomialOrder:
    return MonomialOrder("wlex", ranking or None)


def elim(block, ranking=None) -> MonomialOrder:
    return MonomialOrder("elim", ranking, tuple(block))


def compile_key(order: MonomialOrder, names, weights):
    """Return ``key(exponents) -> tuple`` for ``order`` on a ring with ``names``."""
    index = {v: i for i, v in enumerate(names)}
    if order.ranking is None:
        rank = tuple(range(len(names)))
    else:
        if sorted(order.ranking) != sorted(names):
            raise ValueError("order ranking must be a permutation of the ring variables")
        rank = tuple(index[v] for v in order.ranking)
    w = tuple(weights)
    rev = tuple(reversed(rank))
    kind = order.kind

    if kind == "lex":
        if rank == tuple(range(len(names))):
            return lambda e: e
        return lambda e: tuple([e[i] for i in rank])
    if kind == "grevlex":
        def key(e):
            return (sum([a * b for a, b in zip(e, w)]),) + tuple([-e[i] for i in rev])
        return key
    if kind == "wlex":
        def key(e):
            return (sum([a * b for a, b in zip(e, w)]),) + tuple([e[i] for i in rank])
        return key
    missing = [v for v in order.block if v not in index]
    if missing:
        raise ValueError(f"block variables not in ring: {missing}")
    blk = tuple((index[v], w[index[v]]) for v in order.block)

    def key(e):
        return (sum([e[i] * wi for i, wi in blk]), sum([a * b for a, b in zip(e, w)])) + tuple(
            [-e[i] for i in rev]
        )

    return key
