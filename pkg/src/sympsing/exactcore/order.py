from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class MonomialOrder:
    """A term order on exponent tuples.

    kind is one of "degrevlex", "lex" or "weighted" (weighted degree, ties
    broken by reverse lexicographic).  ``perm`` optionally reorders the
    variables before comparison; position 0 of the permuted tuple is the
    largest variable.
    """

    kind: str = "degrevlex"
    weights: tuple[int, ...] | None = None
    perm: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.kind not in ("degrevlex", "lex", "weighted"):
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.kind == "weighted" and not self.weights:
            raise ValueError("weighted order needs weights")
        if self.weights and any(w <= 0 for w in self.weights):
            raise ValueError("order weights must be positive")

    def key(self, exp):
        if self.perm is not None:
            exp = tuple(exp[i] for i in self.perm)
        if self.kind == "lex":
            return tuple(exp)
        rev = tuple(-e for e in reversed(exp))
        if self.kind == "degrevlex":
            return (sum(exp),) + rev
        w = self.weights if self.perm is None else tuple(self.weights[i] for i in self.perm)
        return (sum(a * b for a, b in zip(w, exp)),) + rev

    def degree(self, exp) -> int:
        """Degree used for sugar bookkeeping."""
        if self.kind == "weighted":
            return sum(a * b for a, b in zip(self.weights, exp))
        return sum(exp)


DEGREVLEX = MonomialOrder("degrevlex")
LEX = MonomialOrder("lex")
