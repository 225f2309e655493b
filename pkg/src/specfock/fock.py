"""The level-one q-Fock space with integer Laurent coefficients.

Vectors are finitely supported sums of partitions. The operators ``f_i`` and
``e_i`` add or remove a single i-node, weighted by ``q`` to a node-count
exponent from :func:`specfock.partitions.n_counts`. Two conventions exist:

``right``
    ``f_i`` uses ``q^{N_r}``, ``e_i`` uses ``q^{-N_l}``.
``left``
    ``f_i`` uses ``q^{-N_l}``, ``e_i`` uses ``q^{N_r}``.

The rescaling ``phi`` (multiply ``|lam>`` by ``q^{weight}``) conjugates one
convention into the other.
"""
from __future__ import annotations

import json
import re
from typing import Iterable, Iterator, Literal, Mapping

from .laurent import ONE, ZERO, LaurentPoly, balanced_factorial, parse_poly
from .partitions import (
    Partition,
    addable_nodes,
    core_and_weight,
    format_partition,
    n_counts,
    parse_partition,
    removable_nodes,
    residue,
)

Convention = Literal["right", "left"]

__all__ = [
    "FockVector",
    "apply_f",
    "apply_e",
    "divided_power_f",
    "phi_rescale",
    "apply_ops",
    "parse_ops",
]


def _sort_key(lam: Partition):
    # smaller sizes first; within a size, most dominant first
    return (lam.size, tuple(-x for x in lam), len(lam))


class FockVector:
    """Finitely supported map ``Partition -> LaurentPoly`` with zero terms dropped."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, LaurentPoly] | Iterable[tuple[Partition, LaurentPoly]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Partition, LaurentPoly] = {}
        for lam, c in items:
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            if isinstance(c, int):
                c = LaurentPoly({0: c})
            acc[lam] = acc.get(lam, ZERO) + c
        self._terms = {k: v for k, v in acc.items() if not v.is_zero()}

    @classmethod
    def basis(cls, lam, coeff: LaurentPoly = ONE) -> "FockVector":
        return cls({Partition(lam): coeff})

    def __getitem__(self, lam) -> LaurentPoly:
        return self._terms.get(Partition(lam), ZERO)

    def __iter__(self) -> Iterator[Partition]:
        return iter(sorted(self._terms, key=_sort_key))

    def __len__(self) -> int:
        return len(self._terms)

    def items(self) -> list[tuple[Partition, LaurentPoly]]:
        return [(lam, self._terms[lam]) for lam in self]

    def support(self) -> list[Partition]:
        return list(self)

    def is_zero(self) -> bool:
        return not self._terms

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(list(self._terms.items()) + list(other._terms.items()))

    def __neg__(self) -> "FockVector":
        return FockVector({k: -v for k, v in self._terms.items()})

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-other)

    def scale(self, c: LaurentPoly | int) -> "FockVector":
        if isinstance(c, int):
            c = LaurentPoly({0: c})
        return FockVector({k: v * c for k, v in self._terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def map_coeffs(self, fn) -> "FockVector":
        return FockVector({k: fn(v) for k, v in self._terms.items()})

    def truncate(self, max_rows: int) -> "FockVector":
        """Drop every partition with more than ``max_rows`` rows."""
        return FockVector({k: v for k, v in self._terms.items() if len(k) <= max_rows})

    def __eq__(self, other) -> bool:
        return isinstance(other, FockVector) and self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        return f"FockVector({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            label = "(" + (format_partition(lam) or "∅") + ")"
            parts.append(label if c == ONE else f"({c}){label}")
        return " + ".join(parts)

    # -- serialization ---------------------------------------------------
    def to_records(self) -> list[dict[str, str]]:
        return [{"partition": format_partition(lam), "coeff": str(c)} for lam, c in self.items()]

    def to_json(self) -> str:
        return json.dumps(self.to_records(), indent=2)

    @classmethod
    def from_records(cls, records: Iterable[Mapping[str, str]]) -> "FockVector":
        return cls([(parse_partition(r["partition"]), parse_poly(r["coeff"])) for r in records])

    @classmethod
    def from_json(cls, text: str) -> "FockVector":
        return cls.from_records(json.loads(text))


def _check(i: int, l: int, convention: str) -> None:
    if l < 2:
        raise ValueError("l must be >= 2")
    if not 0 <= i < l:
        raise ValueError(f"residue {i} out of range for l={l}")
    if convention not in ("right", "left"):
        raise ValueError(f"unknown convention {convention!r}")


def add_exponent(small: Partition, big: Partition, l: int, convention: Convention) -> int:
    n_r, n_l, _ = n_counts(big, small, l)
    return n_r if convention == "right" else -n_l


def remove_exponent(big: Partition, small: Partition, l: int, convention: Convention) -> int:
    n_r, n_l, _ = n_counts(big, small, l)
    return -n_l if convention == "right" else n_r


def apply_f(v: FockVector, i: int, l: int, convention: Convention = "right") -> FockVector:
    _check(i, l, convention)
    out: list[tuple[Partition, LaurentPoly]] = []
    for lam, c in v.items():
        for node in addable_nodes(lam):
            if residue(node, l) != i:
                continue
            mu = lam.add_node(node.row)
            out.append((mu, c.shift(add_exponent(lam, mu, l, convention))))
    return FockVector(out)


def apply_e(v: FockVector, i: int, l: int, convention: Convention = "right") -> FockVector:
    _check(i, l, convention)
    out: list[tuple[Partition, LaurentPoly]] = []
    for mu, c in v.items():
        for node in removable_nodes(mu):
            if residue(node, l) != i:
                continue
            lam = mu.remove_node(node.row)
            out.append((lam, c.shift(remove_exponent(mu, lam, l, convention))))
    return FockVector(out)


def divided_power_f(v: FockVector, i: int, k: int, l: int, convention: Convention = "right") -> FockVector:
    """``f_i^k / [k]!`` with the balanced factorial; the division must be exact.

    The unbalanced factorial does not divide ``f_i^k`` in general
    (``f_1^2 (1)`` at l=2 is ``(q^-1 + q)(2,1)``).
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    w = v
    for _ in range(k):
        w = apply_f(w, i, l, convention)
    if k == 1:
        return w
    # exact_div raises ArithmeticError on a remainder, which signals a convention bug
    d = balanced_factorial(k)
    return w.map_coeffs(lambda c: c.exact_div(d))


def phi_rescale(v: FockVector, l: int, inverse: bool = False) -> FockVector:
    sign = -1 if inverse else 1
    return FockVector({lam: c.shift(sign * core_and_weight(lam, l)[1]) for lam, c in v.items()})


_OP = re.compile(r"^([fe])(\d+)(?:\^\((\d+)\))?$")


def parse_ops(text: str) -> list[tuple[str, int, int]]:
    """Parse ``"f0 f3^(2) e1"`` into ``[(kind, i, k), ...]`` in written order."""
    ops = []
    for tok in text.split():
        m = _OP.match(tok)
        if not m:
            raise ValueError(f"malformed operator {tok!r}; expected f<i>, e<i> or f<i>^(<k>)")
        kind, i, k = m.group(1), int(m.group(2)), int(m.group(3) or 1)
        if kind == "e" and k != 1:
            raise ValueError("divided powers are only provided for f")
        ops.append((kind, i, k))
    return ops


def apply_ops(v: FockVector, ops: str, l: int, convention: Convention = "right") -> FockVector:
    """Apply a written operator word; the rightmost operator acts first."""
    for kind, i, k in reversed(parse_ops(ops)):
        if kind == "f":
            v = divided_power_f(v, i, k, l, convention)
        else:
            v = apply_e(v, i, l, convention)
    return v
