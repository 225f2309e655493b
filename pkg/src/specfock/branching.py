"""Closed-form branching scalars, their cyclotomic valuations, and the sweeps that compare them with node counts."""
from __future__ import annotations

from dataclasses import dataclass

from .laurent import GaussRatio, cyclo_valuation, ratio_valuation_by_division
from .partitions import (
    Node,
    Partition,
    Tableau,
    addable_nodes,
    core_and_weight,
    hook_length,
    n_counts,
    partitions_of,
    removable_nodes,
    residue,
)

__all__ = [
    "gram_branch_scalar",
    "restriction_valuation",
    "hook_product",
    "gamma_of_tableau",
    "gamma_of_shape",
    "induction_scalar",
    "induction_left_count",
    "duality_valuation",
    "induced_norm_closed_form",
    "SweepRow",
    "restriction_sweep",
    "induction_sweep",
    "duality_sweep",
    "weight_identity_sweep",
]


def _removable_in_row(lam: Partition, r: int) -> Node:
    for node in removable_nodes(lam):
        if node.row == r:
            return node
    raise ValueError(f"row {r} of {lam!r} has no removable node")


def gram_branch_scalar(lam: Partition, r: int) -> GaussRatio:
    """Ratio of column hooks above the removable node ``(r, c)``: prod [H_ac] / [H_ac - 1] over a < r."""
    lam = Partition(lam)
    node = _removable_in_row(lam, r)
    hooks = [hook_length(lam, Node(a, node.col)) for a in range(1, r)]
    # H_ac >= 2 for a < r since (r, c) sits below (a, c)
    return GaussRatio(1, 0, tuple(hooks), tuple(h - 1 for h in hooks))


def restriction_valuation(lam: Partition, r: int, l: int) -> int:
    return cyclo_valuation(gram_branch_scalar(lam, r), l)


def hook_product(lam: Partition) -> GaussRatio:
    lam = Partition(lam)
    return GaussRatio(1, 0, tuple(hook_length(lam, x) for x in lam.nodes()), ())


def _row_hook_quotient(shape: Partition, node: Node) -> GaussRatio:
    # hooks strictly left of ``node`` in its row, in ``shape``; each is >= 2
    hooks = [hook_length(shape, Node(node.row, j)) for j in range(1, node.col)]
    return GaussRatio(1, 0, tuple(hooks), tuple(h - 1 for h in hooks))


def gamma_of_tableau(t: Tableau) -> GaussRatio:
    """Telescoped product of row hook quotients along the chain of shapes of ``t``."""
    if not t.is_standard():
        raise ValueError(f"{t!r} is not standard")
    out = GaussRatio.one()
    for m in range(2, t.n + 1):
        shape = t.restrict(m).shape
        out = out * _row_hook_quotient(shape, t.position(m))
    return out


def gamma_of_shape(lam: Partition) -> GaussRatio:
    """``prod_i prod_{j <= lam_i} [j]``, the value of :func:`gamma_of_tableau` on the row reading tableau."""
    return GaussRatio(1, 0, tuple(j for part in Partition(lam) for j in range(1, part + 1)), ())


def _added_node(lam: Partition, i: int) -> Node:
    for node in addable_nodes(lam):
        if node.row == i:
            return node
    raise ValueError(f"cannot add a node to row {i} of {lam!r}")


def induction_scalar(lam: Partition, i: int, l: int) -> tuple[GaussRatio, int]:
    """Induction scalar for adding a node to row ``i`` and its valuation at ``l``.

    The ratio is prod [h_ij - 1] / [h_ij] for j = 1..lam_i, where h_ij are
    the row-i hooks of the enlarged shape.
    """
    lam = Partition(lam)
    _added_node(lam, i)
    big = lam.add_node(i)
    hooks = [hook_length(big, Node(i, j)) for j in range(1, lam.part(i) + 1)]
    ratio = GaussRatio(1, 0, tuple(h - 1 for h in hooks), tuple(hooks))
    return ratio, cyclo_valuation(ratio, l)


def induction_left_count(lam: Partition, i: int, l: int) -> int:
    """Removable minus indent nodes of the added node's residue, strictly below its row."""
    lam = Partition(lam)
    tau = _added_node(lam, i)
    k = residue(tau, l)
    rem = sum(1 for x in removable_nodes(lam) if x.row > tau.row and residue(x, l) == k)
    ind = sum(1 for x in addable_nodes(lam) if x.row > tau.row and residue(x, l) == k)
    return rem - ind


def duality_valuation(lam: Partition, l: int) -> int:
    return cyclo_valuation(hook_product(lam), l)


# -- sweeps ---------------------------------------------------------------


@dataclass(frozen=True)
class SweepRow:
    check: str
    partition: Partition
    row: int
    l: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def restriction_rows(lam: Partition, l: int) -> list[SweepRow]:
    out = []
    for node in removable_nodes(lam):
        ratio = gram_branch_scalar(lam, node.row)
        val = cyclo_valuation(ratio, l)
        # second route: divide the polynomials; must agree with counting
        if val != ratio_valuation_by_division(ratio, l):
            raise AssertionError(f"valuation routes disagree on {lam!r} row {node.row} l={l}")
        n_r = n_counts(lam, lam.remove_node(node.row), l)[0]
        out.append(SweepRow("thm1", lam, node.row, l, val, n_r))
    return out


def induction_rows(lam: Partition, l: int) -> list[SweepRow]:
    out = []
    for node in addable_nodes(lam):
        _, val = induction_scalar(lam, node.row, l)
        out.append(SweepRow("thm3", lam, node.row, l, val, induction_left_count(lam, node.row, l)))
    return out


def duality_rows(lam: Partition, l: int) -> list[SweepRow]:
    return [SweepRow("duality", lam, 0, l, duality_valuation(lam, l), core_and_weight(lam, l)[1])]


def _sweep(fn, max_n: int, ls) -> list[SweepRow]:
    rows: list[SweepRow] = []
    for n in range(max_n + 1):
        for lam in partitions_of(n):
            for l in ls:
                rows.extend(fn(lam, l))
    return rows


def restriction_sweep(max_n: int = 10, ls=range(2, 9)) -> list[SweepRow]:
    return _sweep(restriction_rows, max_n, ls)


def induction_sweep(max_n: int = 10, ls=range(2, 9)) -> list[SweepRow]:
    return _sweep(induction_rows, max_n, ls)


def duality_sweep(max_n: int = 14, ls=range(2, 8)) -> list[SweepRow]:
    return _sweep(duality_rows, max_n, ls)


def induced_norm_closed_form(lam: Partition, i: int) -> GaussRatio:
    """``gamma_{mu'} gamma_lam prod_{j <= lam_i} [h_ij - 1]/[h_ij]`` with mu = lam plus a node in row i."""
    lam = Partition(lam)
    ratio, _ = induction_scalar(lam, i, 2)
    mu = lam.add_node(i)
    return gamma_of_shape(mu.conjugate()) * gamma_of_shape(lam) * ratio


def weight_identity_rows(lam: Partition, l: int) -> list[SweepRow]:
    """``-w(lam) = -w(mu) + N_l + N_r`` for each mu = lam plus one node; ``row`` is the added row."""
    w_lam = core_and_weight(lam, l)[1]
    out = []
    for node in addable_nodes(lam):
        mu = lam.add_node(node.row)
        n_r, n_l, _ = n_counts(mu, lam, l)
        out.append(SweepRow("eq13", lam, node.row, l, -w_lam, -core_and_weight(mu, l)[1] + n_l + n_r))
    return out


def weight_identity_sweep(max_n: int = 12, ls=range(2, 9)) -> list[SweepRow]:
    return _sweep(weight_identity_rows, max_n, ls)
