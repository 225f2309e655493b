"""Young-diagram combinatorics: partitions, nodes, tableaux, residues, hooks, cores."""
from __future__ import annotations

from functools import lru_cache
from itertools import permutations
from typing import Iterator, NamedTuple, Sequence

__all__ = [
    "Partition",
    "Node",
    "Tableau",
    "partitions_of",
    "conjugate",
    "hook_length",
    "residue",
    "addable_nodes",
    "removable_nodes",
    "node_lists",
    "n_counts",
    "core_and_weight",
    "is_l_regular",
    "dominates",
    "dominance_refining_order",
    "contains",
    "p_digits",
    "standard_tableaux",
    "row_standard_tableaux",
    "parse_partition",
    "format_partition",
    "parse_node",
    "format_node",
]


class Partition(tuple):
    """Weakly decreasing tuple of positive ints.  ``Partition()`` is the empty partition."""

    def __new__(cls, parts: Sequence[int] = ()):
        parts = tuple(int(x) for x in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(x <= 0 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    def part(self, row: int) -> int:
        """Length of row ``row`` (1-based); 0 past the last row."""
        return self[row - 1] if 1 <= row <= len(self) else 0

    def nodes(self) -> Iterator["Node"]:
        for r, length in enumerate(self, start=1):
            for c in range(1, length + 1):
                yield Node(r, c)

    def __contains__(self, node) -> bool:
        if isinstance(node, Node):
            return node.row >= 1 and 1 <= node.col <= self.part(node.row)
        return super().__contains__(node)

    def add_node(self, row: int) -> "Partition":
        parts = list(self) + [0]
        parts[row - 1] += 1
        return Partition(parts)

    def remove_node(self, row: int) -> "Partition":
        parts = list(self)
        parts[row - 1] -= 1
        return Partition(parts)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self):
        return f"Partition({format_partition(self) or '∅'})"


class Node(NamedTuple):
    row: int
    col: int

    def content(self) -> int:
        return self.col - self.row


def parse_partition(text: str) -> Partition:
    text = text.strip().strip("()")
    if not text:
        return Partition()
    try:
        return Partition(int(x) for x in text.split(","))
    except ValueError as exc:
        raise ValueError(f"malformed partition {text!r}: {exc}") from None


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(x) for x in lam)


def parse_node(text: str) -> Node:
    body = text.strip()
    if not (body.startswith("(") and body.endswith(")")):
        raise ValueError(f"malformed node {text!r}")
    r, c = (int(x) for x in body[1:-1].split(","))
    return Node(r, c)


def format_node(node: Node) -> str:
    return f"({node.row},{node.col})"


@lru_cache(maxsize=None)
def _partitions(n: int, maxpart: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for k in range(min(n, maxpart), 0, -1):
        for rest in _partitions(n - k, k):
            out.append(Partition((k,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _partitions(n, n)


def conjugate(lam: Sequence[int]) -> Partition:
    lam = tuple(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for x in lam if x >= c) for c in range(1, lam[0] + 1))


def hook_length(lam: Partition, node: Node) -> int:
    if node not in lam:
        raise ValueError(f"node {node} is not in {lam!r}")
    arm = lam.part(node.row) - node.col
    leg = conjugate(lam).part(node.col) - node.row
    return arm + leg + 1


def residue(node: Node, l: int) -> int:
    if l < 2:
        raise ValueError("l must be >= 2")
    return (node.col - node.row) % l


def addable_nodes(lam: Partition) -> list[Node]:
    """Indent nodes, ordered by increasing row."""
    out = []
    for r in range(1, len(lam) + 2):
        c = lam.part(r) + 1
        if r == 1 or lam.part(r - 1) >= c:
            out.append(Node(r, c))
    return out


def removable_nodes(lam: Partition) -> list[Node]:
    return [Node(r, lam.part(r)) for r in range(1, len(lam) + 1) if lam.part(r) > lam.part(r + 1)]


def node_lists(lam: Partition, i: int, l: int) -> tuple[list[Node], list[Node]]:
    """Addable and removable i-nodes of ``lam``."""
    if not 0 <= i < l:
        raise ValueError(f"residue {i} out of range for l={l}")
    add = [x for x in addable_nodes(lam) if residue(x, l) == i]
    rem = [x for x in removable_nodes(lam) if residue(x, l) == i]
    return add, rem


def single_node_difference(big: Partition, small: Partition) -> Node:
    """The node ``big \\ small``; raises unless the difference is exactly one node."""
    if big.size != small.size + 1 or len(big) < len(small):
        raise ValueError(f"{big!r} \\ {small!r} is not a single node")
    diff = [r for r in range(1, len(big) + 1) if big.part(r) != small.part(r)]
    if len(diff) != 1 or big.part(diff[0]) != small.part(diff[0]) + 1:
        raise ValueError(f"{big!r} \\ {small!r} is not a single node")
    r = diff[0]
    return Node(r, big.part(r))


def n_counts(lam: Partition, mu: Partition, l: int) -> tuple[int, int, int]:
    """``(N_r, N_l, i)`` for the single i-node ``gamma = lam \\ mu``.

    N = (#indent i-nodes) - (#removable i-nodes), counted strictly above gamma
    (smaller row index, "right") for N_r and strictly below ("left") for N_l.
    Nodes other than gamma have the same status in ``lam`` and ``mu``.
    """
    gamma = single_node_difference(lam, mu)
    i = residue(gamma, l)
    add, rem = node_lists(mu, i, l)
    add = [x for x in add if x != gamma]
    n_r = sum(1 for x in add if x.row < gamma.row) - sum(1 for x in rem if x.row < gamma.row)
    n_l = sum(1 for x in add if x.row > gamma.row) - sum(1 for x in rem if x.row > gamma.row)
    return n_r, n_l, i


def core_and_weight(lam: Partition, l: int, beads: int | None = None) -> tuple[Partition, int]:
    """l-core and l-weight via beta-numbers on an abacus with l runners.

    ``beads`` defaults to the number of parts rounded up to a multiple of l;
    any count >= the number of parts gives the same answer.
    """
    if l < 2:
        raise ValueError("l must be >= 2")
    if beads is None:
        beads = len(lam)
        beads += (-beads) % l
    elif beads < len(lam):
        raise ValueError("need at least one bead per part")
    beta = [lam.part(r) + beads - r for r in range(1, beads + 1)]
    runners: list[list[int]] = [[] for _ in range(l)]
    for b in beta:
        runners[b % l].append(b // l)
    weight = 0
    core_beta = []
    for k, levels in enumerate(runners):
        # slide beads to the top of the runner
        levels.sort()
        weight += sum(levels) - sum(range(len(levels)))
        core_beta.extend(k + l * j for j in range(len(levels)))
    core_beta.sort(reverse=True)
    core = Partition(b - (beads - 1 - idx) for idx, b in enumerate(core_beta))
    return core, weight


def is_l_regular(lam: Partition, l: int) -> bool:
    if l < 2:
        raise ValueError("l must be >= 2")
    run = 1
    for a, b in zip(lam, lam[1:]):
        run = run + 1 if a == b else 1
        if run >= l:
            return False
    return True


def dominates(lam: Sequence[int], mu: Sequence[int]) -> bool:
    """``lam`` dominates-or-equals ``mu`` (partial order; sizes must agree)."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance compares partitions of the same size")
    a = b = 0
    for k in range(max(len(lam), len(mu))):
        a += lam[k] if k < len(lam) else 0
        b += mu[k] if k < len(mu) else 0
        if a < b:
            return False
    return True


def dominance_refining_order(lam: Sequence[int], mu: Sequence[int]) -> int:
    """-1, 0, 1 as ``lam`` is below, equal to, above ``mu`` in a total order refining dominance.

    Lexicographic comparison of the parts refines dominance.
    """
    if sum(lam) != sum(mu):
        raise ValueError("order compares partitions of the same size")
    a, b = tuple(lam), tuple(mu)
    return (a > b) - (a < b)


def p_digits(a: int, p: int) -> list[int]:
    digits = []
    while a:
        a, d = divmod(a, p)
        digits.append(d)
    return digits


def contains(a: int, b: int, p: int) -> bool:
    """Whether ``a`` contains ``b`` for the prime ``p``.

    Each base-p digit of b is 0 or the matching digit of a, and the top digit
    of b sits strictly below the top digit of a.
    """
    if a < 0 or b < 0:
        raise ValueError("contains() needs non-negative integers")
    if b == 0:
        return True
    da, db = p_digits(a, p), p_digits(b, p)
    if len(db) >= len(da):
        return False
    return all(y == 0 or y == x for y, x in zip(db, da))


# -- tableaux -------------------------------------------------------------


class Tableau:
    """A filling of a Young diagram by ``1..n`` (each exactly once)."""

    __slots__ = ("rows", "shape", "_pos")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(int(x) for x in r) for r in rows if len(r))
        self.shape = Partition(len(r) for r in self.rows)
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, len(entries) + 1)):
            raise ValueError(f"entries must be exactly 1..n: {self.rows}")
        self._pos = {x: Node(r, c) for r, row in enumerate(self.rows, 1) for c, x in enumerate(row, 1)}

    @property
    def n(self) -> int:
        return len(self._pos)

    def position(self, m: int) -> Node:
        return self._pos[m]

    def entry(self, node: Node) -> int:
        return self.rows[node.row - 1][node.col - 1]

    def is_row_standard(self) -> bool:
        return all(all(a < b for a, b in zip(r, r[1:])) for r in self.rows)

    def is_standard(self) -> bool:
        if not self.is_row_standard():
            return False
        return all(
            self.rows[r][c] < self.rows[r + 1][c]
            for r in range(len(self.rows) - 1)
            for c in range(len(self.rows[r + 1]))
        )

    def conjugate(self) -> "Tableau":
        cols = conjugate(self.shape)
        return Tableau([[self.rows[r][c] for r in range(cols[c])] for c in range(len(cols))])

    def restrict(self, m: int) -> "Tableau":
        """Remove the entries > m."""
        return Tableau([[x for x in r if x <= m] for r in self.rows])

    def shape_chain(self) -> list[Partition]:
        return [self.restrict(m).shape for m in range(1, self.n + 1)]

    def content(self, m: int) -> int:
        return self._pos[m].content()

    @classmethod
    def row_reading(cls, lam: Sequence[int]) -> "Tableau":
        """``t^lambda``: 1..n entered along the rows."""
        rows, k = [], 1
        for length in lam:
            rows.append(list(range(k, k + length)))
            k += length
        return cls(rows)

    @classmethod
    def column_reading(cls, lam: Sequence[int]) -> "Tableau":
        """``t_lambda``: 1..n entered down the columns."""
        return cls.row_reading(conjugate(lam)).conjugate()

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Tableau(" + "/".join(",".join(map(str, r)) for r in self.rows) + ")"


@lru_cache(maxsize=None)
def standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    lam = Partition(lam)
    n = lam.size
    if n == 0:
        return (Tableau([]),)
    out = []
    for node in removable_nodes(lam):
        smaller = lam.remove_node(node.row)
        for t in standard_tableaux(smaller):
            rows = [list(r) for r in t.rows] + [[]]
            rows[node.row - 1].append(n)
            out.append(Tableau(rows))
    return tuple(sorted(out, key=lambda t: t.rows))


@lru_cache(maxsize=None)
def row_standard_tableaux(lam: Partition) -> tuple[Tableau, ...]:
    lam = Partition(lam)
    out = []
    _fill_rows(list(lam), list(range(1, lam.size + 1)), [], out)
    return tuple(out)


def _fill_rows(lengths, pool, acc, out):
    from itertools import combinations

    if not lengths:
        out.append(Tableau(acc))
        return
    k = lengths[0]
    for chosen in combinations(pool, k):
        rest = [x for x in pool if x not in chosen]
        _fill_rows(lengths[1:], rest, acc + [list(chosen)], out)


def all_tableaux(lam: Partition) -> Iterator[Tableau]:
    """Every filling of ``lam`` (n! of them); only for tiny shapes."""
    n = Partition(lam).size
    for perm in permutations(range(1, n + 1)):
        rows, k = [], 0
        for length in lam:
            rows.append(perm[k : k + length])
            k += length
        yield Tableau(rows)
