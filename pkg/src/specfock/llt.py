"""Canonical basis of the Fock space by ladder monomials and straightening, plus the two-row SL2 tilting algorithm."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Literal

from .fock import Convention, FockVector, divided_power_f, phi_rescale
from .laurent import ONE, ZERO, LaurentPoly, bar_symmetric_split
from .partitions import (
    Partition,
    contains,
    core_and_weight,
    format_partition,
    is_l_regular,
    p_digits,
    partitions_of,
)

Mode = Literal["quantum", "modified"]

__all__ = [
    "ladder",
    "ladder_sequence",
    "first_approximation",
    "CanonicalColumn",
    "DecompositionMatrix",
    "canonical_column",
    "canonical_basis",
    "erdmann_multiplicity",
    "erdmann_support",
    "wall_exponent",
    "sl2_step",
    "TiltingCharacter",
    "SubtractionEvent",
    "tilting_character",
    "tilting_characters",
    "one_wall_support",
    "render_alcove_picture",
    "LLTCheck",
    "eq5_checks",
    "erdmann_checks",
    "bridge_checks",
]


# -- ladders and the first approximation ------------------------------------


def ladder(row: int, col: int, l: int) -> int:
    """Ladder index of node ``(row, col)``.

    A ladder is a run of nodes (a + k(l-1), b - k); all its nodes have residue
    ``-index mod l``.
    """
    return (row - 1) + (l - 1) * (col - 1)


def ladder_sequence(lam: Partition, l: int) -> list[tuple[int, int]]:
    """``[(residue, count), ...]`` in increasing ladder order for the nodes of ``lam``."""
    counts: dict[int, int] = {}
    for node in lam.nodes():
        k = ladder(node.row, node.col, l)
        counts[k] = counts.get(k, 0) + 1
    return [((-k) % l, counts[k]) for k in sorted(counts)]


def first_approximation(lam: Partition, l: int, convention: Convention = "right") -> FockVector:
    lam = Partition(lam)
    if not is_l_regular(lam, l):
        raise ValueError(f"{format_partition(lam)!r} is not {l}-regular")
    v = FockVector.basis(Partition())
    for i, k in ladder_sequence(lam, l):
        v = divided_power_f(v, i, k, l, convention)
    return v


# -- canonical basis -------------------------------------------------------


@dataclass(frozen=True)
class CanonicalColumn:
    label: Partition
    vector: FockVector

    @property
    def entries(self) -> list[tuple[Partition, LaurentPoly]]:
        return self.vector.items()

    def entry(self, mu) -> LaurentPoly:
        return self.vector[mu]

    def at_one(self) -> dict[Partition, int]:
        return {mu: c.at_one() for mu, c in self.vector.items()}


@dataclass(frozen=True)
class DecompositionMatrix:
    n: int
    l: int
    columns: tuple[CanonicalColumn, ...]
    convention: Convention = "right"

    def column(self, label) -> CanonicalColumn:
        label = Partition(label)
        for col in self.columns:
            if col.label == label:
                return col
        raise KeyError(label)

    def labels(self) -> list[Partition]:
        return [c.label for c in self.columns]

    def rows(self) -> list[Partition]:
        return list(partitions_of(self.n))

    def entry(self, mu, label) -> LaurentPoly:
        return self.column(label).entry(mu)

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "columns": [
                {
                    "label": format_partition(col.label),
                    "entries": [{"partition": format_partition(mu), "poly": str(c)} for mu, c in col.entries],
                }
                for col in self.columns
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["partition"] + [format_partition(c.label) for c in self.columns])
        for mu in self.rows():
            w.writerow([format_partition(mu)] + [str(c.entry(mu)) for c in self.columns])
        return buf.getvalue()

    def to_latex(self) -> str:
        def lab(p):
            return "(" + (format_partition(p) or r"\varnothing") + ")"

        lines = [
            r"\begin{tabular}{l|" + "c" * len(self.columns) + "}",
            " & ".join([""] + [f"${lab(c.label)}$" for c in self.columns]) + r" \\",
            r"\hline",
        ]
        for mu in self.rows():
            cells = []
            for c in self.columns:
                e = c.entry(mu)
                cells.append("." if e.is_zero() else f"${e.to_latex()}$")
            lines.append(" & ".join([f"${lab(mu)}$"] + cells) + r" \\")
        lines.append(r"\end{tabular}")
        return "\n".join(lines) + "\n"


def _lex_key(mu: Partition):
    return tuple(mu)


def canonical_column(
    lam: Partition, l: int, known: dict[Partition, FockVector], convention: Convention = "right"
) -> FockVector:
    """Straighten the first approximation of ``lam`` against the columns in ``known``.

    Off-label entries divided by the label coefficient must end in qZ[q]. The
    most dominant offending partition is handled first; it is l-regular and
    strictly below ``lam``, so its column is already in ``known``.
    """
    lam = Partition(lam)
    v = first_approximation(lam, l, convention)
    unit = v[lam]
    if not unit.is_monomial() or abs(unit.coeff(unit.min_exp())) != 1:
        raise ArithmeticError(f"label coefficient of A({format_partition(lam)}) is {unit}, not a unit monomial")
    inv = unit ** -1
    while True:
        offending = [mu for mu, c in v.items() if mu != lam and (c * inv).min_exp() <= 0]
        if not offending:
            return v
        mu = max(offending, key=_lex_key)
        if _lex_key(mu) >= _lex_key(lam):
            raise ArithmeticError(f"offending entry {format_partition(mu)} not below label {format_partition(lam)}")
        gamma, _ = bar_symmetric_split(v[mu] * inv)
        if mu not in known:
            raise ArithmeticError(f"offending entry {format_partition(mu)} is not an l-regular label")
        # known[mu] carries the same label unit: both labels lie in one block
        v = v - known[mu].scale(gamma)


def canonical_basis(n: int, l: int, convention: Convention = "right") -> DecompositionMatrix:
    """All canonical columns of degree ``n``; labels are processed from least dominant upward."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if l < 2:
        raise ValueError("l must be >= 2")
    labels = [lam for lam in partitions_of(n) if is_l_regular(lam, l)]
    known: dict[Partition, FockVector] = {}
    for lam in sorted(labels, key=_lex_key):
        known[lam] = canonical_column(lam, l, known, convention)
    # most dominant column first
    cols = tuple(CanonicalColumn(lam, known[lam]) for lam in labels)
    return DecompositionMatrix(n, l, cols, convention)


def left_from_right(G: DecompositionMatrix) -> DecompositionMatrix:
    """Left-convention columns predicted from right-convention ones (rescale by ``phi`` inverse)."""
    cols = tuple(CanonicalColumn(c.label, phi_rescale(c.vector, G.l, inverse=True)) for c in G.columns)
    return DecompositionMatrix(G.n, G.l, cols, "left")


# -- SL2 ---------------------------------------------------------------------


def _check_mode(p: int, mode: str) -> None:
    if mode not in ("quantum", "modified"):
        raise ValueError(f"unknown mode {mode!r}")
    if p < 2:
        raise ValueError("p must be >= 2")
    if mode == "modified":
        if p == 2:
            raise ValueError("modified mode requires an odd prime")
        if any(p % d == 0 for d in range(2, int(p**0.5) + 1)):
            raise ValueError(f"modified mode requires a prime, got {p}")


def erdmann_multiplicity(m: int, s: int, p: int) -> int:
    if p == 2:
        raise ValueError("Erdmann's rule is stated for odd p")
    if not 0 <= s <= m:
        raise ValueError("need 0 <= s <= m")
    if (m - s) % 2:
        return 0
    return int(contains(m + 1, (m - s) // 2, p))


def erdmann_support(m: int, p: int) -> dict[int, int]:
    return {s: 1 for s in range(m, -1, -2) if erdmann_multiplicity(m, s, p)}


def _vp(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def wall_exponent(weight: int, p: int, mode: Mode) -> int:
    """Exponent of a second-row addition to a two-row shape of weight ``lam1 - lam2``.

    With h = weight + 1: quantum gives [p | h] - [p | h - 1]; modified gives
    v_p(h) - v_p(h - 1). Second-row additions need weight >= 1, so h >= 2.
    """
    h = weight + 1
    if mode == "quantum":
        return int(h % p == 0) - int((h - 1) % p == 0)
    return _vp(h, p) - _vp(h - 1, p)


def sl2_step(state: FockVector, i: int, p: int, mode: Mode) -> FockVector:
    """``f_i`` on two-row shapes with third-row terms dropped and the mode's exponents."""
    out: list[tuple[Partition, LaurentPoly]] = []
    for lam, c in state.items():
        if len(lam) > 2:
            raise ValueError(f"sl2_step needs two-row shapes, got {format_partition(lam)}")
        a, b = lam.part(1), lam.part(2)
        if a % p == i:
            out.append((Partition((a + 1, b)), c))
        if b < a and (b - 1) % p == i:
            out.append((Partition((a, b + 1)), c.shift(wall_exponent(a - b, p, mode))))
    return FockVector(out)


@dataclass(frozen=True)
class SubtractionEvent:
    top: int
    weight: int
    gamma: LaurentPoly


@dataclass(frozen=True)
class TiltingCharacter:
    p: int
    mode: str
    m: int
    entries: dict[int, LaurentPoly]
    events: tuple[SubtractionEvent, ...] = field(default=(), compare=False)

    def items(self) -> list[tuple[int, LaurentPoly]]:
        return sorted(self.entries.items(), reverse=True)

    def at_one(self) -> dict[int, int]:
        return {s: c.at_one() for s, c in self.entries.items()}

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "mode": self.mode,
            "m": self.m,
            "entries": [{"weight": s, "poly": str(c)} for s, c in self.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["weight", "poly"])
        for s, c in self.items():
            w.writerow([s, str(c)])
        return buf.getvalue()

    def to_latex(self) -> str:
        terms = [f"{'' if c == ONE else '(' + c.to_latex() + ')'}\\Delta({s})" for s, c in self.items()]
        return f"$T({self.m}) = " + " + ".join(terms) + "$\n"


def _to_state(entries: dict[int, LaurentPoly], n: int) -> FockVector:
    return FockVector({Partition(((n + s) // 2, (n - s) // 2)): c for s, c in entries.items()})


def _from_state(v: FockVector) -> dict[int, LaurentPoly]:
    return {lam.part(1) - lam.part(2): c for lam, c in v.items()}


def _straighten(m: int, ch: dict[int, LaurentPoly], known: dict[int, TiltingCharacter], events: list):
    while True:
        bad = [s for s, c in ch.items() if s != m and c.min_exp() <= 0]
        if not bad:
            return ch
        s = max(bad)
        gamma, _ = bar_symmetric_split(ch[s])
        events.append(SubtractionEvent(m, s, gamma))
        for t, c in known[s].entries.items():
            new = ch.get(t, ZERO) - gamma * c
            if new.is_zero():
                ch.pop(t, None)
            else:
                ch[t] = new


def tilting_characters(M: int, p: int, mode: Mode = "modified") -> dict[int, TiltingCharacter]:
    """``T(0) .. T(M)`` built inductively.

    Weights up to p - 1 are Weyl characters. For m divisible by p the source
    is T(m - 2), pushed through the wall by two steps; otherwise the source is
    T(m - 1) and one step is applied. Each step applies f at the residue of the
    top shape's first row.
    """
    _check_mode(p, mode)
    known: dict[int, TiltingCharacter] = {}
    for m in range(M + 1):
        if m <= p - 1:
            known[m] = TiltingCharacter(p, mode, m, {m: ONE})
            continue
        src, steps = (m - 2, 2) if m % p == 0 else (m - 1, 1)
        state = _to_state(known[src].entries, src)
        for _ in range(steps):
            top = max(state.support(), key=lambda lam: lam.part(1) - lam.part(2))
            state = sl2_step(state, top.part(1) % p, p, mode)
        ch = _from_state(state)
        if ch.get(m) != ONE:
            raise ArithmeticError(f"top coefficient of T({m}) is {ch.get(m)}")
        events: list[SubtractionEvent] = []
        ch = _straighten(m, ch, known, events)
        known[m] = TiltingCharacter(p, mode, m, ch, tuple(events))
    return known


def tilting_character(m: int, p: int, mode: Mode = "modified") -> TiltingCharacter:
    if m < 0:
        raise ValueError("m must be >= 0")
    return tilting_characters(m, p, mode)[m]


def one_wall_support(m: int, l: int) -> dict[int, int]:
    """q = 1 quantum tilting support by reflecting once in the wall below m."""
    r = (m + 1) % l
    if r == 0 or m - 2 * r < 0:
        return {m: 1}
    return {m: 1, m - 2 * r: 1}


# -- pictures ----------------------------------------------------------------


def _wall_level(weight: int, p: int, top: int) -> int:
    """Largest k <= top with weight = -1 mod p^k (0 if none)."""
    k = 0
    while k < top and (weight + 1) % p ** (k + 1) == 0:
        k += 1
    return k


def _levels(t: TiltingCharacter) -> int:
    # largest k with p^k <= m + 1, at least 1
    return max(1, len(p_digits(t.m + 1, t.p)) - 1)


def render_alcove_picture(t: TiltingCharacter, format: str = "text") -> str:
    """Weight line from -1 to m+1 with p^k walls and one labelled dot per entry."""
    if format == "text":
        return _render_text(t)
    if format == "svg":
        return _render_svg(t)
    raise ValueError(f"unknown picture format {format!r}")


def _label(c: LaurentPoly) -> str:
    return str(c).replace(" ", "")


def _render_text(t: TiltingCharacter) -> str:
    lo, hi = -1, t.m + 1
    labels = {s: _label(c) for s, c in t.entries.items()}
    cell = max([3] + [len(x) + 1 for x in labels.values()])
    levels = _levels(t)

    def row(fn) -> str:
        return "".join(fn(w).center(cell) for w in range(lo, hi + 1)).rstrip()

    out = [f"T({t.m})  p={t.p}  mode={t.mode}"]
    for k in range(levels, 0, -1):
        mark = f"p^{k}" if k > 1 else "p"
        out.append(f"{mark:>4} " + row(lambda w: "|" if _wall_level(w, t.p, levels) >= k else ""))
    out.append("     " + row(lambda w: labels.get(w, "")))
    out.append("     " + row(lambda w: "o" if w in labels else "."))
    out.append("     " + row(lambda w: str(w) if w == lo or w == hi or w in labels else ""))
    out.append("entries:")
    for s, c in t.items():
        out.append(f"  {s}: {_label(c)}")
    return "\n".join(out) + "\n"


def _render_svg(t: TiltingCharacter) -> str:
    lo, hi = -1, t.m + 1
    step, pad, base = 12, 20, 110
    width = pad * 2 + step * (hi - lo)
    levels = _levels(t)

    def x(w: int) -> int:
        return pad + step * (w - lo)

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="150" '
        f'data-p="{t.p}" data-mode="{t.mode}" data-m="{t.m}">',
        f'<line x1="{x(lo)}" y1="{base}" x2="{x(hi)}" y2="{base}" stroke="black"/>',
    ]
    for w in range(lo, hi + 1):
        k = _wall_level(w, t.p, levels)
        height = 4 + 18 * k
        parts.append(f'<line x1="{x(w)}" y1="{base}" x2="{x(w)}" y2="{base - height}" stroke="black"/>')
    for s, c in t.items():
        parts.append(f'<circle cx="{x(s)}" cy="{base}" r="4" fill="black"/>')
        parts.append(
            f'<text x="{x(s)}" y="{base + 20}" text-anchor="middle" font-size="10" '
            f'data-weight="{s}" data-label="{_label(c)}">{_label(c)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


# -- verification rows -------------------------------------------------------


@dataclass(frozen=True)
class LLTCheck:
    check: str
    instance: str
    l: int
    lhs: str
    rhs: str

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def _support_str(d: dict[int, int]) -> str:
    return ";".join(f"{s}:{c}" for s, c in sorted(d.items(), reverse=True) if c)


def eq5_checks(max_n: int = 8, ls=(2, 3), sign: int = 1) -> list[LLTCheck]:
    """Compare left-convention columns with ``q^{sign * weight}`` times right-convention ones."""
    out = []
    for l in ls:
        for n in range(max_n + 1):
            right = canonical_basis(n, l, "right")
            left = canonical_basis(n, l, "left")
            for col in right.columns:
                w = core_and_weight(col.label, l)[1]
                predicted = col.vector.scale(LaurentPoly({sign * w: 1}))
                out.append(
                    LLTCheck("eq5", format_partition(col.label), l, str(left.column(col.label).vector), str(predicted))
                )
    return out


def erdmann_checks(p: int, max_m: int, mode: Mode = "modified") -> list[LLTCheck]:
    """q = 1 tilting supports against Erdmann's rule (modified) or one wall reflection (quantum)."""
    chars = tilting_characters(max_m, p, mode)
    out = []
    for m in range(max_m + 1):
        oracle = erdmann_support(m, p) if mode == "modified" else one_wall_support(m, p)
        out.append(LLTCheck(f"erdmann-{mode}", str(m), p, _support_str(chars[m].at_one()), _support_str(oracle)))
    return out


def bridge_checks(max_n: int = 8, ls=(2, 3, 5, 7)) -> list[LLTCheck]:
    """Two-row canonical columns at q = 1 against quantum tilting characters, keyed by ``lam1 - lam2``."""
    out = []
    for l in ls:
        chars = tilting_characters(max_n, l, "quantum")
        for n in range(1, max_n + 1):
            for col in canonical_basis(n, l).columns:
                if len(col.label) > 2:
                    continue
                two = {mu.part(1) - mu.part(2): c.at_one() for mu, c in col.entries if len(mu) <= 2}
                m = col.label.part(1) - col.label.part(2)
                out.append(
                    LLTCheck("bridge", format_partition(col.label), l, _support_str(two), _support_str(chars[m].at_one()))
                )
    return out
