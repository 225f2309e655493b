"""Write graded decomposition matrices for a grid of (n, l) as LaTeX, CSV and JSON files."""
from __future__ import annotations

import argparse
from dataclasses import dataclass, field
from pathlib import Path

from specfock.llt import canonical_basis


@dataclass(frozen=True)
class Config:
    ns: tuple[int, ...] = tuple(range(1, 9))
    ls: tuple[int, ...] = (2, 3, 5)
    out_dir: Path = field(default=Path("tables"))


def run(cfg: Config) -> None:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for l in cfg.ls:
        for n in cfg.ns:
            G = canonical_basis(n, l)
            stem = cfg.out_dir / f"decomp_n{n}_l{l}"
            stem.with_suffix(".tex").write_text(G.to_latex())
            stem.with_suffix(".csv").write_text(G.to_csv())
            stem.with_suffix(".json").write_text(G.to_json() + "\n")
            nontrivial = sum(1 for c in G.columns for mu, _ in c.entries if mu != c.label)
            print(f"n={n} l={l}: {len(G.columns)} columns, {nontrivial} off-diagonal entries")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ns", type=int, nargs="+", default=list(Config.ns))
    ap.add_argument("--ls", type=int, nargs="+", default=list(Config.ls))
    ap.add_argument("--out-dir", type=Path, default=Path("tables"))
    a = ap.parse_args()
    run(Config(tuple(a.ns), tuple(a.ls), a.out_dir))


if __name__ == "__main__":
    main()
