"""Render the modified-mode tilting characters T(m), p = 3, for a range of m.

Writes one text picture per weight to stdout, or SVG files into --out-dir.
"""
from __future__ import annotations

import argparse
from dataclasses import dataclass
from pathlib import Path

from specfock.llt import render_alcove_picture, tilting_characters


@dataclass(frozen=True)
class Config:
    p: int = 3
    mode: str = "modified"
    weights: tuple[int, ...] = (7, 8, 17, 25, 26, 37)
    out_dir: Path | None = None


def run(cfg: Config) -> None:
    chars = tilting_characters(max(cfg.weights), cfg.p, cfg.mode)
    for m in cfg.weights:
        t = chars[m]
        if cfg.out_dir is None:
            print(render_alcove_picture(t, "text"))
            for ev in t.events:
                print(f"  subtracted ({ev.gamma}) T({ev.weight})")
            print()
        else:
            cfg.out_dir.mkdir(parents=True, exist_ok=True)
            (cfg.out_dir / f"T{m}_p{cfg.p}_{cfg.mode}.svg").write_text(render_alcove_picture(t, "svg"))


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=Config.p)
    ap.add_argument("--mode", choices=["quantum", "modified"], default=Config.mode)
    ap.add_argument("--weights", type=int, nargs="+", default=list(Config.weights))
    ap.add_argument("--out-dir", type=Path, default=None)
    a = ap.parse_args()
    run(Config(a.p, a.mode, tuple(a.weights), a.out_dir))


if __name__ == "__main__":
    main()
