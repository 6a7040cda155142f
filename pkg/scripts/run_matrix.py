"""Run the acceptance matrix and write the traceability table to a file.

    python3 scripts/run_matrix.py --field Fp:7 --out matrix_f7.txt
"""

import argparse
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from hopfyd.cli import cmd_paper_suite, traceability_table
from hopfyd.linalg import Field, field_from_tag


@dataclass
class MatrixConfig:
    field: Field = field_from_tag("Q")  # noqa: RUF009
    fixtures: tuple[str, ...] = ()
    jobs: int = 1
    out: Path | None = None


def parse_args(argv=None) -> MatrixConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--field", default="Q")
    p.add_argument("--fixture", action="append", default=[])
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--out", type=Path, default=None)
    a = p.parse_args(argv)
    return MatrixConfig(field_from_tag(a.field), tuple(a.fixture), a.jobs, a.out)


def main(cfg: MatrixConfig) -> int:
    t = time.perf_counter()
    rows = cmd_paper_suite(cfg.field, cfg.fixtures, cfg.jobs)
    text = traceability_table(rows) + f"\n\nfield {cfg.field.tag}, {time.perf_counter() - t:.1f}s\n"
    if cfg.out:
        cfg.out.write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 0 if all(r.ok for _, r, _ in rows) else 1


if __name__ == "__main__":
    sys.exit(main(parse_args()))
