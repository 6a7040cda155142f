"""Write every fixture that has a file form into a directory and check that it reads back."""

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from hopfyd.cli import emit_hopf, emit_yd, parse_hopf, parse_yd
from hopfyd.examples import HOPF_FIXTURES, hopf_fixture, yd_catalog, yd_fixture
from hopfyd.linalg import Field, field_from_tag


@dataclass
class ExportConfig:
    outdir: Path
    field: Field


def slug(label: str) -> str:
    return label.replace(":", "_").replace(" ", "-")


def export(cfg: ExportConfig) -> int:
    cfg.outdir.mkdir(parents=True, exist_ok=True)
    bad = 0
    for name in HOPF_FIXTURES:
        H = hopf_fixture(name, cfg.field)
        text = emit_hopf(H)
        (cfg.outdir / f"{slug(name)}.hopf").write_text(text, encoding="utf-8")
        bad += emit_hopf(parse_hopf(text)) != text
    for name in yd_catalog(HOPF_FIXTURES):
        for label, inst in yd_fixture(name, cfg.field):
            try:
                text = emit_yd(inst)
            except ValueError:
                # only-coaction partners over a non-canonical pairing have no file form
                continue
            (cfg.outdir / f"{slug(label)}.yd").write_text(text, encoding="utf-8")
            bad += not parse_yd(text).same_as(inst)
    n = len(list(cfg.outdir.iterdir()))
    print(f"wrote {n} files to {cfg.outdir}, {bad} round-trip mismatches")
    return 1 if bad else 0


if __name__ == "__main__":
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("outdir", type=Path)
    p.add_argument("--field", default="Q")
    a = p.parse_args()
    sys.exit(export(ExportConfig(a.outdir, field_from_tag(a.field))))
