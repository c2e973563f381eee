#!/usr/bin/env python3
"""Regenerate the golden files under tests/golden/.

Two outputs:
  affine_reconcile.json   frozen remainder/period data for the affine families
  cli/                    byte captures of one invocation per CLI path

The affine entries are checked against FROZEN below before anything is
written, so a regression in the library cannot silently rewrite the goldens.
The frozen numbers were established against independent brute-force
enumeration; edit them only with a matching derivation.
"""

import json
import pathlib
import sys

from click.testing import CliRunner

from fcheaps.cli import main as cli_main
from fcheaps.enumerator import cross_validate

GOLDEN = pathlib.Path(__file__).resolve().parent.parent / "tests" / "golden"

# (family, rank, window) -> (remainder coeffs, transient_start, period, block)
FROZEN = {
    ("affA", 3, 24): ((), 2, 1, (0,)),
    ("affA", 4, 40): ((), 2, 4, (2, 0, 4, 0)),
    ("affA", 6, 40): ((), 5, 6, (6, 0, 6, 0, 8, 0)),
    ("affC", 2, 60): ((1, 3, 1, 4, 0, 2), 1, 6, (3, 1, 4, 1, 3, 2)),
    ("affC", 3, 60): ((1, 4, 3, 4, 6, 2, 4, 2, 2), 9, 2, (2, 4)),
    ("affB", 2, 150): ((1, 4, 3, 3, 1, 3, 1, 2), 8, 30,
                       (3, 1, 4, 1, 5, 1, 3, 2, 3, 1, 5, 1, 4, 1, 3, 1, 5, 2,
                        3, 1, 3, 1, 6, 1, 3, 1, 3, 2, 5, 1)),
    ("affB", 3, 150): ((1, 5, 6, 4, 8, 5, 6, 5, 3, 3, 0, 1), 12, 14,
                       (5, 1, 6, 1, 5, 1, 5, 1, 5, 2, 5, 1, 5, 1)),
    ("affD", 2, 60): ((1, 5, 6, 4, 3, 4, 5, 4, 2), 8, 6, (6, 0, 6, 0, 12, 0)),
    ("affD", 3, 60): ((1, 6, 10, 6, 7, 6, 8, 4, 6, 4, 2), 57, 2, (0, 2)),
}

CLI_CASES = [
    ("graph_show_A4.txt", ["graph", "show", "--type", "A", "--rank", "4"]),
    ("graph_show_B3.json", ["graph", "show", "--type", "B", "--rank", "3",
                            "--format", "json"]),
    ("graph_show_affA3.csv", ["graph", "show", "--type", "affA", "--rank", "3",
                              "--format", "csv"]),
    ("graph_show_affD2.json", ["graph", "show", "--type", "affD", "--rank", "2",
                               "--format", "json"]),
    ("enumerate_A4.txt", ["enumerate", "--type", "A", "--rank", "4",
                          "--max-length", "6"]),
    ("enumerate_affA3_inv.csv", ["enumerate", "--type", "affA", "--rank", "3",
                                 "--max-length", "4", "--involutions",
                                 "--format", "csv"]),
    ("enumerate_B2_alt.csv", ["enumerate", "--type", "B", "--rank", "2",
                              "--max-length", "4", "--alternating",
                              "--format", "csv"]),
    ("enumerate_A4_inv.json", ["enumerate", "--type", "A", "--rank", "4",
                               "--max-length", "6", "--involutions",
                               "--format", "json"]),
    ("enumerate_A3_stream.txt", ["enumerate", "--type", "A", "--rank", "3",
                                 "--max-length", "3", "--stream"]),
    ("enumerate_A3_stream.csv", ["enumerate", "--type", "A", "--rank", "3",
                                 "--max-length", "3", "--stream",
                                 "--format", "csv"]),
    ("enumerate_A3_stream.json", ["enumerate", "--type", "A", "--rank", "3",
                                  "--max-length", "3", "--stream",
                                  "--format", "json"]),
    ("genfunc_maj_A4.txt", ["genfunc", "maj", "--type", "A", "--rank", "4"]),
    ("genfunc_length_B2.txt", ["genfunc", "length", "--type", "B", "--rank", "2"]),
    ("genfunc_length_B2.csv", ["genfunc", "length", "--type", "B", "--rank", "2",
                               "--format", "csv"]),
    ("genfunc_card_B2.txt", ["genfunc", "card", "--type", "B", "--rank", "2"]),
    ("genfunc_card_D3.csv", ["genfunc", "card", "--type", "D", "--rank", "3",
                             "--format", "csv"]),
    ("genfunc_maj_D4.json", ["genfunc", "maj", "--type", "D", "--rank", "4",
                             "--format", "json"]),
    ("genfunc_maj_B4_desc2.txt", ["genfunc", "maj", "--type", "B", "--rank", "4",
                                  "--descents", "2"]),
    ("series_M.txt", ["series", "--id", "M", "--xmax", "4", "--tmax", "6"]),
    ("series_Mstar.json", ["series", "--id", "Mstar", "--xmax", "6",
                           "--tmax", "8", "--format", "json"]),
    ("series_Q.csv", ["series", "--id", "Q", "--xmax", "3", "--tmax", "4",
                      "--format", "csv"]),
    ("series_Qo.txt", ["series", "--id", "Qo", "--xmax", "4", "--tmax", "8"]),
    ("walks_closed5.txt", ["walks", "family", "--n", "5", "--end", "0",
                           "--tmax", "8"]),
    ("walks_flags.json", ["walks", "family", "--n", "4", "--no-horiz",
                          "--touch", "--start", "le1", "--end", "eq-start",
                          "--weight", "exclude-start", "--tmax", "8",
                          "--format", "json"]),
    ("walks_updown.csv", ["walks", "family", "--n", "4", "--no-horiz",
                          "--start", "any", "--end", "0", "--tmax", "8",
                          "--format", "csv"]),
    ("verify_B2.txt", ["verify", "--type", "B", "--rank", "2"]),
    ("verify_D3.json", ["verify", "--type", "D", "--rank", "3",
                        "--format", "json"]),
    ("verify_affA4_L24.txt", ["verify", "--type", "affA", "--rank", "4",
                              "--max-length", "24"]),
    ("verify_affC2_L60.txt", ["verify", "--type", "affC", "--rank", "2",
                              "--max-length", "60"]),
    ("cells_3_6.txt", ["cells", "--rank", "3", "--max-length", "6"]),
    ("cells_4_6.json", ["cells", "--rank", "4", "--max-length", "6",
                        "--format", "json"]),
    ("cells_3_4.csv", ["cells", "--rank", "3", "--max-length", "4",
                       "--format", "csv"]),
]


def build_affine_entries():
    entries = []
    for (family, rank, window), want in sorted(FROZEN.items()):
        report = cross_validate(family, rank, window)
        if not report.ok:
            raise SystemExit(f"{family}:{rank} failed validation: {report.failures}")
        got = (tuple(report.remainder.coeffs),
               report.period.transient_start,
               report.period.period,
               tuple(report.period.repeating_block))
        if got != want:
            raise SystemExit(
                f"{family}:{rank} drifted from frozen values:\n"
                f"  frozen   {want}\n  computed {got}")
        entries.append({
            "type": family, "rank": rank, "lmax": window,
            "remainder": list(want[0]),
            "transient_start": want[1],
            "period": want[2],
            "block": list(want[3]),
        })
    return entries


def capture_cli():
    runner = CliRunner()
    manifest = []
    for name, argv in CLI_CASES:
        result = runner.invoke(cli_main, argv)
        if result.exit_code != 0:
            raise SystemExit(f"{argv} exited {result.exit_code}:\n{result.output}")
        (GOLDEN / "cli" / name).write_text(result.output)
        manifest.append({"file": name, "argv": argv})
    (GOLDEN / "cli" / "manifest.json").write_text(
        json.dumps(manifest, indent=2) + "\n")
    return len(manifest)


def main():
    (GOLDEN / "cli").mkdir(parents=True, exist_ok=True)
    entries = build_affine_entries()
    (GOLDEN / "affine_reconcile.json").write_text(
        json.dumps(entries, indent=2) + "\n")
    count = capture_cli()
    print(f"wrote {len(entries)} affine entries and {count} cli captures")
    return 0


if __name__ == "__main__":
    sys.exit(main())
