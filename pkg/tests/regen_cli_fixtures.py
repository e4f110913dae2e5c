"""Rewrite fixtures/expected/*.json from the current CLI. Review the diff before committing."""
import io
import json
import os
import sys
from pathlib import Path

from catk.cli import run_cli

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def main():
    os.chdir(FIXTURES)
    cases = json.loads(Path("cases.json").read_text())
    for case in cases:
        out, err = io.StringIO(), io.StringIO()
        code = run_cli(case["argv"], out, err)
        if code != case["exit"]:
            print(f"{case['name']}: exit {code}, expected {case['exit']}: {err.getvalue().strip()}", file=sys.stderr)
        if case["exit"] != 2:
            Path("expected", case["name"] + ".json").write_text(out.getvalue())


if __name__ == "__main__":
    main()
