#!/usr/bin/env python3
"""Runs every dp4 verb and validates the reports against the JSON schema."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema

VERBS = ["sections", "verify", "pencil", "probe", "special-directions", "dictionary", "pipeline"]


def run(dp4, args):
    proc = subprocess.run([dp4, *args], capture_output=True, text=True, check=False)
    return proc.returncode, proc.stdout


def main():
    dp4, schema_path = sys.argv[1], sys.argv[2]
    schema = json.loads(Path(schema_path).read_text())
    validator = jsonschema.Draft202012Validator(schema)
    failures = []

    def check(label, args, want_code):
        code, out = run(dp4, args)
        if code != want_code:
            failures.append(f"{label}: exit {code}, expected {want_code}")
        try:
            report = json.loads(out)
        except json.JSONDecodeError as e:
            failures.append(f"{label}: not JSON ({e})")
            return None
        for err in validator.iter_errors(report):
            failures.append(f"{label}: {'/'.join(map(str, err.path))}: {err.message}")
        return out

    for verb in VERBS:
        check(verb, [verb], 0)
    check("verify --symbolic", ["--symbolic", "verify"], 0)
    check("probe --tangency", ["--tangency", "probe"], 0)
    check("sections --plane-only", ["--plane-only", "sections"], 0)
    check("verify --corrupt-basis", ["--corrupt-basis", "verify"], 1)
    check("sections --timing", ["--timing", "sections"], 0)

    with tempfile.TemporaryDirectory() as tmp:
        repeated = Path(tmp) / "repeated.json"
        repeated.write_text('{"theta": [0, 1, 1, 2, -2]}')
        check("repeated theta", ["--config", str(repeated), "pipeline"], 2)
        ab = Path(tmp) / "ab.json"
        ab.write_text('{"ab": ["2", "3"]}')
        check("ab config", ["--config", str(ab), "verify"], 0)

    first = check("pipeline seed 3", ["--seed", "3", "pipeline"], 0)
    second = check("pipeline seed 3 again", ["--seed", "3", "pipeline"], 0)
    if first != second:
        failures.append("pipeline output differs between identical runs")

    for f in failures:
        print("FAIL", f)
    print(f"{'PASS' if not failures else 'FAIL'}: schema and determinism checks")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
