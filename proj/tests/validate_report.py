"""Runs the CLI and validates its JSON output against the shipped schema.

usage: validate_report.py <abcover binary> <schema> <work dir>
"""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path, work = sys.argv[1], Path(sys.argv[2]), Path(sys.argv[3])
    work.mkdir(parents=True, exist_ok=True)
    schema = json.loads(schema_path.read_text())
    validator = jsonschema.Draft202012Validator(schema)

    runs = {
        "classify": [exe, "classify", "--min", "2", "--max", "12", "--trace", "--timing",
                     "--out", str(work / "classify.json")],
        "classify_raw": [exe, "classify", "--min", "8", "--max", "8", "--no-dedup",
                         "--out", str(work / "classify_raw.json")],
        "classify_budget": [exe, "classify", "--min", "12", "--max", "12", "--node-budget", "1",
                            "--out", str(work / "classify_budget.json")],
        "fixtures": [exe, "fixtures", "--json"],
    }
    failures = 0
    for name, cmd in runs.items():
        proc = subprocess.run(cmd, capture_output=True, text=True)
        if proc.returncode != 0:
            print(f"FAIL {name}: exit {proc.returncode}\n{proc.stderr}")
            failures += 1
            continue
        out = work / f"{name}.json"
        doc = json.loads(out.read_text()) if out.exists() else json.loads(proc.stdout)
        errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
        for e in errors[:5]:
            print(f"FAIL {name}: {'/'.join(map(str, e.path))}: {e.message}")
        failures += bool(errors)
        if not errors:
            print(f"ok   {name}")

    # Byte-identical reruns.
    a = subprocess.run([exe, "classify", "--min", "2", "--max", "12"], capture_output=True).stdout
    b = subprocess.run([exe, "classify", "--min", "2", "--max", "12"], capture_output=True).stdout
    if a != b or not a:
        print("FAIL determinism: two runs differ")
        failures += 1
    else:
        print("ok   determinism")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
