"""Runs the pquot binary on sample inputs and validates each JSON document
against the schema shipped for its subcommand."""

import json
import pathlib
import subprocess
import sys

import jsonschema

CASES = [
    ("pclosed", ["--field", "2", "--F", "x", "--G", "y"]),
    ("pclosed", ["--field", "2", "--F", "y", "--G", "x"]),
    ("degree", ["--field", "4", "--coeffs", "a20=g,b02=1"]),
    ("invariant-ring", ["--field", "2", "--F", "y^4", "--G", "x^2"]),
    ("invariant-ring", ["--field", "2", "--F", "x^2", "--G", "y^2", "--on", "U1"]),
    ("classify", ["--field", "2", "--coeffs", "a20=1,b02=1"]),
    ("classify", ["--field", "2", "--F", "x*y^2", "--G", "x^2+y^3"]),
    ("classify", ["--field", "4", "--F", "x^2+g*x", "--G", "y^2+g*y", "--affine"]),
    ("resolve", ["--f", "X^3+Y^5"]),
    ("tjurina", ["--f", "X^2*Y+X*Y^3"]),
    ("survey", ["--field", "2"]),
    ("survey", ["--field", "8", "--samples", "20", "--seed", "3", "--workers", "2"]),
]


def main() -> int:
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    failures = 0
    for command, args in CASES:
        schema = json.loads((schema_dir / f"{command}.schema.json").read_text())
        proc = subprocess.run([exe, command, *args], capture_output=True, text=True)
        label = " ".join([command, *args])
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        try:
            jsonschema.validate(json.loads(proc.stdout), schema)
            print(f"ok   {label}")
        except jsonschema.ValidationError as e:
            print(f"FAIL {label}: {e.message}")
            failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
