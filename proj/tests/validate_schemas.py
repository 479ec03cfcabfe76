"""Runs the CLI in JSON mode and validates each report against the shipped schema."""
import json
import pathlib
import subprocess
import sys

import jsonschema

binary, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
cases = [
    ("table_report", ["tables", "pi-inverse", "--rows", "5", "--check"]),
    ("table_report", ["tables", "gamma", "--rows", "4"]),
    ("enumerate_report", ["enumerate", "ncc", "--n", "3", "--k", "1"]),
    ("enumerate_report", ["enumerate", "snc", "--m", "2", "--n", "2"]),
    ("check_report", ["verify", "series", "--order", "6"]),
    ("check_report", ["verify", "wick", "--depth", "4"]),
    ("moment_report", ["mc", "diagonalize", "--N", "10", "--samples", "200", "--max-degree", "2"]),
    ("moment_report", ["mc", "raw-cov", "--m", "2", "--n", "2", "--N", "10", "--c", "2", "--samples", "200"]),
    ("moment_report", ["mc", "convergence", "--sizes", "4,8", "--samples", "200"]),
]
failed = 0
for schema_name, args in cases:
    schema = json.loads((schema_dir / f"{schema_name}.schema.json").read_text())
    proc = subprocess.run([binary, *args, "--format", "json"], capture_output=True, text=True)
    if proc.returncode == 2:
        print(f"FAIL {' '.join(args)}: usage error {proc.stderr.strip()}")
        failed += 1
        continue
    try:
        jsonschema.validate(json.loads(proc.stdout), schema)
        print(f"ok   {' '.join(args)}")
    except (jsonschema.ValidationError, json.JSONDecodeError) as exc:
        print(f"FAIL {' '.join(args)}: {exc}")
        failed += 1
sys.exit(1 if failed else 0)
