#!/usr/bin/env python3
"""Run every CLI command over the fixtures and validate the JSON against docs/schemas."""

import argparse
import itertools
import json
import pathlib
import subprocess
import sys

import jsonschema

SCHEMA_FOR = {
    "li": "length.json",
    "sli": "length.json",
    "ali": "ali.json",
    "asli": "ali.json",
    "fix-boundary": "boundary.json",
    "aut-fix": "aut_fix.json",
    "eq-explore": "exploration.json",
    "stallings": "stallings.json",
    "constants": "constants.json",
}


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("binary")
    ap.add_argument("schemas", type=pathlib.Path)
    ap.add_argument("fixtures", type=pathlib.Path)
    args = ap.parse_args()

    schemas = {name: json.loads((args.schemas / name).read_text()) for name in set(SCHEMA_FOR.values())}
    for s in schemas.values():
        jsonschema.Draft202012Validator.check_schema(s)
    fixtures = sorted(args.fixtures.glob("*.txt"))

    checked, failed = 0, 0
    for cmd, schema in SCHEMA_FOR.items():
        if cmd == "eq-explore":
            inputs = [list(p) + ["--depth", "6"] for p in itertools.permutations(fixtures[:4], 2)]
        else:
            inputs = [[f] for f in fixtures]
        for extra in inputs:
            argv = [args.binary, cmd, *map(str, extra), "--format", "json"]
            proc = subprocess.run(argv, capture_output=True, text=True, timeout=120)
            if not proc.stdout.strip():
                if proc.returncode != 1:
                    print(f"FAIL {' '.join(argv[1:])}: no output, exit {proc.returncode}")
                    failed += 1
                continue
            try:
                jsonschema.validate(json.loads(proc.stdout), schemas[schema],
                                    cls=jsonschema.Draft202012Validator)
                checked += 1
            except (json.JSONDecodeError, jsonschema.ValidationError) as e:
                print(f"FAIL {' '.join(argv[1:])}: {str(e).splitlines()[0]}")
                failed += 1
    print(f"validated {checked} reports, {failed} failures")
    return 1 if failed or not checked else 0


if __name__ == "__main__":
    sys.exit(main())
