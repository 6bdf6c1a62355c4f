"""Runs every permclt subcommand and validates its JSON output against the schema."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["exact", "eulerian", "--n", "7"],
    ["exact", "bivariate", "--n", "5", "--method", "recurrence"],
    ["exact", "tdist", "--n", "6"],
    ["exact", "moments", "--stat", "T", "--n", "9"],
    ["exact", "moments", "--stat", "peaks", "--n", "6"],
    ["exact", "covariance", "--n", "6", "--method", "brute"],
    ["exact", "covariance", "--n", "12"],
    ["exact", "euler-identity", "--n", "6", "--K", "20"],
    ["exact", "stanley", "--n", "10"],
    ["exact", "carlitz", "--n", "6"],
    ["exact", "pitman", "--n", "100"],
    ["metric", "dist", "--kind", "ulam", "--p", "3 4 1 2 5", "--q", "1 4 5 2 3"],
    ["metric", "graph-dist", "--p", "3 4 1 2 5", "--q", "1 4 5 2 3"],
    ["metric", "violations", "--n", "5"],
    ["metric", "invariance", "--trials", "100"],
    ["mc", "clt", "--n", "100", "--samples", "2000", "--stat", "T"],
    ["mc", "clt", "--n", "50", "--samples", "2000", "--stat", "peaks_pair", "--sampler", "shuffle"],
    ["mc", "bivariate", "--n", "100", "--samples", "2000"],
    ["mc", "coincidence", "--n", "100", "--samples", "2000"],
    ["verify", "interaction", "--n", "30", "--trials", "2000", "--seed", "7"],
    ["verify", "theorem4-scaling", "--ns", "100,1000,10000"],
]


def main() -> int:
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([tool, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != 0:
            print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = sorted(validator.iter_errors(json.loads(proc.stdout)), key=str)
        if errors:
            failures += 1
            for err in errors:
                print(f"FAIL {label}: {err.message} at {list(err.absolute_path)}")
        else:
            print(f"ok   {label}")
    bad = {"command": "exact moments", "n": 9, "statistic": "T", "mean": 8, "variance": "23/9"}
    if validator.is_valid(bad):
        print("FAIL schema accepts a numeric rational")
        failures += 1
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
