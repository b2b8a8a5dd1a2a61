#!/usr/bin/env python3
"""Validate a verify-paper --json report against docs/report.schema.json."""
import argparse
import json
import subprocess
import sys

import jsonschema


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--tool", required=True, help="path to the relalg executable")
    parser.add_argument("--schema", required=True, help="path to report.schema.json")
    args = parser.parse_args()

    run = subprocess.run([args.tool, "verify-paper", "--json"], capture_output=True, text=True)
    if run.returncode not in (0, 1):
        sys.exit(f"verify-paper exited with {run.returncode}: {run.stderr}")
    with open(args.schema) as f:
        schema = json.load(f)
    report = json.loads(run.stdout)
    jsonschema.validate(report, schema)
    ids = [c["id"] for c in report["claims"]]
    if len(ids) != len(set(ids)):
        sys.exit("duplicate claim ids")
    print(f"report valid: {len(ids)} claims, overall {report['overall']}")


if __name__ == "__main__":
    main()
