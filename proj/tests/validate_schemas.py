#!/usr/bin/env python3
"""Run every fibkit subcommand with --format json and validate the output."""

import json
import pathlib
import subprocess
import sys
import tempfile

from jsonschema import Draft202012Validator
from referencing import Registry, Resource


def load_registry(schema_dir):
    schemas = {}
    for path in sorted(schema_dir.glob("*.schema.json")):
        doc = json.loads(path.read_text())
        Draft202012Validator.check_schema(doc)
        schemas[doc["$id"]] = doc
    registry = Registry().with_resources((sid, Resource.from_contents(doc)) for sid, doc in schemas.items())
    return schemas, registry


def run(cli, args, expect):
    proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, text=True, check=False)
    if proc.returncode != expect:
        raise AssertionError(f"{args}: exit {proc.returncode}, expected {expect}\n{proc.stderr}")
    return json.loads(proc.stdout)


def main():
    cli = sys.argv[1]
    schemas, registry = load_registry(pathlib.Path(sys.argv[2]))

    def validator(name):
        return Draft202012Validator(schemas[f"urn:fibkit:{name}"], registry=registry)

    cases = [
        ("seq", ["seq", "fib", "-4"], 0),
        ("seq", ["seq", "lucas", "100"], 0),
        ("seq", ["seq", "gen", "-7", "--seed", "3,7"], 0),
        ("check_outcome", ["check", "master", "--a", "2", "--b", "1", "--m", "3", "--n", "0"], 0),
        ("check_outcome", ["check", "ruggles", "--printed", "--n", "2", "--k", "1"], 1),
        ("check_outcome", ["check", "vd3kfav", "--a", "1", "--b", "0", "--m", "2", "--n", "2", "--k", "3"], 3),
        ("check_outcome", ["check", "vd3kfav", "--a", "1", "--b", "0", "--m", "2", "--n", "5", "--k", "2"], 0),
        ("sweep_report", ["sweep", "--k", "0..1"], 0),
        ("sweep_report", ["sweep", "--identities", "ruggles,vajda19_gen", "--printed", "--default-seeds"], 1),
        ("identity_list", ["list"], 0),
        ("identity_list", ["list", "--family", "reciprocal_sum"], 0),
        ("bench", ["bench", "2000", "--reps", "1"], 0),
        ("bench", ["bench", "20000", "--reps", "1"], 0),
    ]

    failures = 0
    with tempfile.TemporaryDirectory() as tmp:
        out = pathlib.Path(tmp) / "report.json"
        run(cli, ["sweep", "--identities", "ruggles", "--printed", "--out", str(out)], 1)
        cases_done = [("sweep_report", "--out file", json.loads(out.read_text()))]
        for name, args, expect in cases:
            cases_done.append((name, " ".join(args), run(cli, args, expect)))

    for name, label, doc in cases_done:
        errors = list(validator(name).iter_errors(doc))
        status = "ok" if not errors else "INVALID"
        print(f"{status:8} {name:14} {label}")
        for e in errors[:5]:
            print(f"         {list(e.absolute_path)}: {e.message[:200]}")
        failures += bool(errors)

    # mutated documents must be rejected
    by_name = {name: doc for name, _, doc in reversed(cases_done)}
    mutants = [
        ("seq", dict(by_name["seq"], value=5)),
        ("seq", dict(by_name["seq"], kind="gen", seed=None)),
        ("check_outcome", dict(by_name["check_outcome"], holds=None)),
        ("check_outcome", dict(by_name["check_outcome"], lhs="1.5")),
        ("sweep_report", {k: v for k, v in by_name["sweep_report"].items() if k != "wall_time"}),
        ("identity_list", [dict(by_name["identity_list"][0], family="other")]),
        ("bench", dict(by_name["bench"], reps=0)),
    ]
    for name, doc in mutants:
        if validator(name).is_valid(doc):
            print(f"ACCEPTED {name:14} mutated document")
            failures += 1

    print(f"{len(cases_done) - failures} of {len(cases_done)} documents valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
