#!/usr/bin/env python3
"""Run each subcommand with --format json and validate the output against schemas/."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

cli, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
fano = "v 7\ne 0 1 2\ne 0 3 4\ne 0 5 6\ne 1 3 5\ne 1 4 6\ne 2 3 6\ne 2 4 5\n"
two = "v 8\ne 0 1 2 3\ne 4 5 6 7\n"

schemas = {}
registry = Registry()
for path in schema_dir.glob("*.schema.json"):
    doc = json.loads(path.read_text())
    schemas[path.name.removesuffix(".schema.json")] = doc
    resource = Resource.from_contents(doc)
    registry = registry.with_resource(path.name, resource).with_resource(doc["$id"], resource)

cases = [
    ("hypergraph", ["gen", "--family", "fano"], None, 0),
    ("hypergraph", ["gen", "--family", "random", "--v", "12", "--n", "4", "--m", "9"], None, 0),
    ("check", ["check"], fano, 0),
    ("check", ["check", "--h", "1", "--k", "1", "--coloring", "1112222"], fano, 1),
    ("check", ["check", "--k", "2", "--sigma", "sigma: 1 2 3 4 5 6 7 8"], two, 0),
    ("decide", ["decide", "--k", "1"], fano, 0),
    ("decide", ["decide", "--k", "2", "--method", "numeration"], two, 0),
    ("decide", ["decide", "--method", "chains"], fano, 0),
    ("color", ["color", "--k", "2", "--max-trials", "5"], two, 0),
    ("color", ["color", "--algorithm", "naive", "--k", "1", "--max-trials", "5"], fano, 1),
    ("color", ["color", "--algorithm", "prune", "--k", "2", "--eps", "0.5"], two, 0),
    ("search", ["search", "--n", "2", "--k", "1", "--v-max", "3", "--m-max", "3"], None, 0),
    ("search", ["search", "--n", "2", "--k", "1", "--v-max", "4", "--m-max", "2"], None, 1),
    ("bounds", ["bounds", "--n", "30", "--k", "2"], None, 0),
    ("bounds", ["bounds", "--n", "40", "--k", "3", "--h", "4", "--eps", "0.01"], None, 0),
    ("audit", ["audit", "--n", "30", "--k", "2", "--h", "3"], None, 0),
    ("audit", ["audit", "--n", "30", "--n", "40", "--k", "2"], None, 0),
    ("prob", ["prob", "--quantity", "order-stat", "--n", "4", "--k", "2", "--t", "0.5"], None, 0),
    ("prob", ["prob", "--quantity", "dense", "--n", "30", "--k", "2", "--p", "paper-k"], None, 0),
    ("prob", ["prob", "--quantity", "badpair", "--n", "30", "--k", "2", "--h", "1", "--p", "paper-k"], None, 0),
    ("prob", ["prob", "--quantity", "factors", "--n", "30", "--k", "2"], None, 0),
    ("prob", ["prob", "--quantity", "epsilon-window", "--n", "10", "--k", "1"], None, 0),
    ("prob", ["prob", "--quantity", "union-bound", "--n", "4", "--k", "2", "--m", "1"], None, 0),
    ("prob", ["prob", "--quantity", "degree-check", "--n", "30", "--k", "2", "--D", "0"], None, 1),
    ("mc", ["mc", "--target", "order-stat", "--n", "4", "--k", "2", "--t", "0.5", "--trials", "2000"], None, 0),
    ("mc", ["mc", "--target", "badpair", "--n", "8", "--k", "2", "--h", "1", "--p", "0.8",
            "--trials", "2000", "--compare"], None, 0),
]

failures = 0
for name, args, stdin, want in cases:
    proc = subprocess.run([cli, "--format", "json", *args], input=stdin, capture_output=True, text=True)
    label = " ".join(args)
    if proc.returncode != want:
        print(f"FAIL {label}: exit {proc.returncode}, wanted {want}\n{proc.stderr}")
        failures += 1
        continue
    try:
        doc = json.loads(proc.stdout)
        jsonschema.Draft202012Validator(schemas[name], registry=registry).validate(doc)
    except (ValueError, jsonschema.ValidationError) as e:
        print(f"FAIL {label}: {e}")
        failures += 1
        continue
    print(f"ok   {label}")

sys.exit(1 if failures else 0)
