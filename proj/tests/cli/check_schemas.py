#!/usr/bin/env python3
"""Validates the CLI's JSON output against the shipped schemas."""
import json
import subprocess
import sys
from pathlib import Path

import jsonschema

cli, root = sys.argv[1], Path(sys.argv[2])
schema = {p.stem.split(".")[0]: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}


def run(*args):
    return json.loads(subprocess.run([cli, *args, "--format", "json"], check=True, capture_output=True, text=True).stdout)


for group, arr in [("G(2,1,4)", "A_4(2)"), ("G(3,3,3)", "A_3^0(3)"), ("H3", ""), ("F4", "")]:
    args = ["--group", group] + (["--arrangement", arr] if arr else [])
    jsonschema.validate(run("poincare", *args), schema["invariant_report"])
    for entry in run("invariant-basis", *args)["entries"]:
        for x in entry["projections"]:
            jsonschema.validate(x, schema["os_element"])

for name in ("H3", "F4"):
    jsonschema.validate(json.loads((root / "data" / f"{name}.json").read_text()), schema["group"])
print("schemas ok")
