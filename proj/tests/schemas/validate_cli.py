"""Validates sncalc --json output against tools/schemas."""

import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

sncalc, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
registry = Registry().with_resources([(k, Resource.from_contents(v)) for k, v in schemas.items()])


def run(*args):
    out = subprocess.run([sncalc, "--json", *args], capture_output=True, text=True, check=False).stdout
    envelope = json.loads(out)
    jsonschema.validate(envelope, schemas["envelope.schema.json"], registry=registry)
    return envelope["payload"]


def check(obj, name):
    jsonschema.validate(obj, schemas[name], registry=registry)


check(run("mul", "--n", "2", "x1*y2", "3/2 - y1"), "element.schema.json")
check(run("normalize", "0"), "element.schema.json")
check(run("spec", "maximals", "--n", "2", "--point", '{"1":1,"2":"1/2"}'), "prime.schema.json")
for p in run("spec", "height-one", "--n", "3"):
    check(p, "prime.schema.json")
check(run("ideal", "sum", "--n", "1", "--", '{"kind":"s1","a":"x-1"}', '{"kind":"s1","a":"(x-1)^2"}'),
      "ideal.schema.json")
for I in run("lattice", "enum", "--n", "2"):
    check(I, "ideal.schema.json")
for r in run("resolve", "koszul", "--n", "2", "--lambda", "1,2", "--trunc", "4")["reports"]:
    check(r, "exactness.schema.json")
run("normalize", "x1 +")
print("schema validation passed")
