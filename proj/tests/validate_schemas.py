"""Validates the shipped fixtures and golden reports against schemas/."""

import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource

root = pathlib.Path(sys.argv[1])
schemas = {p.name: json.loads(p.read_text()) for p in (root / "schemas").glob("*.schema.json")}
registry = Registry().with_resources(
    (name, Resource.from_contents(s)) for name, s in schemas.items())

CASES = {
    "fixtures/terminal.json": "presentation",
    "fixtures/discrete2.json": "presentation",
    "fixtures/chaotic2.json": "presentation",
    "fixtures/bool-delooping.json": "presentation",
    "fixtures/zmod2-delooping.json": "presentation",
    "fixtures/delta2.json": "presentation",
    "fixtures/bool-leq.json": "displayed",
    "fixtures/discrete2-fullsub.json": "displayed",
    "fixtures/discrete2-fullsub-identity.json": "disp_biequivalence",
    "fixtures/poset2.json": "category",
    "fixtures/point.json": "category",
    "fixtures/cwf-point.json": "cwf",
    "fixtures/cwf-empty-terms.json": "cwf",
    "fixtures/bool-yoneda-presheaf.json": "cat_psfunctor",
    "tests/golden/check-terminal.json": "report",
    "tests/golden/univalence-zmod2.json": "univalence_report",
    "tests/golden/univalence-delta2.json": "univalence_report",
    "tests/golden/cwf-point.json": "cwf_report",
    "tests/golden/cwf-empty-terms.json": "cwf_report",
    "tests/golden/yoneda-bool.json": "yoneda_report",
    "tests/golden/fuzz-3-20.json": "fuzz_summary",
    "tests/golden/find-invertible-zmod2.json": "find_result",
}

failed = 0
for doc, schema in CASES.items():
    name = schema + ".schema.json"
    validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
    errors = list(validator.iter_errors(json.loads((root / doc).read_text())))
    status = "ok" if not errors else "FAILED"
    print(f"{doc}: {name} {status}")
    for e in errors[:3]:
        print("   ", e.json_path, e.message[:200])
    failed += bool(errors)

# A broken document must be rejected.
bad = json.loads((root / "fixtures/terminal.json").read_text())
bad["bogus"] = 1
if not list(jsonschema.Draft202012Validator(schemas["presentation.schema.json"], registry=registry).iter_errors(bad)):
    print("unknown key accepted")
    failed += 1

sys.exit(1 if failed else 0)
