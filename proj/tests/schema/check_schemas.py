"""Runs every --json subcommand and validates the output against schemas/.

usage: check_schemas.py <ctxlab binary> <schemas dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema


def main() -> int:
    binary = sys.argv[1]
    schemas = pathlib.Path(sys.argv[2])
    catalog = schemas.parent / "catalog"
    bug_vec = str(catalog / "specker_bug.vec")
    square_vec = str(catalog / "square4d.vec")

    with tempfile.TemporaryDirectory() as tmp:
        bad_logic = pathlib.Path(tmp, "bad.logic")
        bad_logic.write_text("context a b\ncontext a b c\n")
        bad_vec = pathlib.Path(tmp, "bad.vec")
        bad_vec.write_text("dim 4\n" + "".join(f"vec {i} 1 0 0 0\n" for i in range(1, 13)))
        weights = pathlib.Path(tmp, "w.txt")
        weights.write_text("\n".join(["1/11"] * 11) + "\n")

        runs = [
            ["validate", "--catalog", "pentagon"],
            ["validate", "--logic", str(bad_logic)],
            ["states", "--catalog", "specker_bug"],
            ["states", "--catalog", "specker_bug", "--count"],
            ["classify", "--catalog", "indefinite_fig5c"],
            ["classify", "--catalog", "specker_bug_combo"],
            ["property", "--catalog", "specker_bug", "--given", "a", "--target", "b"],
            ["mixture", "--catalog", "pentagon", "--weights", str(weights)],
            ["hull", "--catalog", "triangle4d"],
            ["hull", "--catalog", "pentagon", "--project", "1,3,5,7,9"],
            ["member", "--catalog", "pentagon", "--point", "1=1/2,3=1/2,5=1/2,7=1/2,9=1/2"],
            ["member", "--catalog", "pentagon", "--weights", str(weights)],
            ["axiom-check", "--catalog", "triangle4d"],
            ["axiom-check", "--catalog", "square4d", "--ineq", "1 + 2 <= 1"],
            ["realization-check", "--catalog", "square4d", "--vectors", square_vec],
            ["realization-check", "--catalog", "square4d", "--vectors", str(bad_vec)],
            ["born", "--catalog", "specker_bug", "--vectors", bug_vec, "--psi", "a"],
            ["violate", "--catalog", "specker_bug", "--vectors", bug_vec, "--psi", "a", "--ineq", "a + b <= 1"],
            ["paste", "--catalog", "tifs_fig5a", "--other-catalog", "tits_fig5b"],
            ["certify-vi", "--catalog", "tifs_fig5a", "--other-catalog", "tits_fig5b", "--given", "a", "--target", "b"],
            ["urn", "--catalog", "pentagon", "--seed", "7", "--context", "3", "--draws", "1000"],
            ["catalog"],
            ["catalog", "--catalog", "specker_bug"],
            ["catalog", "--catalog", "impossible_fig6"],
        ]

        used = set()
        failures = 0
        for args in runs:
            proc = subprocess.run([binary, *args, "--json"], capture_output=True, text=True)
            label = " ".join(args)
            try:
                doc = json.loads(proc.stdout)
                schema = json.loads((schemas / f"{args[0]}.schema.json").read_text())
                jsonschema.validate(doc, schema, cls=jsonschema.Draft202012Validator)
                used.add(args[0])
                print(f"ok    {label}")
            except (json.JSONDecodeError, jsonschema.ValidationError, FileNotFoundError) as e:
                failures += 1
                print(f"FAIL  {label}: {e}\n{proc.stderr}")

    unused = {p.name.removesuffix(".schema.json") for p in schemas.glob("*.schema.json")} - used
    for name in sorted(unused):
        failures += 1
        print(f"FAIL  schema {name} never exercised")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
