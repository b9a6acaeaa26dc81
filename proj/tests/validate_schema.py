"""Runs the qalg CLI over a fixed command list and validates every JSON output."""

import json
import subprocess
import sys

import jsonschema

COMMANDS = [
    ["normalize", "--ring", "uq", "E*F", "--json"],
    ["normalize", "--ring", "torus", "y*x - 1", "--json"],
    ["normalize", "--ring", "B", "y^2/(1 - x)", "--json"],
    ["commutator", "--ring", "uq", "E", "F", "--json"],
    ["commutator", "--ring", "torus", "x", "y", "--json"],
    ["casimir", "--json"],
    ["casimir", "--check", "--json"],
    ["phi", "E*F", "--json"],
    ["phi", "K", "--c", "2", "--json"],
    ["ore", "--s", "1 + x", "--a", "y + x*y^-1"],
    ["divmod", "--a", "y^2", "--d", "y - x"],
    ["module", "classify", "--E", "q^-1*K - q^-1", "--F", "-(1/(q - q^-1)^2)*(1 - K^-1)", "--json"],
    ["module", "simple", "--family", "iii", "--mu", "1", "--n", "0", "--x1", "1"],
    ["module", "simple", "--family", "iii", "--x1", "q^3", "--probe-degree", "3"],
    ["module", "simple", "--family", "i", "--probe-degree", "3"],
    ["module", "simple", "--family", "ii", "--mu", "mu", "--n", "2", "--probe-degree", "3"],
    ["module", "generator", "--s", "2", "--sign", "-", "--json", "--compare-recurrence"],
    ["module", "generator", "--s", "1", "--sign", "+", "--json"],
    ["quotient-act", "--alpha", "y - 1", "--elem", "y", "--v", "x^2 + 1", "--json"],
]


def main() -> int:
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in COMMANDS:
        proc = subprocess.run([binary, *args], capture_output=True, text=True, check=False)
        if proc.returncode != 0:
            print(f"FAIL exit {proc.returncode}: {' '.join(args)}\n{proc.stderr}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        status = "ok" if not errors else "FAIL"
        print(f"{status}: {' '.join(args)}")
        for err in errors:
            print(f"  {err.message}")
        failures += bool(errors)
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
