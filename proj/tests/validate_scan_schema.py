"""Run a scan and validate every JSON line against the record schema."""
import json
import subprocess
import sys

import jsonschema

aag, schema_path = sys.argv[1], sys.argv[2]
with open(schema_path) as f:
    schema = json.load(f)
validator = jsonschema.Draft202012Validator(schema)

runs = [
    ["scan", "--a", "150:165", "--d=-5:10", "--c", "170:186", "--k", "19:20", "--h", "1:4", "--filter", "pivot"],
    ["scan", "--a", "20:60", "--d=-4:4", "--c", "30:90", "--k", "3:4", "--h", "1:3", "--filter", "none", "--all",
     "--oracle-verify"],
    ["scan", "--a", "40:60", "--d=-3:3", "--c", "50:70", "--k", "3:5", "--h", "1:2", "--all", "--fast-only"],
]
total = 0
for args in runs:
    out = subprocess.run([aag, *args], check=True, capture_output=True, text=True).stdout
    for n, line in enumerate(out.splitlines(), 1):
        rec = json.loads(line)
        errors = sorted(validator.iter_errors(rec), key=str)
        if errors:
            print(f"{' '.join(args)}: line {n}: {errors[0].message}")
            sys.exit(1)
        total += 1
print(f"{total} records valid")
if total < 100:
    sys.exit("too few records to be meaningful")
