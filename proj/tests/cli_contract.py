"""CLI contract: exit codes, schema validity of every --json document, and
byte-identical output for identical argv (timestamp excluded)."""
import json
import os
import re
import subprocess
import sys
import tempfile

import jsonschema

FWB, ROOT = sys.argv[1], sys.argv[2]
SCHEMAS = os.path.join(ROOT, "schemas")
CORPUS = os.path.join(ROOT, "corpus")
failures = []


def schema_for(doc):
    kind = doc["schema"].split("/")[0].removeprefix("fwb.")
    with open(os.path.join(SCHEMAS, kind + ".schema.json")) as f:
        return json.load(f)


def run(args):
    p = subprocess.run([FWB, *args], capture_output=True, text=True, timeout=600)
    return p.returncode, p.stdout, p.stderr


def strip_timestamp(text):
    return re.sub(r'\n  "timestamp": "[^"]*",?', "", text)


def check(name, args, exit_code=0, expect=None, deterministic=False):
    code, out, err = run(args + ["--json"])
    if code != exit_code:
        failures.append(f"{name}: exit {code}, expected {exit_code}; stderr={err.strip()} out={out[:300]}")
        return None
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, schema_for(doc))
    except (ValueError, jsonschema.ValidationError) as e:
        failures.append(f"{name}: invalid document: {str(e)[:400]}")
        return None
    if expect:
        for key, value in expect.items():
            if doc.get(key) != value:
                failures.append(f"{name}: {key}={doc.get(key)!r}, expected {value!r}")
    if deterministic:
        _, again, _ = run(args + ["--json"])
        if strip_timestamp(again) != strip_timestamp(out):
            failures.append(f"{name}: output differs between identical runs")
    # Table mode exits the same way and prints something.
    tcode, tout, _ = run(args)
    if tcode != exit_code or (exit_code == 0 and not tout.strip()):
        failures.append(f"{name}: table mode exit {tcode}")
    return doc


def ring(label):
    return ["--ring", os.path.join(CORPUS, label + ".json")]


check("corpus", ["corpus"])
check("gb", ring("fermat2") + ["gb", "--ideal", "y,z"], deterministic=True)
check("nf", ring("fermat2") + ["nf", "--poly", "x^4", "--ideal", "y,z"],
      expect={"normal_form": "0", "member": True})
check("dim", ring("two-planes") + ["dim"], expect={"dim": 2})
check("colon", ring("regular") + ["colon", "--ideal", "x^2,x*y", "--by", "x"],
      expect={"result": ["y", "x"]})
check("sat", ring("depth0") + ["sat", "--ideal", "0"], expect={"result": ["x"], "exponent": 1})
check("filter-check pass", ring("regular") + ["filter-check", "--seq", "x,y"],
      expect={"regular": True, "system_of_parameters": True})
check("filter-check fail", ring("depth0") + ["filter-check", "--seq", "x"], exit_code=1,
      expect={"regular": False})
check("sop-random", ring("fermat2") + ["sop-random", "--seed", "5"], deterministic=True)
check("frobenius power", ring("fermat2") + ["frobenius", "power", "--ideal", "y,z", "--e", "1"])
check("frobenius preimage", ring("regular") + ["frobenius", "preimage", "--ideal", "x^4,y^4", "--e", "1",
                                               "--route", "elimination"],
      expect={"result": ["y^2", "x^2"], "route": "elimination"})
check("frobenius closure", ring("fermat2") + ["frobenius", "closure", "--ideal", "y,z"],
      expect={"stabilized_at": 1})
check("frobenius fte", ring("fermat2") + ["frobenius", "fte", "--ideal", "y,z"], expect={"fte": 1})
check("fte", ring("fermat2") + ["fte", "--ideal", "y,z"], expect={"fte": 1})
check("fte-scan", ring("fermat2") + ["fte-scan", "--jobs", "2"], expect={"max_fte": 1}, deterministic=True)
check("fte-scan empty", ["--ring", "corpus:depth0", "fte-scan", "--samples", "0", "--power-max", "1"])
check("hsl fermat7", ring("fermat7") + ["hsl"], expect={"overall": 0, "stable": True}, deterministic=True)
check("hsl fermat2", ring("fermat2") + ["hsl", "--emax", "2"], expect={"overall": 1, "stable": True})
check("ns-check", ring("two-planes") + ["ns-check", "--trunc", "6"], expect={"status": "pass"},
      deterministic=True)
check("prop34", ring("fermat2") + ["prop34-check", "--t", "2", "--n", "1", "--e", "1"],
      expect={"status": "pass"})
for label in ["regular", "regular3", "fermat2", "fermat7", "two-planes", "depth0"]:
    check(f"verify-inequality {label}", ring(label) + ["verify-inequality"], expect={"status": "pass"})

# Worker count never changes a result.
for cmd in (["fte-scan"], ["hsl"], ["verify-inequality"]):
    outs = {run(ring("fermat2") + cmd + ["--json", "--no-timestamp", "--jobs", j])[1] for j in ("1", "4")}
    if len(outs) != 1:
        failures.append(f"{cmd[0]}: output depends on --jobs")

# Usage errors, bad input, resource caps.
check("missing ring", ["gb", "--ideal", "x"], exit_code=2)
check("unknown option", ["corpus", "--bogus"], exit_code=2)
check("bad polynomial", ring("regular") + ["gb", "--ideal", "x+*y"], exit_code=2)
check("unknown variable", ring("regular") + ["gb", "--ideal", "w"], exit_code=2)
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as bad:
    json.dump({"p": 4, "vars": ["x"], "relations": []}, bad)
doc = check("non-prime characteristic", ["--ring", bad.name, "dim"], exit_code=2)
if doc and "characteristic not prime" not in doc["error"]["message"]:
    failures.append("non-prime characteristic: message lacks 'characteristic not prime'")
os.unlink(bad.name)
check("pair cap", ring("regular3") + ["gb", "--ideal", "x^5+y^4*z+z^3, y^5+x*z^3, z^5+x^2*y^2",
                                      "--max-pairs", "2"], exit_code=3)
check("prop34 truncation", ring("fermat2") + ["prop34-check", "--n", "3", "--e", "2"], exit_code=2)

for f in failures:
    print("FAIL", f)
print(f"cli contract: {len(failures)} failure(s)")
sys.exit(1 if failures else 0)
