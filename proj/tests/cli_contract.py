#!/usr/bin/env python3
"""CLI contract: exit codes, JSON reports against the schema, CSV quoting.

usage: cli_contract.py <simulgame executable> <report.schema.json>
"""
import csv
import io
import json
import os
import subprocess
import sys

import jsonschema

EXE, SCHEMA_PATH = sys.argv[1], sys.argv[2]
with open(SCHEMA_PATH) as f:
    SCHEMA = json.load(f)
VALIDATOR = jsonschema.Draft202012Validator(SCHEMA)

failures = []


def run(*args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([EXE, *args], capture_output=True, text=True, env=full_env, timeout=300)


def check(name, cond, info=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f"  {info}"))
    if not cond:
        failures.append(name)


def report(*args, env=None):
    r = run(*args, "--format", "json", env=env)
    try:
        doc = json.loads(r.stdout)
    except json.JSONDecodeError:
        return r, None
    errors = sorted(VALIDATOR.iter_errors(doc), key=str)
    check("schema " + " ".join(args), not errors, errors[0].message if errors else "")
    return r, doc


# eval, every measure
r, doc = report("eval", "sq{1}{2}(3)")
check("eval ex exit 0", r.returncode == 0, r.stderr)
check("eval ex value", doc and doc["value"] == "1/2", r.stdout)

r, doc = report("eval", "sq{1}{2}(2) + sq{1}{2}(2)", "--measure", "outcome")
check("eval outcome", doc and doc["value"] == "L", r.stdout)

r, doc = report("eval", "sq'{1}{2}(5)", "--measure", "index")
check("eval index fields", doc and {"ell", "arr"} <= doc.keys(), r.stdout)

r, doc = report("eval", "sq'{1,4}{2}(4)", "--measure", "matrix")
check("eval matrix values", doc and doc["values"] == [["-1", "1"], ["1", "-1"], ["0", "0"], ["0", "0"]], r.stdout)

r, doc = report("eval", "sq{1}{2}(3)", "--measure", "strategies")
check("eval strategies", doc and len(doc["left"]) == 2 and doc["value"] == "1/2", r.stdout)

r, doc = report("eval", "cl[__;2]", "--measure", "score", "--convention", "scoring")
check("eval score", doc and doc["value"] == "2", r.stdout)

r, doc = report("eval", "cl:K5", "--convention", "scoring", "--decimal", "3")
check("eval decimal", doc and doc["value"] == "1.500", r.stdout)

r = run("eval", "sq{1}{2}(3)")
check("eval text", r.stdout.strip() == "1/2", r.stdout)

# CSV quoting: the expression contains commas and must be quoted.
r = run("eval", "sq'{1,4}{2}(4)", "--format", "csv")
rows = list(csv.reader(io.StringIO(r.stdout)))
check("csv header", rows and rows[0] == ["expr", "convention", "measure", "value"], r.stdout)
check("csv quoted expr", len(rows) == 2 and rows[1][0] == "sq'{1,4}{2}(4)", r.stdout)
check("csv raw quoting", '"sq\'{1,4}{2}(4)"' in r.stdout, r.stdout)

# memo limit from the environment does not change values
r, doc = report("eval", "cl:K6", "--convention", "scoring", env={"SIMULGAME_MEMO_LIMIT": "10"})
check("memo limit env", doc and doc["value"] == "2", r.stdout + r.stderr)

# parallel flag
r, doc = report("eval", "cl:K6", "--convention", "scoring", "--parallel")
check("parallel flag", doc and doc["value"] == "2", r.stdout + r.stderr)

# table
r = run("table", "sq{1}{2}", "--n-max", "25")
rows = list(csv.reader(io.StringIO(r.stdout)))
check("table csv rows", r.returncode == 0 and len(rows) == 27 and rows[0] == ["n", "ex", "ell", "arr"], r.stdout)
check("table n=3", rows[4][:2] == ["3", "1/2"], rows[4] if len(rows) > 4 else "")
r, doc = report("table", "sq'{1}{2}", "--n-max", "6")
check("table json", doc and doc["rows"][5]["ex"] == "-1/4", r.stdout)

# reduce
r, doc = report("reduce", "sq'{1,4}{1,3}(4)")
check("reduce exit 0", r.returncode == 0, r.stderr)
check("reduce keeps fewer rows", doc and len(doc["rows_kept"]) < doc["rows_before"], r.stdout)
r = run("reduce", "sq{1}{2}(2) + sq{1}{2}(2)")
check("reduce refuses sums", r.returncode == 3 and "RefusesSum" in r.stderr, r.stderr)

# error exit codes
r = run("eval", "sq{1}{2}(3")
check("parse error exit 2", r.returncode == 2, r.returncode)
check("parse error caret", "^" in r.stderr and "sq{1}{2}(3" in r.stderr, r.stderr)
r = run("eval", "s(1) + s(2) ^ s(3)")
check("mixed operators exit 2", r.returncode == 2 and "MixedOperators" in r.stderr, r.stderr)
r = run("eval", "hb:nope")
check("unknown ruleset exit 3", r.returncode == 3 and "UnknownRuleset" in r.stderr, r.stderr)
r = run("eval", "sq{1}{2}(3)", "--measure", "score")
check("not terminal exit 3", r.returncode == 3 and "NotTerminal" in r.stderr, r.stderr)
r = run("eval", "sq{1}{2}(3)", "--measure", "bogus")
check("bad flag exit 2", r.returncode == 2, r.returncode)

# verify: exit status mirrors the failed count
r, doc = report("verify", "all")
check("verify exit matches result", doc is not None and r.returncode == (1 if doc["failed"] else 0), r.returncode)
check("verify covers all criteria", doc and {c["criterion"] for c in doc["checks"]} >= set(range(1, 15)), "")
r, doc = report("verify", "paper")
check("verify paper subset", doc and doc["suite"] == "paper", r.stdout[:200])

print(f"{len(failures)} failed")
sys.exit(1 if failures else 0)
