#!/usr/bin/env python3
"""Integration checks for the pfe command-line tool."""

import json
import subprocess
import sys
import tempfile
import os

BIN = sys.argv[1] if len(sys.argv) > 1 else "pfe"
failures = 0


def run(*args, expect_code=0):
    global failures
    proc = subprocess.run([BIN, *args], capture_output=True, text=True)
    if proc.returncode != expect_code:
        failures += 1
        print(f"FAIL {' '.join(args)}: exit {proc.returncode}, wanted {expect_code}")
        print(proc.stdout)
        print(proc.stderr)
        return None
    print(f"ok   {' '.join(args)} -> exit {proc.returncode}")
    return proc.stdout


def check(name, cond):
    global failures
    if cond:
        print(f"ok   {name}")
    else:
        failures += 1
        print(f"FAIL {name}")


# stirling tables
out = run("stirling", "--family", "s2", "--nmax", "4")
if out:
    doc = json.loads(out)
    check("s2 row 4 has 7 at k=2", doc["rows"][4][2] == "7")
    check("rationals serialized as strings", isinstance(doc["rows"][4][2], str))

out = run("stirling", "--family", "s1y", "--rv", "exponential", "--param", "alpha=1",
          "--nmax", "3")
if out:
    doc = json.loads(out)
    check("exponential s1y cell (2,1) = -2", doc["rows"][2][1] == "-2")

run("stirling", "--family", "s2y", "--nmax", "3", expect_code=2)  # missing --rv
run("stirling", "--family", "nope", "--nmax", "3", expect_code=2)

out = run("stirling", "--family", "s2", "--nmax", "3", "--format", "csv")
if out:
    check("csv third row", out.splitlines()[3] == "0,1,3,1")

# determinism: identical flags give byte-identical output
out2 = run("stirling", "--family", "s1y", "--rv", "exponential", "--param", "alpha=1",
           "--nmax", "3")
out3 = run("stirling", "--family", "s1y", "--rv", "exponential", "--param", "alpha=1",
           "--nmax", "3")
check("byte-identical reruns", out2 == out3 and out2 is not None)

# family
out = run("family", "--u", "1/2", "--nmax", "3")
if out:
    doc = json.loads(out)
    constants = [p[0] for p in doc["polys"]]
    check("family constants 1,-2,6,-26", constants == ["1", "-2", "6", "-26"])

run("family", "--u", "1", "--nmax", "2", expect_code=2)  # u = 1 forbidden

out = run("family", "--u", "-1", "--nmax", "1")
if out:
    doc = json.loads(out)
    check("Euler H_1 = x - 1/2", doc["polys"][1] == ["-1/2", "1"])

# expand
out = run("expand", "--poly", "x", "--u", "1/2", "--theorem", "31", "--verify")
if out:
    doc = json.loads(out)
    check("expand x coefficients", doc["coefficients"] == ["2", "1"])
    check("expand x reconstruction", doc["reconstruction_ok"] is True)

out = run("expand", "--poly", "5", "--u", "1/2", "--theorem", "31")
if out:
    doc = json.loads(out)
    check("constant expands to itself", doc["coefficients"] == ["5"])

out = run("expand", "--poly", "x^2", "--rv", "poisson", "--param", "alpha=2", "--u", "-1",
          "--theorem", "4", "--order", "2", "--verify")
if out:
    doc = json.loads(out)
    check("poisson order-2 roundtrip", doc["reconstruction_ok"] is True)

run("expand", "--poly", "x +", "--u", "1/2", expect_code=2)  # parse error
run("expand", "--poly", "x", "--u", "1", expect_code=2)

# custom moments from a JSON file: geometric(1/2) moments 1, 2, 6
with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
    json.dump({"moments": ["1", "2", "6"]}, f)
    path = f.name
out = run("expand", "--poly", "x^2", "--u", "1/2", "--rv", "custom",
          "--moments-file", path, "--theorem", "31", "--verify")
if out:
    doc = json.loads(out)
    check("custom-model roundtrip", doc["reconstruction_ok"] is True)
os.unlink(path)

# closed forms
out = run("closed", "--target", "falling", "--n", "1", "--u", "1/2", "--rv", "exponential",
          "--param", "alpha=5/2")
if out:
    doc = json.loads(out)
    check("closed falling n=1 coefficients", doc["coefficients"] == ["2", "5/2"])
    check("closed-form source tag", doc["source"] == "closed-form")

run("closed", "--target", "nope", "--n", "1", "--u", "1/2", expect_code=2)

# verify suites
run("verify", "--suite", "orthogonality", "--nmax", "10")
run("verify", "--suite", "identities", "--nmax", "6")
run("verify", "--suite", "all", "--nmax", "0")
run("verify", "--suite", "bogus", "--nmax", "2", expect_code=2)

# usage errors
run("nonsense", expect_code=2)
run(expect_code=2)

print(f"{failures} failure(s)")
sys.exit(1 if failures else 0)
