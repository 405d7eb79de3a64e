"""Smoke tests for the ckq command line tool."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

EXE = sys.argv[1]
SPEC = '{"n":3,"sigma":[2,1,3],"j":["nil","unit"]}'


def run(*args):
    return subprocess.run([EXE, *args], capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + ("" if cond else f": {detail}"))
    return cond


def main():
    ok = True
    r = run("describe", "--spec", SPEC, "--format", "json")
    ok &= check("describe exits 0", r.returncode == 0, r.stderr)
    with tempfile.TemporaryDirectory() as d:
        p = Path(d) / "spec.json"
        p.write_text(r.stdout)
        again = run("describe", "--spec", str(p), "--format", "json")
        ok &= check("describe round trip", again.stdout == r.stdout)
        out = Path(d) / "out.txt"
        run("classify", "--n", "3", "--out", str(out))
        ok &= check("--out writes the file", out.read_text().startswith("N = 3"))
    desc = json.loads(r.stdout)
    ok &= check("describe J", desc["J"] == "j2" and desc["J_contracted"] == "1")

    r = run("describe", "--spec", '{"n":3,"sigma":[1,1,3],"j":["unit","unit"]}')
    ok &= check("bad permutation exits 2", r.returncode == 2, r.returncode)
    r = run("describe", "--spec", '{"n":3,"sigma":[1,2,3],"j":["unit"]}')
    ok &= check("wrong parameter count exits 2", r.returncode == 2, r.returncode)
    r = run("describe", "--spec", "/nonexistent/spec.json")
    ok &= check("missing file exits 2", r.returncode == 2, r.returncode)
    r = run("classify", "--n", "3", "--format", "yaml")
    ok &= check("bad format exits 2", r.returncode == 2, r.returncode)

    formal = '{"n":3,"sigma":[1,3,2],"j":["formal","formal"]}'
    r = run("verify", "--spec", formal)
    ok &= check("verify passes", r.returncode == 0, r.stdout)
    r = run("verify", "--spec", formal, "--perturb-rtilde", "2,3")
    ok &= check("perturbed R-tilde exits 1", r.returncode == 1 and "FAIL Yang-Baxter" in r.stdout, r.stdout)

    r = run("contract", "--spec", SPEC, "--format", "json")
    c = json.loads(r.stdout)
    ok &= check("contract exits 0", r.returncode == 0, r.stdout[-300:])
    ok &= check("contract names the group", c["name"] == "E_z(2)", c["name"])
    ok &= check("contract hopf checks", all(x["ok"] for x in c["hopf_checks"]))
    r = run("contract", "--spec", '{"n":3,"sigma":[1,2,3],"j":["nil","nil"]}', "--J", "")
    ok &= check("J = 1 override exits 1", r.returncode == 1, r.returncode)

    r = run("classify", "--n", "3")
    ok &= check("classify 3 headline", r.stdout.startswith("N = 3, quantum: 4 classes"), r.stdout[:60])
    r = run("classify", "--n", "4", "--shadow")
    ok &= check("classify 4 shadow", "5 classes" in r.stdout.splitlines()[0], r.stdout[:60])
    r = run("classify", "--n", "9")
    ok &= check("unsupported N exits 2", r.returncode == 2, r.returncode)

    a = run("classify", "--n", "4", "--format", "json").stdout
    b = run("classify", "--n", "4", "--format", "json").stdout
    ok &= check("classify output is deterministic", a == b)
    a = run("contract", "--spec", SPEC, "--format", "json").stdout
    b = run("contract", "--spec", SPEC, "--format", "json").stdout
    ok &= check("contract output is deterministic", a == b)
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
