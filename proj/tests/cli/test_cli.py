"""Golden tests for the command-line interface.

Usage: test_cli.py /path/to/latgenus
"""

import json
import os
import subprocess
import sys

BIN = sys.argv[1]

failures = []


def run(*args, env=None):
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=env)


def check(name, cond):
    if cond:
        print(f"{name}: ok")
    else:
        failures.append(name)
        print(f"{name}: FAILED")


def main():
    r = run("reduce", "Q[4,-3,4]")
    check("reduce text", r.returncode == 0 and r.stdout.splitlines()[0] == "Q[4,3,4]"
          and r.stdout.splitlines()[1].startswith("witness: [["))

    r = run("--json", "reduce", "Q[4,-3,4]")
    check("reduce json", json.loads(r.stdout) ==
          {"reduced": [4, 3, 4], "witness": [[0, -1], [1, 0]]})

    r = run("disc", "L[2,0,22]")
    check("disc", r.stdout.strip() == "-44")

    r = run("genus", "L[6,2,8]", "L[2,0,22]")
    check("genus true", r.returncode == 0 and r.stdout.strip() == "same genus: true")

    r = run("genus", "Q[1,0,5]", "Q[2,2,3]")
    check("genus false exits 1", r.returncode == 1 and r.stdout.strip() == "same genus: false")

    r = run("--json", "classgroup", "-44")
    check("classgroup json golden", r.stdout.strip() ==
          '{"d":-44,"h":3,"structure":[3],"classes":[[1,0,11],[3,-2,4],[3,2,4]]}')

    r = run("compose", "-44", "Q[3,2,4]", "Q[3,2,4]")
    check("compose", r.stdout.strip() == "Q[3,-2,4]")

    r = run("equiv", "--proper", "Q[3,2,4]", "Q[3,-2,4]")
    check("equiv proper false", r.returncode == 1)

    r = run("equiv", "--full", "Q[3,2,4]", "Q[3,-2,4]")
    check("equiv full true", r.returncode == 0 and "equivalent: true" in r.stdout)

    r = run("gcount", "L[6,2,8]")
    check("gcount", r.stdout.strip() == "g_sl2 = 3\ng_gl2 = 2")

    r = run("genus-list", "Q[15,10,20]")
    check("genus-list scaled", r.stdout.strip() == "Q[5,0,55] Q[15,-10,20] Q[15,10,20]")

    r = run("--json", "grid", "from-form", "Q[3,2,4]")
    check("grid from-form json", json.loads(r.stdout) ==
          {"D_K": -11, "den": 3, "basis": [[3, 0], [1, 2]], "f": 2, "d": -44})

    r = run("--json", "grid", "product", "Q[3,2,4]", "Q[3,2,4]")
    check("grid product norm form", json.loads(r.stdout)["norm_form"] == [3, -2, 4])

    r = run("table", "verify")
    check("table verify", r.returncode == 0 and r.stdout.strip() == "34/34 rows verified")

    r = run("table", "verify", "--row", "23")
    check("table verify row", r.returncode == 0 and r.stdout.strip() == "1/1 rows verified")

    r = run("--json", "table", "verify")
    data = json.loads(r.stdout)
    check("table verify json", data["passed"] == 34 and data["total"] == 34
          and data["rows"][0]["d"] == -44)

    r = run("table", "export", "--csv")
    lines = r.stdout.splitlines()
    check("table export csv", lines[0] == "index,dynkin,t1_2a,t1_b,t1_2c,t2_2a,t2_b,t2_2c"
          and lines[1] == "1,E8+A10+A1,6,2,8,2,0,22" and len(lines) == 35)

    r = run("--json", "conjugate", "L[30,10,40]", "L[10,0,110]")
    cert = json.loads(r.stdout)
    check("conjugate json", r.returncode == 0 and cert["verified"] and cert["m"] == 5
          and cert["sqrt_class"] == [3, 2, 4])

    r = run("search", "-50", "-40")
    check("search", r.returncode == 0 and "d = -44:" in r.stdout)

    r = run("nonsense")
    check("unknown subcommand exits 2", r.returncode == 2)

    r = run("reduce", "Q[1,2]")
    check("malformed literal exits 2", r.returncode == 2)

    r = run("reduce", "L[3,1,5]")
    check("odd lattice literal exits 2", r.returncode == 2)

    env = dict(os.environ, GENUS_SEARCH_BOUND="4")
    r = run("search", "-6000", "-1", env=env)
    check("search budget from env", r.returncode == 2 and "budget" in r.stderr)

    if failures:
        print(f"{len(failures)} CLI check(s) failed: {failures}")
        return 1
    print("all CLI checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
