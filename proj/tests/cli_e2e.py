#!/usr/bin/env python3
"""End-to-end checks of the flagspec executable.

usage: cli_e2e.py FLAGSPEC GOLDEN_DIR [--update]
"""

import json
import os
import subprocess
import sys
from fractions import Fraction
from pathlib import Path

GOLDEN = {
    "describe_cp2": ["describe", "A", "2", "--nodes", "1"],
    "describe_p1": ["describe", "A", "1", "--nodes", "1"],
    "describe_a2_full": ["describe", "A", "2", "--nodes", "1,2"],
    "spinc_cp2": ["spinc-check", "A", "2", "--nodes", "1", "--line-bundle", "1"],
    "theta_cp2": ["theta-spectrum", "A", "2", "--nodes", "1", "--theta", "3", "--kahler", "1"],
    "spectrum_cp2": ["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "1"],
    "spectrum_b3": ["spectrum", "B", "3", "--nodes", "1,3", "--line-bundle", "1,2", "--kahler", "1/2,3"],
    "min_cp2": ["min", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "1"],
    "bound_cp2_ke": ["bound", "A", "2", "--nodes", "1", "--line-bundle", "-1", "--kahler", "1",
                     "--kahler-units", "pi", "--scalar-target", "auto-ke"],
    "harmonic_cp2_top": ["harmonic", "A", "2", "--nodes", "1", "--line-bundle", "-3"],
    "scan_cp2": ["scan", "A", "2", "--nodes", "1", "--q-range=-3:3"],
    "scan_p1": ["scan", "A", "1", "--nodes", "1", "--q-range", "0:2"],
    "e8_summary": ["spectrum", "E", "8", "--nodes", "1,2,3,4,5,6,7,8", "--line-bundle", "2,2,2,2,2,2,2,2",
                   "--kahler", "1,1,1,1,1,1,1,1", "--max-distinct", "1"],
}

# (arguments, expected exit code)
EXIT_MATRIX = [
    (["describe", "A", "2", "--nodes", "1"], 0),
    (["describe", "--type", "A", "--rank", "2", "--nodes", "1"], 0),
    (["scan", "A", "2", "--nodes", "1", "--q-range", "0:0"], 0),
    (["describe", "A", "2"], 1),
    (["describe", "A", "0", "--nodes", "1"], 1),
    (["describe", "A", "2", "--nodes", "3"], 1),
    (["frobnicate", "A", "2", "--nodes", "1"], 1),
    (["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1"], 1),
    (["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1,1", "--kahler", "1"], 1),
    (["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "0.5"], 1),
    (["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "1", "--kahler-units", "tau"], 1),
    (["harmonic", "A", "2", "--nodes", "1", "--line-bundle", "0"], 2),
    (["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "-1"], 2),
    (["min", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "1", "--scalar-target", "8*pi^-1"], 2),
    (["theta-spectrum", "A", "2", "--nodes", "1", "--theta", "1", "--kahler", "1", "--scalar-target", "8*pi"], 0),
]

failures = []


def run(exe, args, env=None, check_code=None):
    proc = subprocess.run([exe, *args], capture_output=True, text=True, env=env)
    if check_code is not None and proc.returncode != check_code:
        failures.append(f"{' '.join(args)}: exit {proc.returncode}, expected {check_code}\n{proc.stderr}")
    return proc


def expect(cond, what):
    if not cond:
        failures.append(what)


def main():
    exe, golden_dir = sys.argv[1], Path(sys.argv[2])
    update = "--update" in sys.argv[3:]
    env = {k: v for k, v in os.environ.items() if k != "FLAGSPEC_MAX_DISTINCT"}

    for name, args in GOLDEN.items():
        out = run(exe, [*args, "--json"], env=env, check_code=0).stdout
        path = golden_dir / f"{name}.json"
        if update:
            path.write_text(out)
            continue
        expect(path.exists() and path.read_text() == out, f"golden mismatch: {name}")
        doc = json.loads(out)
        expect(doc["schema_version"] == 1, f"{name}: schema_version")
        expect(json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n" == out, f"{name}: keys not sorted")
        # table output is deterministic too
        expect(run(exe, args, env=env).stdout == run(exe, args, env=env).stdout, f"{name}: table not deterministic")

    for args, code in EXIT_MATRIX:
        proc = run(exe, args, env=env, check_code=code)
        if code == 2:
            expect(proc.stderr.startswith("error ["), f"{' '.join(args)}: diagnostic missing")
            jproc = run(exe, [*args, "--json"], env=env, check_code=2)
            expect(json.loads(jproc.stdout)["error"]["kind"] in
                   {"not-spinc", "not-kahler", "unit-mismatch", "singular-input"}, f"{' '.join(args)}: error kind")

    # exact values from the documents
    spec = json.loads(run(exe, [*GOLDEN["spectrum_cp2"], "--json"], env=env).stdout)["result"]["spectrum"]
    got = {(Fraction(e["value"]["rational"]), e["value"]["pi_power"]): int(e["multiplicity"]) for e in spec["entries"]}
    expect(got == {(4, 1): 1, (6, 1): 2, (8, 1): 1}, f"spectrum_cp2 values {got}")

    e8 = json.loads(run(exe, [*GOLDEN["e8_summary"], "--json"], env=env).stdout)["result"]["spectrum"]
    expect(e8["truncated"] and e8["total"] == str(2 ** 120), "e8 summary total")

    # the merge cap: flag beats environment beats default
    capped = ["spectrum", "A", "2", "--nodes", "1", "--line-bundle", "1", "--kahler", "1", "--json"]
    env_small = dict(env, FLAGSPEC_MAX_DISTINCT="1")
    doc = json.loads(run(exe, capped, env=env_small, check_code=0).stdout)
    expect(doc["result"]["spectrum"]["truncated"], "environment cap ignored")
    doc = json.loads(run(exe, [*capped, "--max-distinct", "10"], env=env_small, check_code=0).stdout)
    expect(not doc["result"]["spectrum"]["truncated"], "flag does not override environment")
    run(exe, capped, env=dict(env, FLAGSPEC_MAX_DISTINCT="many"), check_code=1)

    if failures:
        print("\n".join(failures))
        print(f"{len(failures)} failure(s)")
        return 1
    print("cli end-to-end: ok" if not update else f"updated {len(GOLDEN)} golden files")
    return 0


if __name__ == "__main__":
    sys.exit(main())
