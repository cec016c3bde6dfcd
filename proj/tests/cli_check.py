"""Runs the orbita CLI on fixed cases and checks exit codes, key results,
schema conformance and byte-for-byte determinism."""

import json
import subprocess
import sys

import jsonschema


def run(binary, args):
    proc = subprocess.run([binary, *args], capture_output=True, text=True, timeout=300)
    return proc.returncode, proc.stdout


def main():
    binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path) as fh:
        schema = json.load(fh)
    validator = jsonschema.Draft202012Validator(schema)

    cases = [
        (["classify", "--partition", "4,4,3,3,2,2"], 0,
         lambda r: r["results"]["special"] and r["results"]["kl_alpha"] == [4, 4, 3, 3, 2, 2]),
        (["classify", "--partition", "5,2,2,1"], 0,
         lambda r: not r["results"]["special"] and r["results"]["local_cover_degree"] == 8),
        (["classify", "--partition", "3"], 2, lambda r: r["error"]["code"] == "OddTotal"),
        (["classify", "--partition", "4,2"], 2, lambda r: r["error"]["code"] == "NotTypeD"),
        (["classify", "--partition", "a,b"], 2, lambda r: r["error"]["code"] == "ParseError"),
        (["collapse", "--partition", "4,4,4,2,2,2"], 0, lambda r: r["results"]["collapsed"] == [4, 4, 3, 3, 2, 2]),
        (["induce", "--gl", "6,3", "--q", "0"], 0,
         lambda r: r["results"]["d_P"] == [4, 4, 4, 2, 2, 2] and r["results"]["orbit"] == [4, 4, 3, 3, 2, 2]
         and r["results"]["i_set"] == [3] and r["results"]["springer_degree"] == 1),
        (["induce", "--gl", "1", "--q", "2"], 2, lambda r: r["error"]["code"] == "InvalidLevi"),
        (["polarize", "--partition", "4,4,3,3,2,2"], 0, lambda r: len(r["results"]["polarizations"]) == 1),
        (["base-report", "--partition", "4,4,3,3,2,2", "--levi", "6,3:0", "--genus", "2"], 0,
         lambda r: r["results"]["ledger"]["adjoined"] == ["sqrt c_8", "sqrt p_1", "sqrt p_3"]
         and r["results"]["ledger"]["components_dP"] == 2 and r["results"]["ledger"]["degree_per_component"] == 1),
        (["verify", "--suite", "series", "--seed", "3", "--trials", "20"], 0, None),
        (["verify", "--suite", "veronese", "--seed", "3", "--trials", "50"], 0, None),
        (["verify", "--suite", "local", "--seed", "3", "--trials", "5"], 0, None),
        (["sweep", "--max-2n", "14", "--check", "all"], 0, lambda r: all(c["pass"] for c in r["checks"])),
    ]

    failures = 0
    for args, want_exit, predicate in cases:
        code, out = run(binary, args)
        label = " ".join(args)
        try:
            report = json.loads(out)
            validator.validate(report)
            ok = code == want_exit and (predicate is None or predicate(report))
        except (json.JSONDecodeError, jsonschema.ValidationError, KeyError, TypeError) as exc:
            ok = False
            label += f" ({type(exc).__name__}: {exc})"
        if ok and code == 0:
            ok = report.get("error") is None and all(c["pass"] for c in report["checks"])
        print(("ok   " if ok else "FAIL ") + label + f" [exit {code}]")
        failures += 0 if ok else 1

    # determinism across worker counts
    seeded = ["verify", "--suite", "local", "--seed", "11", "--trials", "4"]
    _, one = run(binary, seeded + ["--jobs", "1"])
    _, four = run(binary, seeded + ["--jobs", "4"])
    same = one == four
    print(("ok   " if same else "FAIL ") + "verify output independent of --jobs")
    failures += 0 if same else 1

    code, out = run(binary, ["classify", "--partition", "4,4,3,3,2,2", "--format", "table"])
    table_ok = code == 0 and "PASS" in out and "special" in out
    print(("ok   " if table_ok else "FAIL ") + "table rendering")
    failures += 0 if table_ok else 1

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
