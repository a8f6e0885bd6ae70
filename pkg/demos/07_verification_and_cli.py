"""Self-check suites and the command-line interface.

Run: python3 demos/07_verification_and_cli.py
"""
import subprocess
import sys

from probfe.verify import run_suite

for suite in ("orthogonality", "closedforms", "identities"):
    checks = run_suite(suite, 6)
    print(f"{suite:<14} {sum(c.ok for c in checks)}/{len(checks)} checks pass")

# The same suites, tables, families and expansions are available from the
# shell as `probfe ...` or `python3 -m probfe ...`.
for argv in (
    ["stirling", "--family", "s1y", "--rv", "exponential", "--param", "alpha=1", "--nmax", "3", "--format", "csv"],
    ["expand", "--poly", "x^2", "--rv", "poisson", "--param", "alpha=2", "--u", "-1", "--order", "2", "--verify"],
):
    print("\n$ probfe", " ".join(argv))
    out = subprocess.run([sys.executable, "-m", "probfe", *argv], capture_output=True, text=True)
    print(out.stdout.rstrip())
