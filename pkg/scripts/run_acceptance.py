"""Run the acceptance module and print one PASS/FAIL line per criterion."""

import subprocess
import sys
from pathlib import Path

root = Path(__file__).resolve().parents[1]
proc = subprocess.run(
    [sys.executable, "-m", "pytest", "-q", "-p", "no:cacheprovider", str(root / "tests" / "test_acceptance.py")],
    cwd=root,
    capture_output=True,
    text=True,
)
lines = [l for l in proc.stdout.splitlines() if l.startswith("criterion ")]
print("\n".join(lines) if lines else proc.stdout)
sys.exit(proc.returncode)
