"""Run the acceptance suite and print only the per-criterion summary."""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent


def main():
    proc = subprocess.run([sys.executable, "-m", "pytest", "-q",
                           str(ROOT / "tests" / "test_acceptance.py")],
                          cwd=ROOT, capture_output=True, text=True)
    out = proc.stdout
    start = out.find("acceptance criteria")
    print(out[out.rfind("\n", 0, start) + 1:] if start >= 0 else out)
    return proc.returncode


if __name__ == "__main__":
    sys.exit(main())
