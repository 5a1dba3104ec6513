"""Rerun the brute-force oracle and rewrite tests/golden.py."""
from __future__ import annotations

import argparse
import pprint
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(ROOT / "tests"))

import oracle_bruteforce as ob  # noqa: E402

HEADER = '''"""Values produced by ``oracle_bruteforce.py`` and frozen here.

Regenerate with ``python3 tests/oracle_bruteforce.py``; the live
comparison lives in ``test_oracle.py``.
"""

'''


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--check", action="store_true", help="compare only, do not write")
    a = p.parse_args()
    frozen = {}
    for label, case in ob.ENTRIES.items():
        out = ob.analyse(*case)
        out.pop("cartan")
        frozen[label] = (case, {k: tuple(v) if isinstance(v, list) else v for k, v in out.items()})
    target = ROOT / "tests" / "golden.py"
    if a.check:
        ns: dict = {}
        exec(target.read_text(), ns)
        same = ns["ORACLE"] == frozen
        print("golden values up to date" if same else "golden values differ from oracle")
        raise SystemExit(0 if same else 1)
    body = "ORACLE = {\n" + "".join(f"    {k!r}: {v!r},\n" for k, v in frozen.items()) + "}\n"
    target.write_text(HEADER + body)
    print(f"wrote {len(frozen)} entries to {target}")


if __name__ == "__main__":
    main()
