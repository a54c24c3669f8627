"""Shared record of acceptance outcomes (printed in the pytest summary)."""

LINES = {}


def record(n, ok, detail=""):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}" + (f"  {detail}" if detail else "")
    LINES[n] = line
    print(line)
    return ok
