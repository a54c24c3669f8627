"""Reference integrals of the barycenter criterion for M_{p,p,2p}.

    python3 scripts/critm1_integrals.py            # p = 4, 5
    python3 scripts/critm1_integrals.py --p 3 4 5 6
"""
import argparse
import time

from grassblow import ke
from grassblow.config import CritM1Config
from grassblow.linalg import fstr


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--p", type=int, nargs="+", default=list(CritM1Config().ps))
    ap.add_argument("--threads", type=int, default=CritM1Config().threads)
    args = ap.parse_args()
    for p in args.p:
        t0 = time.perf_counter()
        res = ke.ke_test_M(p, p, 2 * p, threads=args.threads)
        dt = time.perf_counter() - t0
        print(f"M_{p},{p},{2 * p}: {res.decision}  ({dt:.2f}s)")
        for k, v in res.certificate.items():
            print(f"  {k:14s} {fstr(v):>60s}  ~ {float(v):.6g}")


if __name__ == "__main__":
    main()
