"""KE decisions for every Fano T and every r<=2 M with n <= nmax (TSV)."""
import argparse

from grassblow import ke
from grassblow.config import SweepConfig
from grassblow.indices import all_params, rank


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--nmax", type=int, default=SweepConfig().nmax)
    args = ap.parse_args()
    print("space\ts\tp\tn\tdecision\texpected")
    mism = 0
    for s, p, n in all_params(args.nmax):
        if rank(s, p, n) > 2:
            continue
        t = ke.ke_test_T(s, p, n)
        exp = "KE" if n in (2 * s, 2 * p) else "no-KE"
        mism += t.decision != exp
        print(f"T\t{s}\t{p}\t{n}\t{t.decision}\t{exp}")
        m = ke.ke_test_M(s, p, n)
        mism += m.decision != "KE"
        print(f"M\t{s}\t{p}\t{n}\t{m.decision}\tKE")
    print(f"# mismatches: {mism}")


if __name__ == "__main__":
    main()
