"""Check the rerouted M_n over a range of odd n and print a table."""
import argparse
import time

from kncross import z_value
from kncross.freeness import check_dprime


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=5)
    ap.add_argument("--hi", type=int, default=41)
    args = ap.parse_args()
    print(f"{'n':>4} {'Z(n)':>8} {'ok':>4} {'secs':>7}  failed checks")
    for n in range(args.lo | 1, args.hi + 1, 2):
        t = time.perf_counter()
        rep = check_dprime(n)
        bad = ", ".join(c.name for c in rep.failures())
        print(f"{n:>4} {z_value(n):>8} {'yes' if rep.passed else 'no':>4} {time.perf_counter() - t:>7.3f}  {bad}")


if __name__ == "__main__":
    main()
