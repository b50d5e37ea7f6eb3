"""Block decomposition of M_n: per-block closed forms against enumeration."""
import argparse

from kncross.canonical import block_decomposition, verify_blocks


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--lo", type=int, default=8)
    ap.add_argument("--hi", type=int, default=80)
    ap.add_argument("--show", type=int, help="print every block value for this n")
    args = ap.parse_args()
    if args.show:
        dec = block_decomposition(args.show)
        for name, value in dec.closed_forms.items():
            print(f"{name:>3} size={len(dec.blocks[name]):>4} sigma-sum={value}")
        print("\n".join(verify_blocks(args.show).lines()))
        return
    failed = [n for n in range(args.lo, args.hi + 1) if not verify_blocks(n).passed]
    print(f"n={args.lo}..{args.hi}: {'all blocks verified' if not failed else f'failures at {failed}'}")


if __name__ == "__main__":
    main()
