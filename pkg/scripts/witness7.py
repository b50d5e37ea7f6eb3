"""Search single reroutes of optimal K_7 matrices and draw the first witness."""
import argparse
from pathlib import Path

from kncross.optimizer import reroute_space_size, reroute_witness_search
from kncross.render import render_svg
from kncross.io import dumps


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", type=Path, default=Path("witness7"))
    args = ap.parse_args()
    res = reroute_witness_search(7)
    print(f"single-reroute space: {reroute_space_size(7)} diagrams")
    if res is None:
        print("no witness; widen to two reroutes")
        return
    print(f"witness after {res.stats['examined']} candidates: {res.witness.reroutes[0]}")
    print("linear tree:", res.stats["linear_tree"])
    args.out.mkdir(parents=True, exist_ok=True)
    (args.out / "witness7.json").write_text(dumps(res.witness))
    (args.out / "witness7.svg").write_text(render_svg(res.witness))
    print(f"wrote {args.out}/witness7.json and .svg")


if __name__ == "__main__":
    main()
