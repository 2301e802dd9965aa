"""Reproduce the textbook catalysis examples end to end and print a summary table."""

from fractions import Fraction

from catalysis import construct_catalyst, exists_catalyst, make_pair, make_probvec, region2, verify_useful
from catalysis.oracle import search_catalyst
from catalysis.vidal import critical_set

CASES = [
    ("JP qutrit, y=(.5,.4,.1)", ["0.6", "0.2", "0.2"], ["0.5", "0.4", "0.1"]),
    ("JP qutrit, y=(.5,.3,.2)", ["0.6", "0.2", "0.2"], ["0.5", "0.3", "0.2"]),
    ("JP ququart", ["0.4", "0.4", "0.1", "0.1"], ["0.5", "0.25", "0.25", "0"]),
]


def main():
    fallback = False
    print(f"{'case':26s} {'P':>5s} {'L':>6s} {'2D region':>14s} {'any':>4s} {'k(801/1000)':>12s} {'grid d<=6':>10s}")
    for name, x, y in CASES:
        pair = make_pair(make_probvec(x), make_probvec(y))
        reg = region2(pair)
        k = "-"
        if exists_catalyst(pair):
            try:
                k = str(construct_catalyst(pair, alpha=Fraction(801, 1000)).k)
            except ValueError:
                k = f"{construct_catalyst(pair).k}*"
                fallback = True
        found = search_catalyst(pair, 6, 25)
        grid = "-" if found is None else str(found.catalyst.n)
        print(f"{name:26s} {str(pair.p):>5s} {str(critical_set(pair)):>6s} {str(reg):>14s} "
              f"{'yes' if exists_catalyst(pair) else 'no':>4s} {k:>12s} {grid:>10s}")
    rep = verify_useful(make_probvec(["0.6", "0.2", "0.2"]), make_probvec(["0.5", "0.4", "0.1"]),
                        make_probvec(["0.65", "0.35"]))
    print(f"\nc=(0.65,0.35): P {rep.p_before} -> {rep.p_after} ({float(rep.p_after):.6g})")
    if fallback:
        print("* alpha=801/1000 outside the admissible range; default theta used")


if __name__ == "__main__":
    main()
