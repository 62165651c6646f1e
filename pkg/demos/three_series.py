"""The three proportional character sums.

For nonnegative integer e and parameters f, h, the sums

    A = sum binom(f, k)       binom(h, e+k)      x**k
    B = sum binom(-e-f-1, k)  binom(e-h-1, e+k)  x**k
    C = sum binom(-h-1, k)    binom(-f-1, e+k)   x**k

are pairwise proportional, with a power of (1-x) carrying the ratio between
the terminating sum A and the infinite sums B and C.
"""

from __future__ import annotations

from fractions import Fraction as F

from gausshyp import TripleParams, triple_sums, verify_triple_relations


def show(e, f, h, x):
    tp = TripleParams(e, f, h)
    sums = triple_sums(tp, x, tol=1e-14)
    out = verify_triple_relations(tp, x)
    print(f"\n(e, f, h) = ({e}, {f}, {h}), x = {x}")
    print(f"  A = {float(sums.a_sum):+.12f}  ({sums.terms_used[0]} terms)")
    print(f"  B = {float(sums.b_sum):+.12f}  ({sums.terms_used[1]} terms)")
    print(f"  C = {float(sums.c_sum):+.12f}  ({sums.terms_used[2]} terms)")
    for name, residual in zip(("A~B", "A~C", "B~C"), out.residuals):
        if residual is None:
            print(f"  relation {name}: not applicable (degenerate leading "
                  f"character)")
        else:
            print(f"  relation {name}: residual {float(residual):.2e}")
    print(f"  all applicable relations hold: {out.passed}")


def main():
    print("Three proportional sums and their pairwise relations")
    show(1, 1, 2, F(1, 4))   # A is a short polynomial, B and C are infinite
    show(2, 2, 2, F(1, 2))   # all three reach further
    show(2, 1, 0, F(1, 4))   # binom(h, e) = 0: two relations degenerate
    show(0, 2, 1, F(1, 2))   # e = 0 collapses the leading characters to 1


if __name__ == "__main__":
    main()
