#!/usr/bin/env python3
"""Self-adjoint-extension report for the S-wave contact problem.

Prints the extension parameter alpha(c, k) on a c-grid (always
unimodular), then runs the dilation/scale-invariance diagnostic on a
grid of candidate phase shifts: only tan(delta_0) = 0 — the free
boundary condition — survives as scale invariant, confirming that the
interacting zero-radius limits break the classical scale symmetry.

Usage: run_sae_report.py [--k K] [--tan-delta0 T ...]
"""

import argparse
import math

from scatter2d import sae


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--k", type=float, default=1.0)
    ap.add_argument("--tan-delta0", type=float, nargs="+",
                    default=[0.0, 0.1, -0.1, 1.0, -1.0,
                             math.pi / 2, -math.pi / 2])
    ap.add_argument("--c", type=float, nargs="+",
                    default=[-10.0, -1.0, 0.0, 1.0, 10.0])
    args = ap.parse_args(argv)

    print(f"extension parameter alpha(c, k) at k = {args.k}")
    for c in args.c:
        alpha = sae.extension_alpha(c, args.k)
        print(f"  c = {c:+8.3f}   alpha = {alpha.real:+.6f}"
              f"{alpha.imag:+.6f}i   |alpha| = {abs(alpha):.15f}")

    print("\nscale-invariance diagnostic (B/A ratio under dilation)")
    for t in args.tan_delta0:
        e = sae.near_origin_expansion(t, k=args.k)
        d = sae.dilation_apply(e)
        ok = sae.scale_invariance_test(t, tol=1e-9, k=args.k)
        print(f"  tan_delta0 = {t:+7.4f}   B/A = {e.ratio:+10.6f}"
              f"   dilated = {d.ratio:+10.6f}   invariant: {ok}")


if __name__ == "__main__":
    main()
