"""Brute-force Monte Carlo oracle for the Gaussian version-space hit rate.

Standalone on purpose: it reimplements the planted-dataset construction and
the membership check directly in numpy, without importing the package, so it
can calibrate the acceptance band for the hit-rate tests independently of the
code under test.

Run:  python tools/vs_hit_rate_oracle.py
"""

import argparse
import math

import numpy as np


def planted_dataset(n, d, gamma, rng):
    w_star = rng.standard_normal(d)
    w_star /= np.linalg.norm(w_star)
    y = rng.choice([-1.0, 1.0], size=n)
    s = rng.uniform(gamma, 1.0, size=n)
    raw = rng.standard_normal((n, d))
    ortho = raw - np.outer(raw @ w_star, w_star)
    ortho /= np.linalg.norm(ortho, axis=1, keepdims=True)
    x = (y * s)[:, None] * w_star + np.sqrt(1.0 - s**2)[:, None] * ortho
    return x, y, w_star


def hit_rate(x, y, draws, rng, chunk=20000):
    hits = 0
    left = draws
    while left > 0:
        m = min(chunk, left)
        w = rng.standard_normal((m, x.shape[1]))
        ok = ((w @ x.T) * y > 0.0).all(axis=1)
        hits += int(ok.sum())
        left -= m
    return hits / draws


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--draws", type=int, default=100_000)
    ap.add_argument("--n", type=int, default=128)
    ap.add_argument("--dim", type=int, default=10)
    ap.add_argument("--dataset-seeds", type=int, default=8)
    args = ap.parse_args()

    gammas = [0.01, 0.02, 0.04, 0.05, 0.08, 0.16]
    print(f"N={args.n} D={args.dim} draws={args.draws} "
          f"dataset_seeds={args.dataset_seeds}")
    print(f"{'gamma':>6} {'erf(g/sqrt2)':>12} {'p_hat(min)':>11} "
          f"{'p_hat(med)':>11} {'p_hat(max)':>11} {'p/erf(med)':>11}")
    rates = {}
    for g in gammas:
        ps = []
        for ds in range(args.dataset_seeds):
            rng = np.random.default_rng(10_000 * ds + int(g * 10_000))
            x, y, _ = planted_dataset(args.n, args.dim, g, rng)
            ps.append(hit_rate(x, y, args.draws, rng))
        ps = np.array(ps)
        rates[g] = ps
        ref = math.erf(g / math.sqrt(2.0))
        print(f"{g:6.2f} {ref:12.6f} {ps.min():11.6f} "
              f"{np.median(ps):11.6f} {ps.max():11.6f} "
              f"{np.median(ps) / ref:11.3f}")

    print("\nhalving ratios p_hat(g/2)/p_hat(g), per dataset-seed pairing:")
    for g in [0.02, 0.04, 0.08]:
        lo = rates[g / 2]
        hi = rates[g]
        ratio = np.median(lo) / np.median(hi)
        print(f"  gamma={g:5.2f} ratio(medians)={ratio:.3f} "
              f"pairwise=[{(lo.min() / hi.max()):.3f}, "
              f"{(lo.max() / hi.min()):.3f}]")


if __name__ == "__main__":
    main()
