"""Compare HC images of finite-dimensional simples with the (e)-solution space, rank 1."""
import argparse

from gqg.center import conjecture_probe, solve_center_window
from gqg.roots import sieve_roots
from gqg.scalars import field
from gqg.weights import BicharTable, OmegaTable
from gqg.modules import window_pairs


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--q", type=int, default=2, help="integer q (not a root of unity)")
    ap.add_argument("--size", type=int, default=3, help="window 0..size for lambda and mu")
    args = ap.parse_args()

    F = field(1)
    t = BicharTable(F, ((F(args.q),),))
    w = OmegaTable.trivial(F, 1)
    rs = sieve_roots(t, (4,))
    win = window_pairs((0,), (args.size,), (0,), (args.size,))
    rep = conjecture_probe(t, w, rs, win, (2 * args.size + 2,))
    sol = solve_center_window(t, w, rs, win)
    print(f"window 0..{args.size}: {rep.num_fin_pairs} finite pairs, hc rank {rep.rank_of_hc_span}")
    print(f"solution space: local dim {sol.dim()} ({sum(sol.flagged)} flagged), interior dim {sol.interior_dim()}")
    print("status:", "agree" if rep.agreement else "reported")


if __name__ == "__main__":
    main()
