"""Root system, module character and h-profile for the Z/3Z example (zeta = xi^5, q = xi^2, xi^15 = 1)."""
import argparse
import time

from gqg.center import check_all_roots, hc_image, reconstruct_central, verify_skew_central
from gqg.modules import character, fin_window, window_pairs, z3_h_profile
from gqg.nichols import NicholsTables
from gqg.roots import hilbert_cross_check, sieve_roots
from gqg.scalars import field
from gqg.weights import BicharTable, OmegaTable


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--reconstruct", action="store_true", help="also rebuild one central element")
    args = ap.parse_args()

    F = field(15)
    z = F.zeta(1)
    t = BicharTable(F, ((z ** 5, z ** 13), (F.one, z ** 2)))
    w = OmegaTable.trivial(F, 2)

    t0 = time.perf_counter()
    T = NicholsTables(t)
    rs = sieve_roots(t, (6, 4), T)
    print(f"roots ({time.perf_counter() - t0:.2f}s), hilbert ok = {bool(hilbert_cross_check(rs, (6, 4), T))}")
    for r in rs.roots:
        print("  ", r.to_json())

    ct = character(t, w, (1, 0), (1, 0), (14, 22))
    print(f"L(1,0 | 1,0): dim {ct.total_dim}, l = {[str(x) for x in ct.l_values]}")
    print("  h =", z3_h_profile(ct, t))

    win = window_pairs((0, 0), (1, 1), (0, 0), (1, 1))
    fins = fin_window(t, w, win, (14, 22))
    for f in fins:
        a = hc_image(t, w, f.lam, f.mu, f.table)
        ok = all(rep.passed for rep in check_all_roots(a, rs, t, w))
        print(f"  {f.lam} {f.mu}: dim {f.dim:4d}  (e)-checks {'pass' if ok else 'FAIL'}")

    if args.reconstruct:
        f = next(f for f in fins if (f.lam, f.mu) == ((0, 1), (1, 1)))
        a = hc_image(t, w, f.lam, f.mu, f.table)
        depth = tuple(max(nu[i] for nu in f.table.mult) for i in range(2))
        t0 = time.perf_counter()
        zc = reconstruct_central(a, t, w, depth)
        print(f"reconstructed Z with {len(zc)} terms in {time.perf_counter() - t0:.1f}s, "
              f"skew-central = {verify_skew_central(zc, t, w)}")


if __name__ == "__main__":
    main()
