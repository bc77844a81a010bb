"""Print pivot words and Gram matrices of U+ degree by degree for a bicharacter given as literals."""
import argparse
import json

from gqg import weights as W
from gqg.nichols import NicholsTables, PivotGram
from gqg.scalars import field
from gqg.weights import BicharTable
from gqg.words import word_str


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=15, help="conductor")
    ap.add_argument("--chi", default='[["z^5","z^13"],["1","z^2"]]', help="JSON matrix of literals in z")
    ap.add_argument("--bound", default="3,2")
    args = ap.parse_args()
    F = field(args.n)
    t = BicharTable(F, tuple(tuple(F.parse(x) for x in row) for row in json.loads(args.chi)))
    bound = tuple(int(x) for x in args.bound.split(","))
    plus, minus = NicholsTables(t, "+"), NicholsTables(t, "-")
    G = PivotGram(plus, minus)
    for lam in W.by_height(W.box(bound)):
        piv = [word_str(p) for p in plus.basis(lam)]
        print(lam, "dim", len(piv), piv)
        for row in G.matrix(lam):
            print("    ", [str(x) for x in row])


if __name__ == "__main__":
    main()
