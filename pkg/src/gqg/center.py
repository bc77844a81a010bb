"""Skew center: the (e1)-(e4) conditions, HC images of simple modules,
window solution spaces, reconstruction of central elements and the basis probe.

Coefficient families a_(lam, mu) are grouped into beta-lines
{(lam + k beta, mu - k beta)}.  Along a line the ratio

    r(lam, mu) = omega(beta) chi(beta, mu) / chi(lam, beta)

changes as r_k = r_0 q^(-2k) with q = chi(beta, beta).
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import weights as W
from .algebra import AlgebraElement, QuantumAlgebra, U0Element, sh_project
from .linalg import IncrementalBasis, axpy, nullspace, solve
from .modules import CharacterTable, character, fin_window
from .roots import RootSystem, check_center_hypothesis
from .scalars import char_order, discrete_log
from .weights import BicharTable, OmegaTable, Weight
from .words import degree


class CenterError(RuntimeError):
    pass


# ---------------------------------------------------------------- lines

def line_key(lam: Weight, mu: Weight, beta: Weight):
    """(anchor lam, lam + mu) of the beta-line through (lam, mu), and the offset k."""
    i = next(n for n, b in enumerate(beta) if b)
    k = lam[i] // beta[i]
    anchor = W.sub(lam, W.scale(k, beta))
    return (anchor, W.add(lam, mu)), k


def line_point(key, k: int, beta: Weight):
    anchor, total = key
    lam = W.add(anchor, W.scale(k, beta))
    return lam, W.sub(total, lam)


def ratio(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight, beta: Weight):
    return w(beta) * t.chi(beta, mu) * t.chi(lam, beta).inverse()


def _equations_for_line(t, w, beta, key, ks, q, c, rho):
    """Linear (e)-equations touching the offsets ks of one beta-line.

    Each equation is (branch, {offset: coeff}, witness offset, t).
    """
    fld = t.field
    lam0, mu0 = line_point(key, 0, beta)
    r0 = ratio(t, w, lam0, mu0, beta)
    eqs = []
    if c == 0:
        # q = 1 admits only (e2); otherwise q has infinite order
        t0 = discrete_log(r0, q)
        if t0 is None:
            return [("e2", {k: fld.one}, k, None) for k in ks]
        if q == 1:
            return eqs
        for k in ks:
            tt = t0 - 2 * k
            if tt == 0:
                continue
            partner = t0 - k
            # a_partner = rho^tt a_k
            eqs.append(("e1", {partner: fld.one, k: -(rho ** tt)}, k, tt))
        return eqs
    # c >= 2
    for b in range(c):
        rb = r0 * q ** (-2 * b)
        tt = discrete_log(rb, q)
        if tt is not None:
            tt %= c
            if tt == 0:
                continue
            targets = [tt]
            branch = "e3"
        else:
            targets = list(range(1, c))
            branch = "e4"
        for tj in targets:
            eq = {}
            for k in ks:
                j = (k - b) % c
                if j == tj:
                    axpy(eq, rho ** (-(k - b)), {k: fld.one})
                elif j == 0:
                    axpy(eq, -(rho ** (-(k - b))), {k: fld.one})
            eqs.append((branch, eq, b, tj))
    return eqs


def _root_data(t, beta):
    q = t.chi(beta, beta)
    return q, char_order(q), t.rho_hat(beta)


@dataclass
class ECheckReport:
    beta: Weight
    passed: bool
    entries: list = dc_field(default_factory=list)

    @property
    def first_violation(self):
        return next((e for e in self.entries if e["status"] == "fail"), None)

    def to_json(self):
        return {"beta": list(self.beta), "passed": self.passed, "checks": self.entries}


def e_conditions_check(a: U0Element, beta: Weight, t: BicharTable, w: OmegaTable) -> ECheckReport:
    """Evaluate every applicable (e)-branch for beta on the lines through supp(a)."""
    beta = tuple(beta)
    q, c, rho = _root_data(t, beta)
    lines = {}
    for (lam, mu) in a.terms:
        key, k = line_key(lam, mu, beta)
        lines.setdefault(key, set()).add(k)
    entries = []
    ok = True
    for key in sorted(lines):
        ks = sorted(lines[key])
        if c == 0 and q != 1:
            lam0, mu0 = line_point(key, 0, beta)
            t0 = discrete_log(ratio(t, w, lam0, mu0, beta), q)
            if t0 is not None:
                ks = sorted(set(ks) | {t0 - k for k in ks})
        elif c >= 2:
            ks = sorted(set(ks) | set(range(c)))
        for branch, eq, wk, tt in _equations_for_line(t, w, beta, key, ks, q, c, rho):
            val = t.field.zero
            for k, s in eq.items():
                coeff = a.coeff(*line_point(key, k, beta))
                if coeff is not None:
                    val = val + s * coeff
            good = val.is_zero()
            ok = ok and good
            lam, mu = line_point(key, wk, beta)
            entries.append({"beta": list(beta), "branch": branch, "status": "pass" if good else "fail",
                            "witness": {"lambda": list(lam), "mu": list(mu), "t": tt}})
    return ECheckReport(beta, ok, entries)


def check_all_roots(a: U0Element, rs: RootSystem, t: BicharTable, w: OmegaTable) -> list:
    return [e_conditions_check(a, r.beta, t, w) for r in rs.roots]


# --------------------------------------------------------------- HC images

def hc_image(t: BicharTable, w: OmegaTable, lam: Weight, mu: Weight, ct: CharacterTable) -> U0Element:
    """sum_nu rho_hat(nu) m_nu K_{lam+nu} L_{mu-nu}."""
    if not ct.complete:
        raise CenterError(f"character of {(lam, mu)} is not complete; HC image undefined")
    terms = {}
    for nu, m in ct.mult.items():
        terms[(W.add(lam, nu), W.sub(mu, nu))] = t.rho_hat(nu) * m
    return U0Element(terms)


# ------------------------------------------------------------- solve window

@dataclass
class WindowSolution:
    pairs: list
    basis: list          # local space: equations leaving the window are dropped
    flagged: list        # per local basis vector: touches a dropped equation
    interior: list       # all equations kept, outside coefficients forced to 0

    def dim(self) -> int:
        return len(self.basis)

    def interior_dim(self) -> int:
        return len(self.interior)

    def contains(self, a: U0Element, interior: bool = True) -> bool:
        vecs = self.interior if interior else self.basis
        basis = IncrementalBasis()
        for v in vecs:
            basis.add(_to_vec(v, self.pairs))
        if any(k not in self.pairs for k in a.terms):
            return False
        return basis.express(_to_vec(a, self.pairs)) is not None

    def to_json(self):
        return {"pairs": len(self.pairs), "local_dim": len(self.basis),
                "interior_dim": len(self.interior),
                "flagged": sum(self.flagged),
                "interior_basis": [v.to_json() for v in self.interior]}


def _to_vec(a: U0Element, pairs: list) -> dict:
    index = {p: n for n, p in enumerate(pairs)}
    return {index[k]: c for k, c in a.terms.items() if k in index}


def solve_center_window(t: BicharTable, w: OmegaTable, rs: RootSystem, window) -> WindowSolution:
    if not rs.complete_below_bound:
        raise CenterError("root system is not complete below its bound")
    bad = check_center_hypothesis(t, rs)
    if bad:
        raise CenterError(f"chi(beta, beta) = 1 for roots {bad}")
    pairs = sorted({(tuple(a), tuple(b)) for a, b in window})
    index = {p: n for n, p in enumerate(pairs)}
    fld = t.field
    rows_all, rows_local = [], []
    dropped_pts = set()
    for r in rs.roots:
        beta = r.beta
        q, c, rho = _root_data(t, beta)
        lines = {}
        for lam, mu in pairs:
            key, k = line_key(lam, mu, beta)
            lines.setdefault(key, set()).add(k)
        for key, kset in lines.items():
            ks = sorted(kset)
            for _, eq, _, _ in _equations_for_line(t, w, beta, key, ks, q, c, rho):
                row, outside = {}, False
                for k, s in eq.items():
                    p = line_point(key, k, beta)
                    if p in index:
                        axpy(row, s, {index[p]: fld.one})
                    else:
                        outside = True
                if row:
                    rows_all.append(row)
                    if outside:
                        dropped_pts.update(row)
                    else:
                        rows_local.append(row)
    n = len(pairs)

    def as_u0(v):
        return U0Element({pairs[k]: s for k, s in v.items()})

    interior = [as_u0(v) for v in nullspace(rows_all, n, fld.one)]
    local = [as_u0(v) for v in nullspace(rows_local, n, fld.one)]
    flagged = [any(index[p] in dropped_pts for p in v.terms) for v in local]
    return WindowSolution(pairs, local, flagged, interior)


# ----------------------------------------------------------- reconstruction

def verify_skew_central(z: AlgebraElement, t: BicharTable, w: OmegaTable) -> bool:
    """Z X = omega(deg X) X Z for all generators X; Z must have degree 0."""
    alg = z.alg
    l = t.rank
    if any(any(d) for d in z.degrees()):
        return False
    for i in range(1, l + 1):
        ai = W.unit(l, i)
        for g, deg in ((alg.E(i), ai), (alg.F(i), W.neg(ai)),
                       (alg.K(ai), W.zero(l)), (alg.L(ai), W.zero(l))):
            if z * g != (g * z).scale(w(deg)):
                return False
    return True


def _ansatz(alg: QuantumAlgebra, hc0: U0Element, depth: Weight, widen: int = 0):
    l = alg.l
    keys = []
    seen = set()
    shifts = W.box((widen,) * l) if widen else [W.zero(l)]
    for (lam, mu) in hc0.terms:
        for nu in W.box(tuple(depth)):
            xs = alg.minus.basis(nu)
            ys = alg.plus.basis(nu)
            if not xs or not ys:
                continue
            for s in shifts:
                k = W.add(lam, s)
                m = W.sub(W.sub(mu, nu), s)
                for x in xs:
                    for y in ys:
                        key = (x, k, m, y)
                        if key not in seen:
                            seen.add(key)
                            keys.append(key)
    return keys


def reconstruct_central(hc0: U0Element, t: BicharTable, w: OmegaTable, depth: Weight,
                        alg: QuantumAlgebra | None = None, widen: int = 0) -> AlgebraElement:
    """The unique skew-central Z (for omega) with Sh(Z) = hc0 in the ansatz

        Z = sum c F_x K_a L_{b - nu} E_y,   deg x = deg y = nu <= depth,

    where (a, b) runs over supp(hc0).  widen > 0 also shifts (a, b) along
    (s, -s) for 0 <= s <= widen.
    """
    alg = alg or QuantumAlgebra(t)
    l = t.rank
    fld = t.field
    keys = _ansatz(alg, hc0, depth, widen)
    gens = []
    for i in range(1, l + 1):
        ai = W.unit(l, i)
        gens.append((f"E{i}", alg.E(i), w(ai)))
        gens.append((f"F{i}", alg.F(i), w(W.neg(ai))))
    rows = {}
    labels = {}
    for col, key in enumerate(keys):
        term = alg.element({key: fld.one})
        for name, g, om in gens:
            comm = term * g - (g * term).scale(om)
            for mono, s in comm.terms.items():
                rk = (name, mono)
                rows.setdefault(rk, {})
                axpy(rows[rk], s, {col: fld.one})
        x, k, m, y = key
        if not x and not y:
            rk = ("Sh", (k, m))
            rows.setdefault(rk, {})[col] = fld.one
    for (k, m) in hc0.terms:
        rows.setdefault(("Sh", (k, m)), {})
    order = sorted(rows, key=lambda r: (r[0] != "Sh", str(r)))
    mat = [rows[r] for r in order]
    rhs = [hc0.terms.get(r[1], fld.zero) if r[0] == "Sh" else fld.zero for r in order]
    sol, null, bad = solve(mat, rhs, len(keys), fld.one)
    if sol is None:
        name = order[bad][0] if bad is not None else "?"
        raise CenterError(f"no skew-central element with this HC image within depth {tuple(depth)}; "
                          f"first failing constraint: {name} {order[bad][1] if bad is not None else ''}")
    if null:
        raise CenterError(f"solution is not unique ({len(null)} free parameters)")
    return alg.element({keys[c]: s for c, s in sol.items()})


# ---------------------------------------------------------------- probe

@dataclass
class ProbeReport:
    num_fin_pairs: int
    rank_of_hc_span: int
    solution_space_dim_in_window: int
    hc_inside_window: int
    hc_in_solution_space: bool
    agreement: bool
    fin_pairs: list

    def to_json(self):
        return {"num_fin_pairs": self.num_fin_pairs, "rank_of_hc_span": self.rank_of_hc_span,
                "solution_space_dim_in_window": self.solution_space_dim_in_window,
                "hc_inside_window": self.hc_inside_window,
                "hc_in_solution_space": self.hc_in_solution_space,
                "status": "agree" if self.agreement else "reported",
                "fin_pairs": [[list(a), list(b)] for a, b in self.fin_pairs]}


def conjecture_probe(t: BicharTable, w: OmegaTable, rs: RootSystem, window, depth: Weight) -> ProbeReport:
    fins = fin_window(t, w, window, depth)
    hcs = [hc_image(t, w, f.lam, f.mu, f.table) for f in fins]
    support = sorted({k for a in hcs for k in a.terms})
    basis = IncrementalBasis()
    for a in hcs:
        basis.add(_to_vec(a, support))
    rank = basis.size
    sol = solve_center_window(t, w, rs, window) if window else None
    pairs = set(sol.pairs) if sol else set()
    inside = [a for a in hcs if all(k in pairs for k in a.terms)]
    inside_rank = IncrementalBasis()
    for a in inside:
        inside_rank.add(_to_vec(a, sorted(pairs)))
    contained = all(sol.contains(a) for a in inside) if sol else True
    dim = sol.interior_dim() if sol else 0
    agree = contained and inside_rank.size == dim and rank == len(hcs)
    return ProbeReport(len(fins), rank, dim, inside_rank.size, contained, agree,
                       [(f.lam, f.mu) for f in fins])
