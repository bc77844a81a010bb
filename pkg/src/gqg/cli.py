"""Command line front end: ``gqg run --config cfg.json [--task T] [--out report.json]``.

Exit codes: 0 ok, 1 configuration error, 2 internal-consistency failure.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import logging
import sys
import time
from dataclasses import asdict, dataclass, field as dc_field
from pathlib import Path

from .algebra import QuantumAlgebra, sh_project
from .center import (CenterError, check_all_roots, conjecture_probe, hc_image, reconstruct_central,
                     solve_center_window, verify_skew_central)
from .modules import ModuleError, character, fin_window, window_pairs, z3_h_profile
from .nichols import NicholsTables
from .roots import RootSystemError, check_center_hypothesis, hilbert_cross_check, sieve_roots
from .scalars import ScalarError, field
from .weights import BicharTable, OmegaTable

log = logging.getLogger("gqg")

TASKS = ("roots", "dims", "module", "center", "verify", "probe", "selftest")
SCHEMA = 1


class ConfigError(ValueError):
    pass


@dataclass
class SessionConfig:
    conductor: int
    rank: int
    chi: list
    omega: list
    degree_bound: list
    depth_bound: list
    window: dict = dc_field(default_factory=dict)
    tasks: list = dc_field(default_factory=lambda: ["roots"])
    module: dict | None = None
    reconstruct_max_dim: int = 10

    @classmethod
    def from_dict(cls, data: dict) -> "SessionConfig":
        known = {f for f in cls.__dataclass_fields__}
        extra = set(data) - known
        if extra:
            raise ConfigError(f"unknown config keys: {sorted(extra)}")
        try:
            cfg = cls(**data)
        except TypeError as exc:
            raise ConfigError(str(exc)) from None
        cfg.validate()
        return cfg

    def validate(self):
        l = self.rank
        if not isinstance(self.conductor, int) or self.conductor < 1:
            raise ConfigError("conductor must be a positive integer")
        if not isinstance(l, int) or l < 1:
            raise ConfigError("rank must be a positive integer")
        if len(self.chi) != l or any(len(row) != l for row in self.chi):
            raise ConfigError("chi must be an l x l matrix")
        if len(self.omega) != l:
            raise ConfigError("omega must have length l")
        for name in ("degree_bound", "depth_bound"):
            b = getattr(self, name)
            if len(b) != l or any(not isinstance(x, int) or x < 0 for x in b):
                raise ConfigError(f"{name} must be l nonnegative integers")
        bad = [t for t in self.tasks if t not in TASKS]
        if bad:
            raise ConfigError(f"unknown tasks {bad}")
        if self.window:
            for key in ("lambda", "mu"):
                rng = self.window.get(key)
                if not rng or len(rng) != 2 or any(len(v) != l for v in rng):
                    raise ConfigError(f"window.{key} must be [low, high] with weights of length l")
                if any(a > b for a, b in zip(*rng)):
                    raise ConfigError(f"window.{key} is empty")
        if self.module is not None:
            if len(self.module.get("lambda", [])) != l or len(self.module.get("mu", [])) != l:
                raise ConfigError("module needs lambda and mu of length l")
        try:
            self.table()
            self.omega_table()
        except (ScalarError, SyntaxError, ValueError, ZeroDivisionError) as exc:
            raise ConfigError(f"bad scalar literal: {exc}") from None

    def canonical(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    def digest(self) -> str:
        return hashlib.sha256(self.canonical().encode()).hexdigest()

    def fld(self):
        return field(self.conductor)

    def table(self) -> BicharTable:
        fld = self.fld()
        return BicharTable(fld, tuple(tuple(fld.parse(str(x)) for x in row) for row in self.chi))

    def omega_table(self) -> OmegaTable:
        fld = self.fld()
        return OmegaTable(fld, tuple(fld.parse(str(x)) for x in self.omega))

    def window_list(self) -> list:
        if not self.window:
            return []
        (llo, lhi), (mlo, mhi) = self.window["lambda"], self.window["mu"]
        return window_pairs(llo, lhi, mlo, mhi)


# the Z/3Z example: zeta = xi^5, q = xi^2 with xi a primitive 15th root of unity
SELFTEST_CONFIG = {
    "conductor": 15, "rank": 2,
    "chi": [["z^5", "z^13"], ["1", "z^2"]],
    "omega": ["1", "1"],
    "degree_bound": [6, 4], "depth_bound": [14, 22],
    "tasks": ["selftest"],
    "module": {"lambda": [1, 0], "mu": [1, 0]},
}
SELFTEST_ROOTS = [(1, 0), (2, 1), (1, 1), (0, 1)]
SELFTEST_H = (1, 0, 4, 1, 0, 1, 4, 0)


class Session:
    """Runs tasks in dependency order and collects a JSON-ready report."""

    def __init__(self, cfg: SessionConfig):
        self.cfg = cfg
        self.t = cfg.table()
        self.w = cfg.omega_table()
        self.failures = []
        self._rs = None
        self._tables = None
        self._fins = None

    def fail(self, task, message):
        log.error("%s: %s", task, message)
        self.failures.append({"task": task, "message": message})

    @property
    def tables(self):
        if self._tables is None:
            self._tables = NicholsTables(self.t, "+")
        return self._tables

    def roots(self):
        if self._rs is None:
            bound = tuple(self.cfg.degree_bound)
            try:
                self._rs = sieve_roots(self.t, bound, self.tables)
            except RootSystemError as exc:
                self.fail("roots", str(exc))
                return None
            chk = hilbert_cross_check(self._rs, bound, self.tables)
            if not chk:
                self.fail("roots", f"PBW count {chk.expected} != dim {chk.found} at degree {chk.first_failure}")
        return self._rs

    def task_roots(self):
        rs = self.roots()
        if rs is None:
            return {"status": "failed"}
        out = rs.to_json()
        out["hilbert_check"] = bool(hilbert_cross_check(rs, tuple(self.cfg.degree_bound), self.tables))
        return out

    def task_dims(self):
        return {"dims": self.tables.dims_json(tuple(self.cfg.degree_bound))}

    def task_module(self):
        if self.cfg.module is None:
            return {"status": "skipped", "reason": "no module parameters"}
        lam, mu = tuple(self.cfg.module["lambda"]), tuple(self.cfg.module["mu"])
        ct = character(self.t, self.w, lam, mu, tuple(self.cfg.depth_bound))
        out = ct.to_json()
        out["l_values"] = [x.to_json() for x in ct.l_values]
        if self.t.rank == 2 and ct.complete:
            z = self.t.q[0][0]
            if z * z + z + 1 == 0:
                try:
                    out["h_profile"] = list(z3_h_profile(ct, self.t))
                except ModuleError as exc:
                    self.fail("module", f"h-profile: {exc}")
        return out

    def _center_ready(self):
        rs = self.roots()
        if rs is None:
            return None, "root system failed"
        if not rs.complete_below_bound:
            return None, "root system not complete below the degree bound"
        bad = check_center_hypothesis(self.t, rs)
        if bad:
            return None, f"chi(beta, beta) = 1 for roots {[list(b) for b in bad]}"
        return rs, None

    def fins(self):
        if self._fins is None:
            self._fins = fin_window(self.t, self.w, self.cfg.window_list(), tuple(self.cfg.depth_bound))
        return self._fins

    def task_center(self):
        rs, reason = self._center_ready()
        if rs is None:
            return {"status": "skipped", "reason": reason}
        entries = []
        for f in self.fins():
            hc = hc_image(self.t, self.w, f.lam, f.mu, f.table)
            reports = check_all_roots(hc, rs, self.t, self.w)
            ok = all(r.passed for r in reports)
            if not ok:
                self.fail("center", f"(e)-conditions fail for {(f.lam, f.mu)}")
            entries.append({"lambda": list(f.lam), "mu": list(f.mu), "dim": f.dim,
                            "hc_image": hc.to_json(), "e_checks_pass": ok,
                            "checks": [c for r in reports for c in r.entries]})
        sol = solve_center_window(self.t, self.w, rs, self.cfg.window_list())
        return {"fin_pairs": entries, "window_solution": sol.to_json()}

    def task_verify(self):
        rs, reason = self._center_ready()
        if rs is None:
            return {"status": "skipped", "reason": reason}
        alg = QuantumAlgebra(self.t)
        out = []
        for f in self.fins():
            hc = hc_image(self.t, self.w, f.lam, f.mu, f.table)
            checks_ok = all(r.passed for r in check_all_roots(hc, rs, self.t, self.w))
            entry = {"lambda": list(f.lam), "mu": list(f.mu), "dim": f.dim, "e_checks_pass": checks_ok}
            if not checks_ok:
                self.fail("verify", f"(e)-conditions fail for {(f.lam, f.mu)}")
            if f.dim <= self.cfg.reconstruct_max_dim:
                depth = tuple(max(nu[i] for nu in f.table.mult) for i in range(self.t.rank))
                try:
                    z = reconstruct_central(hc, self.t, self.w, depth, alg)
                    sh_ok = sh_project(z) == hc
                    central = verify_skew_central(z, self.t, self.w)
                    entry.update({"reconstructed_terms": len(z), "sh_matches": sh_ok, "skew_central": central})
                    if not (sh_ok and central):
                        self.fail("verify", f"reconstruction check fails for {(f.lam, f.mu)}")
                except CenterError as exc:
                    self.fail("verify", str(exc))
                    entry["reconstruction_error"] = str(exc)
            out.append(entry)
        return {"entries": out}

    def task_probe(self):
        rs, reason = self._center_ready()
        if rs is None:
            return {"status": "skipped", "reason": reason}
        rep = conjecture_probe(self.t, self.w, rs, self.cfg.window_list(), tuple(self.cfg.depth_bound))
        return rep.to_json()

    def task_selftest(self):
        cfg = SessionConfig.from_dict(dict(SELFTEST_CONFIG))
        sub = Session(cfg)
        rs = sub.roots()
        got_roots = sorted(r.beta for r in rs.roots) if rs else []
        roots_ok = rs is not None and got_roots == sorted(SELFTEST_ROOTS) and all(r.phi == 1 for r in rs.roots)
        mod = sub.task_module()
        h = tuple(mod.get("h_profile", ()))
        ok = roots_ok and h == SELFTEST_H and not sub.failures
        if not ok:
            self.fail("selftest", f"roots {got_roots}, h {h}, failures {sub.failures}")
        return {"roots": [list(b) for b in got_roots], "h_profile": list(h), "passed": ok}

    def run(self, tasks) -> dict:
        results = {}
        for name in TASKS:
            if name in tasks:
                started = time.perf_counter()
                log.info("task %s", name)
                results[name] = getattr(self, f"task_{name}")()
                log.info("task %s done in %.2fs", name, time.perf_counter() - started)
        return results


def build_report(cfg: SessionConfig, tasks) -> tuple:
    sess = Session(cfg)
    results = sess.run(tasks)
    report = {
        "schema": SCHEMA,
        "config": asdict(cfg),
        "config_hash": cfg.digest(),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%SZ", time.gmtime()),
        "tasks": results,
        "failures": sess.failures,
        "status": "failed" if sess.failures else "ok",
    }
    return report, (2 if sess.failures else 0)


def load_config(path) -> SessionConfig:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ConfigError("config must be a JSON object")
    return SessionConfig.from_dict(data)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="gqg")
    sub = parser.add_subparsers(dest="command", required=True)
    run = sub.add_parser("run", help="run tasks from a JSON config")
    run.add_argument("--config", help="JSON config (optional for selftest)")
    run.add_argument("--task", choices=TASKS, help="run only this task")
    run.add_argument("--out", help="report path (default reports/<config hash>.json)")
    run.add_argument("-v", "--verbose", action="store_true")
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        if args.config:
            cfg = load_config(args.config)
        elif args.task == "selftest":
            cfg = SessionConfig.from_dict(dict(SELFTEST_CONFIG))
        else:
            raise ConfigError("--config is required")
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 1
    tasks = [args.task] if args.task else list(cfg.tasks)
    report, code = build_report(cfg, tasks)
    out = Path(args.out) if args.out else Path("reports") / f"{report['config_hash'][:16]}.json"
    out.parent.mkdir(parents=True, exist_ok=True)
    out.write_text(json.dumps(report, sort_keys=True, indent=1) + "\n")
    print(f"{report['status']}: wrote {out}")
    for f in report["failures"]:
        print(f"  {f['task']}: {f['message']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
