"""Family generators and batch conjecture checks for inverse KL polynomials.

Checks never raise on a violation; they return a :class:`Verdict` carrying
the offending coefficient index.  :func:`scan` aggregates verdicts over a
family into a :class:`ScanReport`, serialized as JSON lines (one record per
matroid, then a summary line).
"""

from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator

import networkx as nx

from .errors import LimitTooLarge, MatklsError
from .invariants import characteristic_polynomial, inverse_kl_hat
from .matroid import Matroid, random_linear_matroid
from .polynomial import (
    Polynomial,
    count_real_roots,
    internal_zero_witness,
    log_concavity_witness,
)

CHECKS = ("nonneg", "logconcave", "internal_zeros", "real_roots", "constant_term")

MAX_BOOLEAN_N = 16
MAX_UNIFORM_MD = 60
MAX_VERTICES = 9
MAX_RANDOM_GROUND = 12


# -- graph enumeration ----------------------------------------------------


def connected_graphs(n: int) -> list:
    """All connected simple graphs on ``n`` vertices up to isomorphism.

    Graphs are grown one vertex at a time: every connected graph has a
    non-cut vertex, so each one arises from a connected graph on ``n - 1``
    vertices by attaching a new vertex to a nonempty neighbour set.
    Isomorphic duplicates are rejected by a Weisfeiler-Lehman hash followed
    by an exact isomorphism test.  Graphs are returned as sorted edge lists,
    ordered by edge count and then lexicographically.
    """
    return [list(g) for g in _connected_graphs(n)]


_GRAPH_CACHE: dict = {}


def _connected_graphs(n: int):
    if n in _GRAPH_CACHE:
        return _GRAPH_CACHE[n]
    if n <= 0:
        out = []
    elif n == 1:
        out = [()]
    else:
        buckets: dict = {}
        found = []
        for edges in _connected_graphs(n - 1):
            v = n - 1
            for mask in range(1, 1 << v):
                new = tuple(sorted(edges + tuple((u, v) for u in range(v) if mask >> u & 1)))
                g = nx.Graph()
                g.add_nodes_from(range(n))
                g.add_edges_from(new)
                key = (len(new), nx.weisfeiler_lehman_graph_hash(g, iterations=3))
                bucket = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(g, h) for h, _ in bucket):
                    continue
                bucket.append((g, new))
                found.append(new)
        out = sorted(found, key=lambda e: (len(e), e))
    _GRAPH_CACHE[n] = out
    return out


# -- families ----------------------------------------------------------------


@dataclass(frozen=True)
class Family:
    """A deterministic stream of matroid specs.

    ``kind`` is ``boolean`` (``max_n``), ``uniform`` (``max_m``, ``max_d``),
    ``graphic`` (``max_vertices``, ``min_vertices``) or ``random``
    (``count``, ``ground_size``, ``rank``, ``seed``).
    """

    kind: str
    params: dict = field(default_factory=dict)

    def describe(self) -> dict:
        return {"kind": self.kind, **self.params}

    def specs(self) -> Iterator[dict]:
        p = self.params
        if self.kind == "boolean":
            for n in range(1, p["max_n"] + 1):
                yield {"type": "boolean", "n": n}
        elif self.kind == "uniform":
            for m in range(1, p["max_m"] + 1):
                for d in range(1, p["max_d"] + 1):
                    yield {"type": "uniform", "m": m, "d": d}
        elif self.kind == "graphic":
            for n in range(p.get("min_vertices", 3), p["max_vertices"] + 1):
                for edges in _connected_graphs(n):
                    if edges:
                        yield {"type": "graph", "edges": [list(e) for e in edges]}
        elif self.kind == "random":
            rng = random.Random(p["seed"])
            for _ in range(p["count"]):
                M = random_linear_matroid(p["ground_size"], p["rank"], rng)
                yield M.to_spec()
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    def __iter__(self) -> Iterator[Matroid]:
        for spec in self.specs():
            yield Matroid.from_spec(spec)


def generate_family(kind: str, **limits) -> Family:
    """Validate limits and return a :class:`Family`.

    >>> [m for m in generate_family("uniform", max_m=2, max_d=2)]
    [U(1,1), U(1,2), U(2,1), U(2,2)]
    """
    if kind == "boolean":
        n = limits.get("max_n", 5)
        if n > MAX_BOOLEAN_N:
            raise LimitTooLarge(f"boolean family limited to n <= {MAX_BOOLEAN_N}")
        return Family("boolean", {"max_n": n})
    if kind == "uniform":
        m = limits.get("max_m", limits.get("max_md", 4))
        d = limits.get("max_d", limits.get("max_md", 4))
        if max(m, d) > MAX_UNIFORM_MD:
            raise LimitTooLarge(f"uniform family limited to m, d <= {MAX_UNIFORM_MD}")
        return Family("uniform", {"max_m": m, "max_d": d})
    if kind == "graphic":
        v = limits.get("max_vertices", 5)
        if v > MAX_VERTICES:
            raise LimitTooLarge(f"graphic family limited to {MAX_VERTICES} vertices")
        return Family("graphic", {"max_vertices": v, "min_vertices": limits.get("min_vertices", 3)})
    if kind == "random":
        size = limits.get("ground_size", 7)
        if size > MAX_RANDOM_GROUND:
            raise LimitTooLarge(f"random family limited to ground size {MAX_RANDOM_GROUND}")
        return Family("random", {"count": limits.get("count", 20), "ground_size": size,
                                 "rank": limits.get("rank", 3), "seed": limits.get("seed", 0)})
    raise ValueError(f"unknown family kind {kind!r}")


# -- verdicts ----------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    ok: bool
    witness: object = None

    def __bool__(self):
        return self.ok


def nonnegativity_verdict(Q: Polynomial) -> Verdict:
    bad = next((i for i, c in enumerate(Q.coeffs) if c < 0), None)
    return Verdict(bad is None, bad)


def log_concavity_verdict(Q: Polynomial) -> Verdict:
    """Log-concave with no internal zeros; witness is the failing index."""
    i = log_concavity_witness(Q)
    if i is None:
        i = internal_zero_witness(Q)
    return Verdict(i is None, i)


def internal_zero_verdict(Q: Polynomial) -> Verdict:
    i = internal_zero_witness(Q)
    return Verdict(i is None, i)


def real_rootedness_verdict(Q: Polynomial) -> Verdict:
    """All roots real (counted with multiplicity); witness is the real-root count."""
    if Q.degree < 1:
        return Verdict(True, 0)
    n = count_real_roots(Q, multiplicity=True)
    return Verdict(n == Q.degree, n)


def constant_term_verdict(Qhat0: int, chi0: int) -> Verdict:
    return Verdict(Qhat0 == chi0, (Qhat0, chi0))


def _q_and_chi(M: Matroid, fast_paths: bool = True):
    qhat = inverse_kl_hat(M, "auto", fast_paths=fast_paths)
    chi = characteristic_polynomial(M, "auto")
    return qhat, chi


def check_nonnegativity(M: Matroid) -> Verdict:
    qhat, _ = _q_and_chi(M)
    return nonnegativity_verdict(_signed(qhat, M.rk))


def check_log_concavity(M: Matroid) -> Verdict:
    qhat, _ = _q_and_chi(M)
    return log_concavity_verdict(_signed(qhat, M.rk))


def check_constant_term(M: Matroid) -> Verdict:
    qhat, chi = _q_and_chi(M)
    return constant_term_verdict(qhat[0], chi[0])


def _signed(qhat: Polynomial, rk: int) -> Polynomial:
    return -qhat if rk & 1 else qhat


def find_non_real_rooted(family):
    """First matroid in enumeration order whose Q (degree >= 1) is not real-rooted.

    Returns ``(spec, Q, real_root_count)`` or None.
    """
    specs = family.specs() if isinstance(family, Family) else (M.to_spec() for M in family)
    for spec in specs:
        M = Matroid.from_spec(spec)
        qhat, _ = _q_and_chi(M)
        Q = _signed(qhat, M.rk)
        v = real_rootedness_verdict(Q)
        if Q.degree >= 1 and not v.ok:
            return spec, Q, v.witness
    return None


# -- records and reports ---------------------------------------------------


def spec_key(spec: dict) -> str:
    blob = json.dumps(spec, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(blob.encode()).hexdigest()


def verdicts_from(Q: Polynomial, rk: int, chi0: int, checks=CHECKS) -> dict:
    """Verdict fields of a record, derived from Q, rank and chi(0) alone."""
    out = {}
    if "nonneg" in checks:
        v = nonnegativity_verdict(Q)
        out["nonneg"], out["nonneg_witness"] = v.ok, v.witness
    if "logconcave" in checks:
        v = log_concavity_verdict(Q)
        out["logconcave"], out["logconcave_witness"] = v.ok, v.witness
    if "internal_zeros" in checks:
        v = internal_zero_verdict(Q)
        out["no_internal_zeros"], out["internal_zero_witness"] = v.ok, v.witness
    if "real_roots" in checks:
        v = real_rootedness_verdict(Q)
        out["real_roots"], out["real_rooted"] = v.witness, v.ok
    if "constant_term" in checks:
        out["constant_term"] = _signed(Q, rk)[0] == chi0
    return out


_VERDICT_FIELD = {
    "nonneg": "nonneg",
    "logconcave": "logconcave",
    "internal_zeros": "no_internal_zeros",
    "real_roots": "real_rooted",
    "constant_term": "constant_term",
}


def evaluate(spec: dict, checks=CHECKS) -> dict:
    """One report record; errors are captured, never raised."""
    record = {"key": spec_key(spec), "spec": spec}
    try:
        M = Matroid.from_spec(spec)
        qhat, chi = _q_and_chi(M)
        Q = _signed(qhat, M.rk)
        record.update(rk=M.rk, Q=Q.to_json(), chi0=str(chi[0]))
        record.update(verdicts_from(Q, M.rk, chi[0], checks))
    except MatklsError as exc:
        record["error"] = f"{type(exc).__name__}: {exc}"
    return record


def recompute(record: dict, checks=CHECKS) -> dict:
    """Verdicts recomputed from the stored Q, rank and chi(0)."""
    Q = Polynomial.from_json(record["Q"])
    return verdicts_from(Q, record["rk"], int(record["chi0"]), checks)


@dataclass
class ScanReport:
    family: dict
    checks: tuple
    records: list = field(default_factory=list)

    @property
    def summary(self) -> dict:
        counts = {}
        witnesses = {}
        for c in self.checks:
            fld = _VERDICT_FIELD[c]
            done = [r for r in self.records if fld in r]
            failed = [r for r in done if not r[fld]]
            counts[c] = {"pass": len(done) - len(failed), "fail": len(failed)}
            witnesses[c] = failed[0]["spec"] if failed else None
        return {
            "family": self.family,
            "checks": list(self.checks),
            "records": len(self.records),
            "errors": sum(1 for r in self.records if "error" in r),
            "counts": counts,
            "first_counterexample": witnesses,
        }

    @property
    def all_passed(self) -> bool:
        s = self.summary
        return s["errors"] == 0 and all(v["fail"] == 0 for v in s["counts"].values())

    def to_jsonl(self) -> str:
        lines = [json.dumps(r, sort_keys=True) for r in self.records]
        lines.append(json.dumps({"summary": self.summary}, sort_keys=True))
        return "\n".join(lines) + "\n"

    @classmethod
    def from_jsonl(cls, text: str) -> "ScanReport":
        rows = [json.loads(line) for line in text.splitlines() if line.strip()]
        summary = rows[-1]["summary"]
        return cls(summary["family"], tuple(summary["checks"]), rows[:-1])

    def self_consistent(self) -> bool:
        for r in self.records:
            if "error" in r:
                continue
            stored = {k: r[k] for k in recompute(r, self.checks)}
            if stored != recompute(r, self.checks):
                return False
        return True


def _load_cache(path: Path) -> dict:
    out = {}
    if path.exists():
        for line in path.read_text().splitlines():
            if line.strip():
                rec = json.loads(line)
                if "error" not in rec:
                    out[rec["key"]] = rec
    return out


def _evaluate_task(args):
    spec, checks = args
    return evaluate(spec, checks)


def scan(family: Family, checks=CHECKS, workers: int = 1, cache: str | Path | None = None) -> ScanReport:
    """Run ``checks`` over ``family``; records keep enumeration order."""
    unknown = set(checks) - set(CHECKS)
    checks = tuple(c for c in CHECKS if c in checks)
    if unknown:
        raise ValueError(f"unknown checks {sorted(unknown)}")
    specs = list(family.specs())
    cached = _load_cache(Path(cache)) if cache else {}
    records: list = [None] * len(specs)
    todo = []
    for idx, spec in enumerate(specs):
        hit = cached.get(spec_key(spec))
        if hit is not None:
            rec = {k: hit[k] for k in ("key", "spec", "rk", "Q", "chi0")}
            rec.update(recompute(hit, checks))
            records[idx] = rec
        else:
            todo.append(idx)
    tasks = [(specs[i], checks) for i in todo]
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_evaluate_task, tasks, chunksize=4))
    else:
        fresh = [_evaluate_task(t) for t in tasks]
    for idx, rec in zip(todo, fresh):
        records[idx] = rec
    if cache and fresh:
        with open(cache, "a") as fh:
            for rec in fresh:
                if "error" not in rec:
                    fh.write(json.dumps(rec, sort_keys=True) + "\n")
    return ScanReport(family.describe(), checks, records)
