"""Verification sweeps, report generation and the on-disk Specht cache.

Sweeps compare closed-form predictions against brute-force observations and
record rows in a canonical order, so a report is byte-identical across runs
with the same configuration.  Wall time lives only in the summary; it never
enters row data or the CSV rendering.
"""

from __future__ import annotations

import csv
import io
import json
import os
import time
import warnings
import zipfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import specht
from ._version import __version__
from .combinatorics import (
    Partition,
    Weight,
    as_partition,
    chi,
    conjugate,
    enum_dominant_weights_bounded,
    enum_partitions,
    hat,
    is_big_partition,
    is_big_weight,
    is_cs_weight,
    is_dominant,
    is_p_regular,
    is_p_restricted,
    psi,
    strictly_dominates,
    tilde,
    weight_lt,
)
from .errors import ScopeError, ScopeReason
from .oracle import ext1_sym, is_prime, rad_specht_prediction

MATCH = "match"
MISMATCH = "mismatch"
SKIPPED = "skipped"

CSV_COLUMNS = ("check", "p", "size", "lam", "mu", "predicted", "observed", "status", "reason")

CACHE_FORMAT_VERSION = 1


def fmt_tuple(t) -> str:
    return "(" + ",".join(str(x) for x in t) + ")"


@dataclass(frozen=True)
class SweepRow:
    check: str
    p: int
    size: int
    lam: str
    mu: str | None
    predicted: str
    observed: str
    status: str
    reason: str | None = None

    def to_dict(self) -> dict:
        return {
            "check": self.check,
            "p": self.p,
            "size": self.size,
            "lam": self.lam,
            "mu": self.mu,
            "predicted": self.predicted,
            "observed": self.observed,
            "status": self.status,
            "reason": self.reason,
        }


@dataclass
class Report:
    version: str
    kind: str
    config: dict
    rows: list[SweepRow]
    summary: dict

    @property
    def mismatches(self) -> int:
        return sum(1 for r in self.rows if r.status == MISMATCH)

    def to_json(self) -> str:
        return json.dumps(
            {
                "version": self.version,
                "kind": self.kind,
                "config": self.config,
                "rows": [r.to_dict() for r in self.rows],
                "summary": self.summary,
            },
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        obj = json.loads(text)
        rows = [SweepRow(**r) for r in obj["rows"]]
        return cls(obj["version"], obj["kind"], obj["config"], rows, obj["summary"])

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in self.rows:
            d = r.to_dict()
            writer.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
        return out.getvalue()

    def to_text(self) -> str:
        lines = [f"{self.kind} sweep, config {self.config}"]
        for key, val in self.summary.items():
            lines.append(f"  {key}: {val}")
        bad = [r for r in self.rows if r.status == MISMATCH]
        for r in bad:
            mu = f" mu={r.mu}" if r.mu else ""
            lines.append(
                f"  MISMATCH {r.check} p={r.p} lam={r.lam}{mu}: "
                f"predicted {r.predicted}, observed {r.observed}"
            )
        if not bad:
            lines.append("  no mismatches")
        return "\n".join(lines)


def _finish(kind: str, config: dict, rows: list[SweepRow], extras: dict, t0: float) -> Report:
    summary = {
        "rows": len(rows),
        "matched": sum(1 for r in rows if r.status == MATCH),
        "mismatched": sum(1 for r in rows if r.status == MISMATCH),
        "skipped": sum(1 for r in rows if r.status == SKIPPED),
    }
    summary.update(extras)
    summary["wall_time_s"] = round(time.perf_counter() - t0, 3)
    return Report(__version__, kind, config, rows, summary)


def sweep_comb(primes: list[int], n_max: int, max_entry: int) -> Report:
    """Exhaustive combinatorial invariants over all dominant weights of rank
    <= n_max with entries in [0, max_entry].

    Identities that reread the weight as a partition (psi = chi of the
    conjugate, the conjugation bridge to big partitions) apply only to
    weights with last entry 0 and are gated accordingly; everything else is
    checked on the whole range.  Rows record counterexamples only; a clean
    sweep has no rows.  Whether the node move of a big weight stays
    p-restricted is counted in the summary as an empirical observation,
    never asserted.
    """
    if n_max < 1 or max_entry < 0:
        raise ValueError("bounds must be positive")
    for p in primes:
        if not is_prime(p):
            raise ValueError(f"p must be prime, got {p}")
    t0 = time.perf_counter()
    rows: list[SweepRow] = []
    checks_run = 0
    weights_checked = 0
    big_count = 0
    hat_restricted_count = 0

    def fail(check: str, p: int, n: int, lam: Weight, observed: str) -> None:
        rows.append(
            SweepRow(check, p, n, fmt_tuple(lam), None, "invariant holds", observed, MISMATCH)
        )

    for p in primes:
        for n in range(1, n_max + 1):
            for lam in enum_dominant_weights_bounded(n, max_entry):
                weights_checked += 1
                m = sum(lam)
                last_zero = lam[-1] == 0
                restricted = is_p_restricted(lam, p)

                # Identities that read the weight as a partition need the
                # last entry to vanish (equivalently, height < rank).
                if last_zero:
                    conj = conjugate(as_partition(lam))
                    checks_run += 1
                    if restricted != is_p_regular(conj, p):
                        fail(
                            "restricted_iff_conjugate_regular", p, n, lam,
                            f"restricted={restricted}, conjugate regular={not restricted}",
                        )
                    if m > 0:
                        checks_run += 1
                        if psi(lam) != chi(conj):
                            fail("psi_chi_conjugate", p, n, lam, f"psi={psi(lam)}, chi={chi(conj)}")
                if not restricted:
                    continue

                big = is_big_weight(lam, p)
                if big:
                    checks_run += 1
                    if not is_cs_weight(lam, p):
                        fail("big_implies_cs", p, n, lam, f"big but psi={psi(lam)} > {p}")

                for c in (1, -2):
                    shifted = tuple(x + c for x in lam)
                    checks_run += 2
                    if psi(shifted) != psi(lam):
                        fail("psi_translation", p, n, lam, f"c={c}: {psi(shifted)} != {psi(lam)}")
                    if is_big_weight(shifted, p) != big:
                        fail("big_translation", p, n, lam, f"c={c}: bigness changed")

                if big:
                    big_count += 1
                    h = hat(lam, p)
                    hat_restricted_count += is_p_restricted(h, p)
                    checks_run += 3
                    if not is_dominant(h):
                        fail("hat_dominant", p, n, lam, f"hat={fmt_tuple(h)} not dominant")
                    if sum(h) != m:
                        fail("hat_sum", p, n, lam, f"sum {sum(h)} != {m}")
                    if not weight_lt(h, lam):
                        fail("hat_strictly_below", p, n, lam, f"hat={fmt_tuple(h)} not strictly below")
                    for c in (1, -2):
                        shifted = tuple(x + c for x in lam)
                        checks_run += 1
                        if hat(shifted, p) != tuple(x + c for x in h):
                            fail("hat_translation", p, n, lam, f"c={c}: node move not equivariant")

                if last_zero and n >= m:
                    big_part = is_big_partition(conj, p)
                    checks_run += 1
                    if big != big_part:
                        fail(
                            "big_weight_iff_big_partition", p, n, lam,
                            f"big weight={big}, big conjugate partition={big_part}",
                        )
                    if big and big_part:
                        checks_run += 1
                        lhs = conjugate(as_partition(hat(lam, p)))
                        rhs = tilde(conj, p)
                        if lhs != rhs:
                            fail(
                                "hat_conjugate_is_tilde", p, n, lam,
                                f"conj(hat)={fmt_tuple(lhs)}, tilde(conj)={fmt_tuple(rhs)}",
                            )

    extras = {
        "weights_checked": weights_checked,
        "checks_run": checks_run,
        "big_weights": big_count,
        "hat_p_restricted": hat_restricted_count,
    }
    config = {"primes": list(primes), "n_max": n_max, "max_entry": max_entry}
    return _finish("comb", config, rows, extras, t0)


def sweep_sym(p: int, m: int, cap: int | None = None, cache_dir: str | os.PathLike | None = None) -> Report:
    """Brute-force verification of the radical and extension predictions.

    For every completely splittable p-regular partition lam of m: compares
    the radical prediction against the Gram rank, checks that some map from
    S^tilde(lam) hits the radical exactly when lam is big, and compares the
    predicted extension dimension against dim Hom(rad S^lam, D^mu) for every
    p-regular mu that lam does not strictly dominate.  Out-of-hypothesis
    inputs become skipped rows, never silent omissions.
    """
    if not is_prime(p) or p == 2:
        raise ValueError(f"sweep_sym requires an odd prime, got {p}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    t0 = time.perf_counter()
    rows: list[SweepRow] = []
    parts = enum_partitions(m)
    regular = {nu: is_p_regular(nu, p) for nu in parts}

    for lam in parts:
        lam_s = fmt_tuple(lam)
        try:
            pred = rad_specht_prediction(lam, p)
        except ScopeError as e:
            rows.append(SweepRow("radical", p, m, lam_s, None, "", "", SKIPPED, e.reason.value))
            continue

        _get_data(lam, p, cap, cache_dir)
        rd = specht.rad_dim(lam, p, cap)
        if pred.zero:
            pred_s = "rad=0"
        else:
            pred_s = f"rad nonzero, image of S^{fmt_tuple(pred.source)}"
        ok = (rd == 0) == pred.zero
        rows.append(
            SweepRow("radical", p, m, lam_s, None, pred_s, f"rad_dim={rd}",
                     MATCH if ok else MISMATCH)
        )

        if not pred.zero:
            _get_data(pred.source, p, cap, cache_dir)
            img_ok = specht.image_equals_rad(pred.source, lam, p, cap)
            rows.append(
                SweepRow(
                    "radical_image", p, m, lam_s, fmt_tuple(pred.source),
                    "some map image equals radical",
                    "equal" if img_ok else "no such map",
                    MATCH if img_ok else MISMATCH,
                )
            )

        for mu in parts:
            mu_s = fmt_tuple(mu)
            if not regular[mu]:
                rows.append(SweepRow("ext1", p, m, lam_s, mu_s, "", "", SKIPPED,
                                     ScopeReason.NOT_P_REGULAR.value))
                continue
            if strictly_dominates(lam, mu):
                rows.append(SweepRow("ext1", p, m, lam_s, mu_s, "", "", SKIPPED,
                                     ScopeReason.ORDER_HYPOTHESIS_FAILS.value))
                continue
            predicted = ext1_sym(lam, mu, p).dim
            _get_data(mu, p, cap, cache_dir)
            observed = specht.hom_rad_to_simple(lam, mu, p, cap)
            rows.append(
                SweepRow("ext1", p, m, lam_s, mu_s, str(predicted), str(observed),
                         MATCH if predicted == observed else MISMATCH)
            )

    config = {"p": p, "m": m, "cap": cap, "cache_dir": str(cache_dir) if cache_dir else None}
    return _finish("sym", config, rows, {}, t0)


def _get_data(shape: Partition, p: int, cap: int | None, cache_dir) -> specht.SpechtData:
    if cache_dir is None:
        return specht.specht_data(shape, p, cap)
    return cached_specht_data(shape, p, cap, cache_dir)


def cache_path(cache_dir: str | os.PathLike, shape: Partition, p: int) -> Path:
    name = "-".join(str(x) for x in shape) or "0"
    return Path(cache_dir) / f"specht_p{p}_{name}.npz"


def _encode_tableaux(data: specht.SpechtData) -> np.ndarray:
    m = sum(data.shape)
    enc = np.zeros((len(data.std_tableaux), m), dtype=np.int64)
    for k, t in enumerate(data.std_tableaux):
        for r, row in enumerate(t):
            for v in row:
                enc[k, v - 1] = r
    return enc


def _decode_tableaux(enc: np.ndarray, shape: Partition) -> tuple[specht.Tableau, ...]:
    out = []
    for assignment in enc:
        rows = [[] for _ in shape]
        for v, r in enumerate(assignment, start=1):
            rows[int(r)].append(v)
        out.append(tuple(tuple(sorted(row)) for row in rows))
    return tuple(out)


def cache_put(data: specht.SpechtData, cache_dir: str | os.PathLike) -> Path:
    """Persist one (shape, p) entry; writes are atomic per file."""
    path = cache_path(cache_dir, data.shape, data.p)
    path.parent.mkdir(parents=True, exist_ok=True)
    d = data.rep.dim
    gens = (
        np.stack(data.rep.gens)
        if data.rep.gens
        else np.zeros((0, d, d), dtype=np.int64)
    )
    tmp = path.with_suffix(".tmp.npz")
    with open(tmp, "wb") as fh:
        np.savez(
            fh,
            format_version=np.int64(CACHE_FORMAT_VERSION),
            p=np.int64(data.p),
            shape=np.array(data.shape, dtype=np.int64),
            dims=np.array([d, data.tabloid_count, sum(data.shape)], dtype=np.int64),
            tableaux=_encode_tableaux(data),
            basis=data.basis,
            gram=data.gram,
            gens=gens,
        )
    os.replace(tmp, path)
    return path


def cache_get(shape: Partition, p: int, cache_dir: str | os.PathLike) -> specht.SpechtData | None:
    """Load one entry; stale versions and unreadable files are misses."""
    shape = as_partition(shape)
    path = cache_path(cache_dir, shape, p)
    if not path.exists():
        return None
    try:
        with np.load(path) as npz:
            if int(npz["format_version"]) != CACHE_FORMAT_VERSION:
                return None
            if int(npz["p"]) != p or tuple(npz["shape"]) != shape:
                warnings.warn(f"cache entry {path} does not match its key, ignoring")
                return None
            d, tabloid_count, m = (int(x) for x in npz["dims"])
            std = _decode_tableaux(npz["tableaux"], shape)
            basis = npz["basis"].astype(np.int64)
            gram = npz["gram"].astype(np.int64)
            gens = tuple(g.astype(np.int64) for g in npz["gens"])
        rep = specht.SymRep(degree=m, dim=d, p=p, gens=gens)
        return specht.SpechtData(
            shape=shape, p=p, std_tableaux=std, tabloid_count=tabloid_count,
            basis=basis, gram=gram, rep=rep,
        )
    except (OSError, ValueError, KeyError, zipfile.BadZipFile, EOFError) as e:
        warnings.warn(f"corrupt cache entry {path} ({e}); recomputing")
        return None


def cached_specht_data(
    shape: Partition, p: int, cap: int | None = None,
    cache_dir: str | os.PathLike | None = None,
) -> specht.SpechtData:
    """Disk-backed specht_data: load if present, else compute and persist."""
    shape = as_partition(shape)
    if cache_dir is not None:
        hit = cache_get(shape, p, cache_dir)
        if hit is not None:
            specht._install(hit)
            return hit
    data = specht.specht_data(shape, p, cap)
    if cache_dir is not None:
        cache_put(data, cache_dir)
    return data
