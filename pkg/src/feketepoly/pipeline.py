"""Table generation, reference-table verification, and certificate caching.

A table sweeps a prime range inside one discriminant family and records,
for every qualifying p, the smallest witness primes of a search mode:

  quadruple          four slot patterns on the compact polynomial f
  triple             three slot patterns on the trace polynomial g
  twocycle           one quad*odd slot on f
  twoplusfourcycle   one quad*quart*odd slot on f

Verification mode reads reference rows (family, mode, p, q1..q4) from a
CSV file and re-checks that each printed prime matches its slot pattern.
"""

from __future__ import annotations

import csv
import hashlib
import io
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from pathlib import Path
from typing import Optional

from .ntheory import Family, is_prime, quad_disc
from .fekete import FeketeBundle, fekete_compact
from .ffpoly import UnusablePrimeError, factor_shape
from .galois import (
    QUADRUPLE_PATTERNS,
    TRIPLE_PATTERNS,
    ShapePattern,
    find_joint_witnesses,
    find_slotwise_witnesses,
    match_pattern,
)

CACHE_VERSION = 1

DEFAULT_BOUND = 100_000

EXIT_OK = 0
EXIT_INVALID_INPUT = 2
EXIT_NOT_FOUND = 3
EXIT_VERIFICATION_FAILED = 4


class TableMode(Enum):
    QUADRUPLE = "quadruple"
    TRIPLE = "triple"
    TWO_CYCLE = "twocycle"
    TWO_PLUS_FOUR_CYCLE = "twoplusfourcycle"


_MODE_PATTERNS: dict[TableMode, tuple[ShapePattern, ...]] = {
    TableMode.QUADRUPLE: QUADRUPLE_PATTERNS,
    TableMode.TRIPLE: TRIPLE_PATTERNS,
    TableMode.TWO_CYCLE: (ShapePattern.QUAD_TIMES_DISTINCT_ODD,),
    TableMode.TWO_PLUS_FOUR_CYCLE: (ShapePattern.QUAD_PLUS_QUART_PLUS_DISTINCT_ODD,),
}

_FAMILY_DELTA = {
    Family.FOUR_P: 4,
    Family.MINUS_FOUR_P: -4,
    Family.THREE_P: 3,
    Family.MINUS_THREE_P: -3,
}

_FAMILY_NAMES = {
    "fourp": Family.FOUR_P,
    "minusfourp": Family.MINUS_FOUR_P,
    "threep": Family.THREE_P,
    "minusthreep": Family.MINUS_THREE_P,
    "4p": Family.FOUR_P,
    "-4p": Family.MINUS_FOUR_P,
    "3p": Family.THREE_P,
    "-3p": Family.MINUS_THREE_P,
    "m4p": Family.MINUS_FOUR_P,
    "m3p": Family.MINUS_THREE_P,
    "minus4p": Family.MINUS_FOUR_P,
    "minus3p": Family.MINUS_THREE_P,
}


def parse_family(name: str) -> Family:
    key = name.strip().lower().replace("_", "")
    fam = _FAMILY_NAMES.get(key)
    if fam is None:
        raise ValueError(f"unknown family {name!r}")
    return fam


@dataclass(frozen=True)
class TableSpec:
    family: Family
    mode: TableMode
    p_min: int
    p_max: int
    bound: int = DEFAULT_BOUND

    def __post_init__(self):
        if self.family not in _FAMILY_DELTA:
            raise ValueError("table sweeps cover the four p-families only")
        if self.mode is TableMode.TWO_PLUS_FOUR_CYCLE and self.family is not Family.MINUS_THREE_P:
            raise ValueError("the 2-cycle/4-cycle mode applies to the -3p family only")

    def qualifying_primes(self) -> list[int]:
        """Primes of the family congruence class inside [p_min, p_max]."""
        out = []
        for p in range(max(self.p_min, 3), self.p_max + 1, 2):
            if not is_prime(p):
                continue
            if self.family in (Family.FOUR_P, Family.THREE_P):
                if p % 4 != 3:
                    continue
            else:
                if p % 4 != 1:
                    continue
            if self.family in (Family.THREE_P, Family.MINUS_THREE_P) and p == 3:
                continue
            if self.family is Family.MINUS_THREE_P:
                if self.mode is TableMode.TWO_PLUS_FOUR_CYCLE and p % 8 != 5:
                    continue
                if self.mode in (TableMode.QUADRUPLE, TableMode.TWO_CYCLE) and p % 8 != 1:
                    continue
            out.append(p)
        return out


def delta_for(family: Family, p: int) -> int:
    return _FAMILY_DELTA[family] * p


@dataclass(frozen=True)
class TableRow:
    p: int
    delta: int
    result: Optional[tuple[int, ...]]
    group: str
    ms: int
    cert_key: str = ""

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "delta": self.delta,
            "result": list(self.result) if self.result else None,
            "group": self.group,
            "ms": self.ms,
            "cert_key": self.cert_key,
        }


def _target_poly(bundle: FeketeBundle, mode: TableMode):
    return bundle.g if mode is TableMode.TRIPLE else bundle.f


def run_row(
    family: Family, mode: TableMode, p: int, bound: int, joint: bool = False
) -> TableRow:
    """Search the witness slots for one discriminant."""
    start = time.monotonic()
    delta = delta_for(family, p)
    bundle = fekete_compact(quad_disc(delta))
    poly = _target_poly(bundle, mode)
    patterns = _MODE_PATTERNS[mode]
    group = ""
    if poly.degree < 1:
        result = None
    else:
        search = find_joint_witnesses if joint else find_slotwise_witnesses
        witnesses = search(poly, patterns, bound)
        if any(w is None for w in witnesses):
            result = None
        else:
            result = tuple(w.q for w in witnesses)
            n = bundle.f.degree // 2
            if mode is TableMode.TRIPLE:
                group = f"S({poly.degree})"
            elif mode is TableMode.QUADRUPLE or mode is TableMode.TWO_CYCLE:
                group = f"hyperoctahedral({n})"
            else:
                group = f"kernel-candidate({n})"
    ms = int((time.monotonic() - start) * 1000)
    return TableRow(
        p=p,
        delta=delta,
        result=result,
        group=group,
        ms=ms,
        cert_key=cache_key(delta, mode.value, bound),
    )


def _run_row_args(args) -> TableRow:
    return run_row(*args)


def run_table(spec: TableSpec, jobs: int = 1, joint: bool = False) -> list[TableRow]:
    tasks = [(spec.family, spec.mode, p, spec.bound, joint) for p in spec.qualifying_primes()]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_run_row_args, tasks))
    else:
        rows = [_run_row_args(t) for t in tasks]
    return sorted(rows, key=lambda r: r.p)


def rows_to_csv(rows: list[TableRow], timestamp: bool = True) -> str:
    """CSV text: p, delta, q1..q4 (blank for unused slots), group, ms."""
    buf = io.StringIO()
    if timestamp:
        buf.write(f"# generated {time.strftime('%Y-%m-%dT%H:%M:%S')}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["p", "delta", "q1", "q2", "q3", "q4", "group", "ms"])
    for row in rows:
        qs = list(row.result) if row.result else []
        qs = qs + [""] * (4 - len(qs))
        if row.result is None:
            qs = ["x", "", "", ""]
        writer.writerow([row.p, row.delta, *qs, row.group, row.ms])
    return buf.getvalue()


def rows_to_json(rows: list[TableRow]) -> str:
    return json.dumps([r.to_json() for r in rows], indent=2, sort_keys=True) + "\n"


def write_plot(rows: list[TableRow], path: str | Path) -> None:
    """Scatter the witness primes against p, one series per slot, log scale."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    fig, ax = plt.subplots(figsize=(7, 4.5))
    slots = max((len(r.result) for r in rows if r.result), default=0)
    markers = ["o", "s", "^", "d"]
    for i in range(slots):
        xs = [r.p for r in rows if r.result and len(r.result) > i]
        ys = [r.result[i] for r in rows if r.result and len(r.result) > i]
        if xs:
            ax.scatter(xs, ys, s=18, marker=markers[i % 4], label=f"q{i + 1}")
    ax.set_xlabel("p")
    ax.set_ylabel("witness prime")
    if any(r.result for r in rows):
        ax.set_yscale("log")
        ax.legend(loc="best", fontsize=8)
    ax.grid(True, which="both", alpha=0.3)
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


# -- verification of reference rows ------------------------------------------


@dataclass(frozen=True)
class VerifyResult:
    line: int
    family: Optional[Family]
    mode: Optional[TableMode]
    p: Optional[int]
    ok: bool
    skipped: bool
    detail: str


def _verify_one(
    bundle: FeketeBundle, mode: TableMode, primes: list[int]
) -> tuple[bool, str]:
    poly = _target_poly(bundle, mode)
    patterns = _MODE_PATTERNS[mode]
    if len(primes) != len(patterns):
        return False, f"expected {len(patterns)} primes, got {len(primes)}"
    problems = []
    for slot, (q, pattern) in enumerate(zip(primes, patterns), start=1):
        try:
            shape = factor_shape(poly, q)
        except UnusablePrimeError:
            problems.append(f"q{slot}={q}: degree drops")
            continue
        if not shape.squarefree:
            problems.append(f"q{slot}={q}: not squarefree")
        elif not match_pattern(shape, poly.degree, pattern):
            problems.append(
                f"q{slot}={q}: shape {sorted(shape.degrees.items())} fails {pattern.value}"
            )
    if problems:
        return False, "; ".join(problems)
    return True, "all slots match"


def verify_csv(path: str | Path) -> list[VerifyResult]:
    """Re-validate reference rows. Row format: family, mode, p, q1..q4
    (trailing slots blank; 'x' in q1 marks a published no-result row)."""
    results: list[VerifyResult] = []
    bundles: dict[int, FeketeBundle] = {}
    with open(path, newline="") as fh:
        for line_no, record in enumerate(csv.reader(fh), start=1):
            if not record or record[0].lstrip().startswith("#"):
                continue
            if record[0].strip().lower() == "family":
                continue
            try:
                family = parse_family(record[0])
                mode = TableMode(record[1].strip().lower())
                p = int(record[2])
                slots = [s.strip() for s in record[3:] if s.strip()]
            except (ValueError, IndexError) as exc:
                results.append(
                    VerifyResult(line_no, None, None, None, False, False, f"malformed row: {exc}")
                )
                continue
            if slots and slots[0].lower() == "x":
                results.append(
                    VerifyResult(line_no, family, mode, p, True, True, "no published result")
                )
                continue
            try:
                primes = [int(s) for s in slots]
            except ValueError as exc:
                results.append(
                    VerifyResult(line_no, family, mode, p, False, False, f"malformed row: {exc}")
                )
                continue
            delta = delta_for(family, p)
            if delta not in bundles:
                bundles[delta] = fekete_compact(quad_disc(delta))
            ok, detail = _verify_one(bundles[delta], mode, primes)
            results.append(VerifyResult(line_no, family, mode, p, ok, False, detail))
    return results


# -- certificate cache --------------------------------------------------------


def cache_key(delta: int, mode: str, bound: int) -> str:
    raw = f"v{CACHE_VERSION}|{delta}|{mode}|{bound}"
    return hashlib.sha256(raw.encode()).hexdigest()[:24]


def cache_store(cache_dir: str | Path, delta: int, mode: str, bound: int, payload: dict) -> Path:
    directory = Path(cache_dir)
    directory.mkdir(parents=True, exist_ok=True)
    path = directory / f"{cache_key(delta, mode, bound)}.json"
    text = json.dumps(payload, indent=2, sort_keys=True)
    path.write_text(text + "\n")
    return path

def cache_load(cache_dir: str | Path, delta: int, mode: str, bound: int) -> Optional[dict]:
    path = Path(cache_dir) / f"{cache_key(delta, mode, bound)}.json"
    if not path.exists():
        return None
    try:
        return json.loads(path.read_text())
    except (OSError, json.JSONDecodeError):
        return None
