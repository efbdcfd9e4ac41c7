"""Random grid-shaped frameworks and a timing harness.

Instances place one argument per cell of a rows x cols grid; every
ordered pair of distinct cells at Chebyshev distance 1 (the
8-neighborhood, so odd cycles exist) becomes an attack independently
with the configured probability.  Drawing per *directed* pair means a
mutual attack appears with probability p^2.  Generation is a pure
function of the spec, byte-for-byte reproducible.

The harness runs generate -> decompose -> normalize -> solve per
instance/semantics/mode combination under a cooperative wall-clock
watchdog; a run that blows the budget is recorded with the timeout value
as its runtime, never re-measured.
"""

from __future__ import annotations

import csv
import random
import time
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .af import ArgumentationFramework
from .aspartix import serialize_aspartix
from .decomposition import HEURISTICS, decompose, elimination_order, primal_graph
from .dp import (
    DeadlineExceeded,
    count_extensions,
    decide_credulous,
    decide_skeptical,
    enumerate_extensions,
)
from .normalize import normalize

MODES = ("enum", "count", "cred", "skept")

# clockwise from top-left; fixed order keeps the attack stream reproducible
_OFFSETS = ((-1, -1), (-1, 0), (-1, 1), (0, -1), (0, 1), (1, -1), (1, 0), (1, 1))


@dataclass(frozen=True)
class GridSpec:
    rows: int
    cols: int
    attack_probability: float
    seed: int

    def instance_id(self) -> str:
        pct = round(self.attack_probability * 100)
        return f"grid_{self.rows}x{self.cols}_p{pct}_s{self.seed}"


def generate_grid_af(spec: GridSpec) -> ArgumentationFramework:
    """Deterministic random grid framework for the spec."""
    if spec.rows < 1 or spec.cols < 1:
        raise ValueError(f"grid dimensions must be positive, got {spec.rows}x{spec.cols}")
    if not 0.0 <= spec.attack_probability <= 1.0:
        raise ValueError(f"attack probability {spec.attack_probability} outside [0,1]")
    rng = random.Random(spec.seed)
    name = lambda r, c: f"a_{r}_{c}"
    arguments = [name(r, c) for r in range(1, spec.rows + 1) for c in range(1, spec.cols + 1)]
    attacks = []
    for r in range(1, spec.rows + 1):
        for c in range(1, spec.cols + 1):
            for dr, dc in _OFFSETS:
                rr, cc = r + dr, c + dc
                if 1 <= rr <= spec.rows and 1 <= cc <= spec.cols:
                    if rng.random() < spec.attack_probability:
                        attacks.append((name(r, c), name(rr, cc)))
    return ArgumentationFramework.of(arguments, attacks)


@dataclass(frozen=True)
class BenchRecord:
    instance_id: str
    n_args: int
    n_attacks: int
    rows: int
    cols: int
    probability: float
    seed: int
    heuristic: str
    decomposition_width: int
    semantics: str
    mode: str
    runtime_millis: int
    timed_out: bool
    answer: str


CSV_HEADER = (
    "instanceId",
    "nArgs",
    "nAttacks",
    "rows",
    "cols",
    "probability",
    "seed",
    "heuristic",
    "decompositionWidth",
    "semantics",
    "mode",
    "runtimeMillis",
    "timedOut",
    "answer",
)


def run_one(
    instance_id: str,
    af: ArgumentationFramework,
    semantics: str,
    mode: str,
    heuristic: str = "min-fill",
    timeout_millis: int = 300_000,
    rows: int = 0,
    cols: int = 0,
    probability: float = 0.0,
    seed: int = 0,
) -> BenchRecord:
    """Time one decompose/normalize/solve pipeline on an arbitrary
    framework.  cred/skept query the lexicographically first argument."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    if heuristic not in HEURISTICS:
        raise ValueError(f"unknown heuristic {heuristic!r}")
    if timeout_millis <= 0:
        raise ValueError("timeout must be positive")
    start = time.monotonic()
    deadline = start + timeout_millis / 1000.0
    width = -1
    timed_out = False
    try:
        graph = primal_graph(af)
        order = elimination_order(graph, heuristic, 0)
        dec = decompose(graph, order)
        if time.monotonic() > deadline:
            raise DeadlineExceeded
        nd = normalize(dec)
        width = nd.width
        if time.monotonic() > deadline:
            raise DeadlineExceeded
        if mode == "count":
            answer = str(count_extensions(af, nd, semantics, deadline=deadline))
        elif mode == "enum":
            answer = str(len(enumerate_extensions(af, nd, semantics, deadline=deadline)))
        else:
            query = min(af.arguments)
            if mode == "cred":
                verdict = decide_credulous(af, nd, query, deadline=deadline)
            else:
                verdict = decide_skeptical(af, nd, query, deadline=deadline)
            answer = f"{query}:{'YES' if verdict else 'NO'}"
    except DeadlineExceeded:
        timed_out = True
        answer = ""
    except Exception as exc:  # per-run failures are data, not crashes
        answer = f"ERROR: {exc}"
    elapsed = timeout_millis if timed_out else round((time.monotonic() - start) * 1000)
    return BenchRecord(
        instance_id=instance_id,
        n_args=len(af.arguments),
        n_attacks=len(af.attacks),
        rows=rows,
        cols=cols,
        probability=probability,
        seed=seed,
        heuristic=heuristic,
        decomposition_width=width,
        semantics=semantics,
        mode=mode,
        runtime_millis=elapsed,
        timed_out=timed_out,
        answer=answer,
    )


def run_benchmark(
    instances: Sequence[GridSpec],
    modes: Sequence[str] = ("count",),
    semantics: Sequence[str] = ("preferred",),
    heuristic: str = "min-fill",
    timeout_millis: int = 300_000,
) -> list[BenchRecord]:
    """One record per (instance, semantics, mode), in submission order."""
    records = []
    for spec in instances:
        af = generate_grid_af(spec)
        for sem in semantics:
            for mode in modes:
                records.append(
                    run_one(
                        spec.instance_id(),
                        af,
                        sem,
                        mode,
                        heuristic,
                        timeout_millis,
                        rows=spec.rows,
                        cols=spec.cols,
                        probability=spec.attack_probability,
                        seed=spec.seed,
                    )
                )
    return records


def write_csv(records: Iterable[BenchRecord], sink: TextIO) -> None:
    writer = csv.writer(sink, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for r in records:
        writer.writerow(
            [
                r.instance_id,
                r.n_args,
                r.n_attacks,
                r.rows,
                r.cols,
                r.probability,
                r.seed,
                r.heuristic,
                r.decomposition_width,
                r.semantics,
                r.mode,
                r.runtime_millis,
                "true" if r.timed_out else "false",
                r.answer,
            ]
        )


def write_instance_files(instances: Sequence[GridSpec], directory: str | Path) -> list[Path]:
    """Dump each instance as `<instance_id>.af` in ASPARTIX format."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    paths = []
    for spec in instances:
        path = directory / f"{spec.instance_id()}.af"
        path.write_text(serialize_aspartix(generate_grid_af(spec)), encoding="utf-8")
        paths.append(path)
    return paths
