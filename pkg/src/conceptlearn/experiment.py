"""Monte-Carlo orchestration: repeated split/train/test runs per concept,
random-list null distributions, and empirical p-values.

Iterations and null lists are independent tasks seeded from the master seed,
so results are identical whatever the worker count; aggregation is keyed by
task index.
"""

from __future__ import annotations

import multiprocessing as mp
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .concepts import ResolvedConcept, random_concept
from .embeddings import EmbeddingStore, normalize
from .metrics import METRIC_NAMES, MetricsRecord, evaluate_scores
from .perceptron import TrainConfig, score, train
from .splits import make_split


@dataclass(frozen=True)
class ExperimentConfig:
    iterations: int = 1000
    random_list_count: int = 1000
    random_list_size: int = 400
    master_seed: int = 0
    train: TrainConfig = field(default_factory=TrainConfig)
    normalize: bool = False
    threshold: float = 0.5
    match_random_list_size: bool = False  # size-match null lists to the concept

    def __post_init__(self):
        if self.iterations < 1:
            raise ValueError("iterations must be >= 1")
        if self.random_list_count < 1:
            raise ValueError("random_list_count must be >= 1")
        if self.random_list_size < 4:
            raise ValueError("random_list_size must be >= 4")


@dataclass(frozen=True)
class AggregateResult:
    concept_name: str
    embedding_name: str
    resolved_size: int
    raw_size: int
    means: dict[str, float]
    stds: dict[str, float]
    records: tuple[MetricsRecord, ...]


@dataclass(frozen=True)
class NullDistribution:
    per_list: tuple[dict[str, float], ...]  # each list's metric means
    max_row: dict[str, float]  # per-metric maximum, not one best list
    mean_row: dict[str, float]
    list_size: int


def run_iteration(
    store: EmbeddingStore, resolved: ResolvedConcept, cfg: ExperimentConfig, index: int
) -> MetricsRecord:
    """One split/train/score/metrics pass."""
    split = make_split(resolved, store, index, cfg.master_seed)
    try:
        model = train(split, store, cfg.train)
        scores = score(model, store, split.test_words)
        return evaluate_scores(scores, split.test_labels(), cfg.threshold)
    except Exception as exc:
        raise RuntimeError(
            f"iteration {index} of concept {resolved.concept.name!r} failed: {exc}"
        ) from exc


# Worker-pool plumbing. Contexts live in module globals inherited through
# fork(), so the embedding matrix is never pickled per task. Iteration and
# null-list maps use separate slots because run_null's workers call
# run_concept serially inside themselves.
_CONTEXTS: dict[str, object] = {}


def _iteration_task(index: int) -> MetricsRecord:
    store, resolved, cfg = _CONTEXTS["iter"]
    return run_iteration(store, resolved, cfg, index)


def _null_task(k: int) -> dict[str, float]:
    store, cfg, exclude, size = _CONTEXTS["null"]
    agg = _run_null_list(store, cfg, exclude, size, k)
    return agg.means


def _map_tasks(task_fn, slot: str, ctx, indices, workers: int):
    _CONTEXTS[slot] = ctx
    try:
        if workers <= 1 or "fork" not in mp.get_all_start_methods():
            return [task_fn(i) for i in indices]
        with ProcessPoolExecutor(
            max_workers=workers, mp_context=mp.get_context("fork")
        ) as pool:
            chunk = max(1, len(indices) // (4 * workers))
            return list(pool.map(task_fn, indices, chunksize=chunk))
    finally:
        _CONTEXTS.pop(slot, None)


def default_workers() -> int:
    return os.cpu_count() or 1


def run_concept(
    store: EmbeddingStore,
    resolved: ResolvedConcept,
    cfg: ExperimentConfig,
    workers: int = 1,
) -> AggregateResult:
    """Evaluate one concept: cfg.iterations independent split/train/test
    passes, aggregated to per-metric mean and sample standard deviation."""
    if cfg.normalize:
        store = normalize(store)
    records = _map_tasks(
        _iteration_task, "iter", (store, resolved, cfg), range(cfg.iterations), workers
    )
    return _aggregate(resolved, records)


def _aggregate(resolved: ResolvedConcept, records) -> AggregateResult:
    cols = {
        name: np.array([getattr(r, name) for r in records]) for name in METRIC_NAMES
    }
    means = {name: float(v.mean()) for name, v in cols.items()}
    stds = {
        name: float(v.std(ddof=1)) if v.size > 1 else 0.0 for name, v in cols.items()
    }
    return AggregateResult(
        concept_name=resolved.concept.name,
        embedding_name=resolved.embedding_name,
        resolved_size=resolved.size,
        raw_size=resolved.raw_size,
        means=means,
        stds=stds,
        records=tuple(records),
    )


def _run_null_list(
    store: EmbeddingStore, cfg: ExperimentConfig, exclude, size: int, k: int
) -> AggregateResult:
    name = f"random-{k:04d}"
    rc = random_concept(store, size, exclude=exclude, seed=cfg.master_seed, name=name)
    return run_concept(store, rc, cfg, workers=1)


def run_null(
    store: EmbeddingStore,
    cfg: ExperimentConfig,
    exclude=frozenset(),
    workers: int = 1,
    size: int | None = None,
) -> NullDistribution:
    """Null distribution from cfg.random_list_count random word lists.

    Each list runs the full per-concept protocol under its own derived seed.
    The max row is a per-metric maximum across lists; the mean row is the
    per-metric average.
    """
    if size is None:
        size = cfg.random_list_size
    if cfg.normalize:
        store = normalize(store)  # once here; idempotent inside run_concept
    ctx = (store, cfg, frozenset(exclude), size)
    per_list = _map_tasks(
        _null_task, "null", ctx, range(cfg.random_list_count), workers
    )
    max_row = {n: max(m[n] for m in per_list) for n in METRIC_NAMES}
    mean_row = {
        n: float(np.mean([m[n] for m in per_list])) for n in METRIC_NAMES
    }
    return NullDistribution(
        per_list=tuple(per_list), max_row=max_row, mean_row=mean_row, list_size=size
    )


def empirical_p_value(observed: float, null_values) -> float:
    """Add-one permutation p-value: (1 + #{null >= observed}) / (1 + N)."""
    null_values = np.asarray(null_values, dtype=np.float64)
    if null_values.size == 0:
        raise ValueError("null_values must be non-empty")
    exceed = int(np.sum(null_values >= observed))
    return (1 + exceed) / (1 + null_values.size)


def format_p_value(observed: float, null_values) -> str:
    """Paper-style rendering: '< 1/(N+1)' when nothing in the null reaches
    the observation, otherwise the add-one estimate to 3 decimals."""
    null_values = np.asarray(null_values, dtype=np.float64)
    exceed = int(np.sum(null_values >= observed))
    p = (1 + exceed) / (1 + null_values.size)
    if exceed == 0:
        return f"< {1.0 / (null_values.size + 1):.3f}"
    return f"{p:.3f}"
