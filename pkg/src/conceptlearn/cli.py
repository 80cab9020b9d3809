"""Command-line entry point.

Subcommands: eval, null, compare, gen-random-embedding, expand-wildcards.
Exit codes: 0 success, 1 input error, 2 runtime error.
"""

from __future__ import annotations

import argparse
import configparser
import os
import sys
from dataclasses import dataclass, replace

from . import report, stats
from .concepts import ConceptError, expand_wildcards, load_concept, resolve
from .embeddings import (
    EmbeddingParseError,
    EmbeddingSourceSpec,
    load_embedding,
    normalize,
    random_gaussian_embedding,
    save_embedding,
)
from .experiment import (
    ExperimentConfig,
    default_workers,
    run_concept,
    run_null,
)
from .perceptron import TrainConfig
from .stats import wilcoxon_signed_rank

FORMATS = ("txt", "csv", "jsonl")


class InputError(Exception):
    """User-facing input problem; maps to exit code 1."""


@dataclass
class RunManifest:
    embeddings: list[tuple[str, EmbeddingSourceSpec]]
    concepts: list[tuple[str, str]]  # (name, path)

    def embedding(self, name: str) -> EmbeddingSourceSpec:
        for n, spec in self.embeddings:
            if n == name:
                return spec
        raise InputError(f"no embedding named {name!r} in manifest")


def load_manifest(path: str) -> RunManifest:
    """Parse a key/value manifest: an [embeddings] section and a [concepts]
    section, each mapping a unique name to a file path."""
    parser = configparser.ConfigParser()
    read = parser.read(path)
    if not read:
        raise InputError(f"cannot read manifest {path!r}")
    if "embeddings" not in parser or "concepts" not in parser:
        raise InputError(f"{path}: manifest needs [embeddings] and [concepts] sections")
    embeddings = [
        (name, EmbeddingSourceSpec(path=p, lowercase=True))
        for name, p in parser["embeddings"].items()
    ]
    concepts = list(parser["concepts"].items())
    if not embeddings or not concepts:
        raise InputError(f"{path}: need at least one embedding and one concept")
    return RunManifest(embeddings=embeddings, concepts=concepts)


def validate_manifest(manifest: RunManifest) -> None:
    """Fail fast on unreadable inputs before any training starts."""
    problems = []
    for name, spec in manifest.embeddings:
        if not os.path.isfile(spec.path):
            problems.append(f"embedding {name!r}: no such file {spec.path!r}")
    for name, path in manifest.concepts:
        if not os.path.isfile(path):
            problems.append(f"concept {name!r}: no such file {path!r}")
    if problems:
        raise InputError("; ".join(problems))


def _experiment_config(args) -> ExperimentConfig:
    return ExperimentConfig(
        iterations=args.iterations,
        random_list_count=args.random_lists,
        random_list_size=args.random_list_size,
        master_seed=args.seed,
        train=TrainConfig(),
        normalize=args.normalize,
        threshold=args.threshold,
    )


def _load_named_embedding(name: str, spec: EmbeddingSourceSpec):
    store = load_embedding(spec)
    return replace(store, name=name)


def _resolve_concepts(manifest: RunManifest, store):
    resolved = []
    for name, path in manifest.concepts:
        concept = load_concept(path, name)
        resolved.append(resolve(concept, store))
    return resolved


def _write(outdir: str, filename: str, text: str) -> None:
    os.makedirs(outdir, exist_ok=True)
    with open(os.path.join(outdir, filename), "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_eval(args) -> int:
    manifest = load_manifest(args.manifest)
    validate_manifest(manifest)
    cfg = _experiment_config(args)
    formats = args.format.split(",")
    for fmt in formats:
        if fmt not in FORMATS:
            raise InputError(f"unknown format {fmt!r} (choose from {','.join(FORMATS)})")
    for name, spec in manifest.embeddings:
        store = _load_named_embedding(name, spec)
        resolved = _resolve_concepts(manifest, store)
        aggregates = [
            run_concept(store, rc, cfg, workers=args.workers) for rc in resolved
        ]
        null = run_null(store, cfg, workers=args.workers)
        if "txt" in formats:
            _write(args.out, f"{name}-eval.txt",
                   report.eval_report_text(name, aggregates, null, cfg))
        if "csv" in formats:
            _write(args.out, f"{name}-eval.csv",
                   report.eval_report_csv(name, aggregates, null, cfg))
        if "jsonl" in formats:
            _write(args.out, f"{name}-eval.jsonl",
                   report.eval_report_jsonl(name, aggregates, null, cfg))
    return 0


def cmd_null(args) -> int:
    manifest = load_manifest(args.manifest)
    validate_manifest(manifest)
    cfg = _experiment_config(args)
    names = [n for n, _ in manifest.embeddings]
    name = args.embedding or names[0]
    store = _load_named_embedding(name, manifest.embedding(name))
    null = run_null(store, cfg, workers=args.workers)
    _write(args.out, f"{name}-null.txt", report.null_report_text(name, null, cfg))
    _write(args.out, f"{name}-null.jsonl", report.null_report_jsonl(name, null, cfg))
    return 0


def cmd_compare(args) -> int:
    manifest = load_manifest(args.manifest)
    validate_manifest(manifest)
    cfg = _experiment_config(args)
    aucs = {}
    resolved_names = {}
    for name in (args.embedding_a, args.embedding_b):
        store = _load_named_embedding(name, manifest.embedding(name))
        resolved = _resolve_concepts(manifest, store)
        resolved_names[name] = [rc.concept.name for rc in resolved]
        # shared split-stream key so per-concept AUCs are paired across the
        # two embeddings (identical embeddings give exactly zero differences)
        pair_key = f"pair:{args.embedding_a}:{args.embedding_b}"
        resolved = [replace(rc, embedding_name=pair_key) for rc in resolved]
        aucs[name] = {
            rc.concept.name: run_concept(store, rc, cfg, workers=args.workers).means["auc"]
            for rc in resolved
        }
    set_a = set(resolved_names[args.embedding_a])
    set_b = set(resolved_names[args.embedding_b])
    if set_a != set_b:
        raise InputError(
            "concept sets differ between embeddings: "
            f"only in {args.embedding_a}: {sorted(set_a - set_b)}; "
            f"only in {args.embedding_b}: {sorted(set_b - set_a)}"
        )
    names = resolved_names[args.embedding_a]
    a = [aucs[args.embedding_a][n] for n in names]
    b = [aucs[args.embedding_b][n] for n in names]
    outcome, note = compare_outcome(a, b, args.alternative)
    text = report.compare_report_text(
        args.embedding_a, args.embedding_b, names,
        aucs[args.embedding_a], aucs[args.embedding_b], outcome, cfg, note,
    )
    _write(args.out, f"compare-{args.embedding_a}-{args.embedding_b}.txt", text)
    sys.stdout.write(text)
    return 0


def compare_outcome(aucs_a, aucs_b, alternative: str):
    """Wilcoxon outcome for two paired AUC vectors, or None when every pair
    is tied. Attaches the published-comparison caveat when the inputs are the
    known published 3-decimal columns."""
    a = [round(v, 10) for v in aucs_a]
    b = [round(v, 10) for v in aucs_b]
    note = ""
    rounded = (tuple(round(v, 3) for v in a), tuple(round(v, 3) for v in b))
    published = (stats.PUBLISHED_GLOVE_AUCS, stats.PUBLISHED_FASTTEXT_AUCS)
    if rounded in (published, published[::-1]):
        note = stats.REFERENCE_COMPARISON_NOTE
    if a == b:
        return None, note
    outcome = wilcoxon_signed_rank(a, b, alternative=alternative)
    return outcome, note


def cmd_gen_random_embedding(args) -> int:
    if args.vocab:
        with open(args.vocab, "r", encoding="utf-8") as fh:
            vocab = [w.strip().lower() for w in fh if w.strip()]
        vocab = list(dict.fromkeys(vocab))
    else:
        width = len(str(args.words - 1))
        vocab = [f"w{i:0{width}d}" for i in range(args.words)]
    store = random_gaussian_embedding(vocab, args.dim, args.seed, name="gaussian")
    if args.normalize:
        store = normalize(store)
    save_embedding(store, args.out_file)
    return 0


def cmd_expand_wildcards(args) -> int:
    spec = EmbeddingSourceSpec(path=args.embedding_file, lowercase=True)
    store = load_embedding(spec)
    with open(args.list_file, "r", encoding="utf-8") as fh:
        entries = [
            line.strip() for line in fh
            if line.strip() and not line.strip().startswith("#")
        ]
    expanded = expand_wildcards(entries, store.vocabulary)
    if not expanded:
        raise InputError(f"{args.list_file}: expansion produced no words")
    out = "\n".join(expanded) + "\n"
    if args.out_file:
        with open(args.out_file, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conceptlearn",
        description="Measure how well word embeddings capture word-list concepts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--iterations", type=int, default=1000)
        p.add_argument("--normalize", action="store_true",
                       help="unit-normalize vectors before training")
        p.add_argument("--threshold", type=float, default=0.5)
        p.add_argument("--random-lists", type=int, default=1000)
        p.add_argument("--random-list-size", type=int, default=400)
        p.add_argument("--workers", type=int, default=default_workers())
        p.add_argument("--out", default="runs/latest")

    p_eval = sub.add_parser("eval", help="evaluate every (embedding, concept) pair")
    p_eval.add_argument("manifest")
    common(p_eval)
    p_eval.add_argument("--format", default="txt,csv,jsonl",
                        help="comma-separated subset of txt,csv,jsonl")
    p_eval.set_defaults(func=cmd_eval)

    p_null = sub.add_parser("null", help="random-list null distribution only")
    p_null.add_argument("manifest")
    common(p_null)
    p_null.add_argument("--embedding", help="manifest embedding name (default: first)")
    p_null.set_defaults(func=cmd_null)

    p_cmp = sub.add_parser("compare", help="paired signed-rank comparison of two embeddings")
    p_cmp.add_argument("manifest")
    p_cmp.add_argument("embedding_a")
    p_cmp.add_argument("embedding_b")
    common(p_cmp)
    p_cmp.add_argument("--alternative", default="two-sided",
                       choices=["greater", "less", "two-sided"])
    p_cmp.set_defaults(func=cmd_compare)

    p_gen = sub.add_parser("gen-random-embedding",
                           help="write a Gaussian N(0,1) embedding file")
    p_gen.add_argument("out_file")
    p_gen.add_argument("--words", type=int, default=10000)
    p_gen.add_argument("--vocab", help="one word per line; overrides --words")
    p_gen.add_argument("--dim", type=int, default=300)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.add_argument("--normalize", action="store_true")
    p_gen.set_defaults(func=cmd_gen_random_embedding)

    p_exp = sub.add_parser("expand-wildcards",
                           help="expand trailing-* stems against an embedding vocabulary")
    p_exp.add_argument("list_file")
    p_exp.add_argument("embedding_file")
    p_exp.add_argument("--out", dest="out_file")
    p_exp.set_defaults(func=cmd_expand_wildcards)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FileNotFoundError, EmbeddingParseError, ConceptError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # noqa: BLE001 - CLI boundary
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
