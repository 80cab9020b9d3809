import json

import numpy as np
import pytest

from conceptlearn import (
    ExperimentConfig,
    TrainConfig,
    random_concept,
    random_gaussian_embedding,
    run_concept,
    run_null,
)
from conceptlearn import report
from conceptlearn.cli import compare_outcome, load_manifest, main
from conceptlearn.stats import (
    PUBLISHED_FASTTEXT_AUCS,
    PUBLISHED_GLOVE_AUCS,
    REFERENCE_COMPARISON_NOTE,
)


@pytest.fixture
def workspace(tmp_path):
    """Small embedding file plus two concept lists and a manifest."""
    emb = tmp_path / "emb.txt"
    store = random_gaussian_embedding([f"w{i:03d}" for i in range(120)], 6, seed=1)
    lines = [
        w + " " + " ".join(f"{v:.9g}" for v in row)
        for w, row in zip(store.vocabulary, store.vectors)
    ]
    emb.write_text("\n".join(lines) + "\n")
    ca = tmp_path / "ca.txt"
    ca.write_text("\n".join(store.vocabulary[:10]) + "\n")
    cb = tmp_path / "cb.txt"
    cb.write_text("\n".join(store.vocabulary[50:58]) + "\n")
    manifest = tmp_path / "run.ini"
    manifest.write_text(
        f"[embeddings]\ngauss = {emb}\n\n[concepts]\nalpha = {ca}\nbeta = {cb}\n"
    )
    return tmp_path, manifest


def quick_args(out):
    return [
        "--seed", "3", "--iterations", "4", "--random-lists", "3",
        "--random-list-size", "6", "--workers", "1", "--out", str(out),
    ]


def test_manifest_parsing(workspace):
    _, manifest = workspace
    m = load_manifest(str(manifest))
    assert [n for n, _ in m.embeddings] == ["gauss"]
    assert [n for n, _ in m.concepts] == ["alpha", "beta"]


def test_eval_writes_reports_with_expected_shape(workspace, tmp_path):
    ws, manifest = workspace
    out = tmp_path / "out"
    assert main(["eval", str(manifest)] + quick_args(out)) == 0
    text = (out / "gauss-eval.txt").read_text()
    body = [l for l in text.splitlines() if l and not l.startswith("#")]
    # header + rule + 2 concepts + random(max) + random(avg)
    assert len(body) == 6
    assert "random(max)" in text and "random(avg)" in text
    assert "seed = 3" in text
    csv = (out / "gauss-eval.csv").read_text()
    assert csv.count("\n") >= 4
    records = [
        json.loads(l) for l in (out / "gauss-eval.jsonl").read_text().splitlines()
    ]
    kinds = [r["record"] for r in records]
    assert kinds == ["config", "concept", "concept", "random_max", "random_avg"]


def test_eval_format_parity(workspace, tmp_path):
    ws, manifest = workspace
    out = tmp_path / "out"
    main(["eval", str(manifest)] + quick_args(out))
    csv_lines = [
        l for l in (out / "gauss-eval.csv").read_text().splitlines()
        if l and not l.startswith("#") and not l.startswith("list,")
    ]
    records = [
        json.loads(l) for l in (out / "gauss-eval.jsonl").read_text().splitlines()
    ]
    by_name = {r.get("name"): r for r in records if r["record"] == "concept"}
    for line in csv_lines[:2]:
        cells = line.split(",")
        means = by_name[cells[0]]["means"]
        for value, key in zip(cells[2:7], ("accuracy", "recall", "fpr", "precision", "auc")):
            assert float(value) == pytest.approx(means[key], abs=5e-4)


def test_eval_reruns_byte_identical(workspace, tmp_path):
    ws, manifest = workspace
    out1, out2 = tmp_path / "o1", tmp_path / "o2"
    main(["eval", str(manifest)] + quick_args(out1))
    main(["eval", str(manifest)] + quick_args(out2))
    for name in ("gauss-eval.txt", "gauss-eval.csv", "gauss-eval.jsonl"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_eval_fail_fast_on_missing_inputs(tmp_path):
    manifest = tmp_path / "bad.ini"
    manifest.write_text("[embeddings]\ne = /nope/e.txt\n[concepts]\nc = /nope/c.txt\n")
    rc = main(["eval", str(manifest), "--out", str(tmp_path / "o")])
    assert rc == 1


def test_eval_rejects_unknown_format(workspace, tmp_path):
    _, manifest = workspace
    rc = main(
        ["eval", str(manifest), "--format", "xml", "--out", str(tmp_path / "o")]
    )
    assert rc == 1


def test_null_command(workspace, tmp_path):
    _, manifest = workspace
    out = tmp_path / "out"
    assert main(["null", str(manifest)] + quick_args(out)) == 0
    text = (out / "gauss-null.txt").read_text()
    assert "random(max)" in text and "histogram auc" in text
    records = [
        json.loads(l) for l in (out / "gauss-null.jsonl").read_text().splitlines()
    ]
    assert sum(r["record"] == "null_list" for r in records) == 3


def test_compare_identical_embedding_reports_indistinguishable(workspace, tmp_path):
    ws, manifest = workspace
    # same embedding under two names
    emb_path = load_manifest(str(manifest)).embeddings[0][1].path
    m2 = ws / "two.ini"
    ca = ws / "ca.txt"
    m2.write_text(
        f"[embeddings]\na = {emb_path}\nb = {emb_path}\n[concepts]\nalpha = {ca}\n"
    )
    out = tmp_path / "out"
    assert main(["compare", str(m2), "a", "b"] + quick_args(out)) == 0
    text = (out / "compare-a-b.txt").read_text()
    assert "indistinguishable" in text


def test_compare_outcome_attaches_published_note():
    outcome, note = compare_outcome(
        list(PUBLISHED_FASTTEXT_AUCS), list(PUBLISHED_GLOVE_AUCS), "greater"
    )
    assert note == REFERENCE_COMPARISON_NOTE
    assert outcome.w_minus == 5.0
    outcome2, note2 = compare_outcome([0.9, 0.8, 0.7], [0.5, 0.6, 0.4], "greater")
    assert note2 == ""


def test_compare_report_text_mean_median_rows():
    cfg = ExperimentConfig(iterations=1, train=TrainConfig(epochs=1))
    names = ["c1", "c2", "c3"]
    a = {"c1": 0.9, "c2": 0.8, "c3": 0.7}
    b = {"c1": 0.6, "c2": 0.85, "c3": 0.65}
    outcome, note = compare_outcome([a[n] for n in names], [b[n] for n in names], "greater")
    text = report.compare_report_text("ea", "eb", names, a, b, outcome, cfg, note)
    assert f"{np.mean([0.9, 0.8, 0.7]):.3f}" in text
    assert f"{np.median([0.6, 0.85, 0.65]):.3f}" in text
    assert "wilcoxon" in text


def test_gen_random_embedding_roundtrip(tmp_path):
    out = tmp_path / "g.txt"
    assert main(
        ["gen-random-embedding", str(out), "--words", "30", "--dim", "4", "--seed", "9"]
    ) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 30
    assert len(lines[0].split()) == 5
    # same seed regenerates identical bytes
    out2 = tmp_path / "g2.txt"
    main(["gen-random-embedding", str(out2), "--words", "30", "--dim", "4", "--seed", "9"])
    assert out.read_bytes() == out2.read_bytes()


def test_expand_wildcards_command(tmp_path):
    emb = tmp_path / "e.txt"
    emb.write_text("happy 1.0\nhappier 2.0\nsad 3.0\n")
    lst = tmp_path / "l.txt"
    lst.write_text("happ*\nsad\n")
    out = tmp_path / "expanded.txt"
    assert main(["expand-wildcards", str(lst), str(emb), "--out", str(out)]) == 0
    assert out.read_text().splitlines() == ["happier", "happy", "sad"]


def test_runtime_error_exit_code(workspace, tmp_path):
    _, manifest = workspace
    # concept larger than half the vocabulary -> split failure mid-run
    ws = manifest.parent
    big = ws / "big.txt"
    store_words = [f"w{i:03d}" for i in range(120)]
    big.write_text("\n".join(store_words[:80]) + "\n")
    m = ws / "big.ini"
    emb_path = load_manifest(str(manifest)).embeddings[0][1].path
    m.write_text(f"[embeddings]\ng = {emb_path}\n[concepts]\nbig = {big}\n")
    rc = main(["eval", str(m)] + quick_args(tmp_path / "o"))
    assert rc == 2
