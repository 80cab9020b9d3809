"""Random-word-list null distribution and empirical p-values.

Many random concepts are pushed through the full protocol; the per-metric
maximum over those lists (random(max)) is the bar a real concept must clear.
The p-value uses the add-one convention, printed as "< 1/(N+1)" when the
observation beats every null list.
"""

from conceptlearn import (
    ExperimentConfig,
    TrainConfig,
    empirical_p_value,
    format_p_value,
    random_gaussian_embedding,
    run_null,
)

store = random_gaussian_embedding(
    [f"w{i:04d}" for i in range(2000)], 50, seed=2, name="gaussian"
)
cfg = ExperimentConfig(
    iterations=20, random_list_count=200, random_list_size=40,
    master_seed=9, train=TrainConfig(epochs=50),
)

null = run_null(store, cfg)
print("random(max):", {k: round(v, 3) for k, v in null.max_row.items()})
print("random(avg):", {k: round(v, 3) for k, v in null.mean_row.items()})

null_aucs = [m["auc"] for m in null.per_list]
for observed in (0.51, 0.56, 0.95):
    p = empirical_p_value(observed, null_aucs)
    print(f"observed AUC {observed:.2f}: p = {p:.4f}, "
          f"reported as {format_p_value(observed, null_aucs)!r}")
