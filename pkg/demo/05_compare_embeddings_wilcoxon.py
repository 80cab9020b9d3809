"""Paired comparison of two embeddings with the exact Wilcoxon signed-rank
test on per-concept AUCs.

Also replays the known published GloVe-vs-fastText AUC columns, which
triggers the documented discrepancy note about the published test statistic.
"""

from conceptlearn import wilcoxon_signed_rank
from conceptlearn.cli import compare_outcome
from conceptlearn.stats import (
    PUBLISHED_COMPARISON_LISTS,
    PUBLISHED_FASTTEXT_AUCS,
    PUBLISHED_GLOVE_AUCS,
    critical_value,
)

# synthetic paired AUCs: embedding A is slightly better on most concepts
a = [0.95, 0.93, 0.97, 0.91, 0.96, 0.94, 0.92, 0.95]
b = [0.93, 0.94, 0.95, 0.90, 0.93, 0.94, 0.90, 0.92]
out = wilcoxon_signed_rank(a, b, alternative="greater")
print(f"synthetic pairs: n={out.n_effective} W+={out.w_plus:g} "
      f"W-={out.w_minus:g} p={out.p_value:.4f} ({out.method})")

print("\npublished GloVe vs fastText columns:")
outcome, note = compare_outcome(
    list(PUBLISHED_FASTTEXT_AUCS), list(PUBLISHED_GLOVE_AUCS), "greater"
)
for name, ft, gl in zip(
    PUBLISHED_COMPARISON_LISTS, PUBLISHED_FASTTEXT_AUCS, PUBLISHED_GLOVE_AUCS
):
    print(f"  {name:<10} fastText {ft:.3f}  GloVe {gl:.3f}")
print(f"W- = {outcome.w_minus:g}, exact p = {outcome.p_value:.6f}, "
      f"critical value at alpha=0.01 one-sided (n=10): "
      f"{critical_value(10, 0.01)}")
print(f"note: {note}")
