"""Compare two noisy scorers the way the evaluation tables do.

AUC by rank sum, a paired bootstrap of the AUC difference, the CI-derived
p-value, and Benjamini-Hochberg across a small family of comparisons.

    python3 demos/statistics_tour.py
"""

import numpy as np

from openset_cxr import bh_adjust, bootstrap_diff, roc_auc
from openset_cxr.stats import ScoredSet

rng = np.random.default_rng(0)
n = 400
labels = rng.integers(0, 2, size=n)
ids = np.array([f"s{i:04d}" for i in range(n)])

# three scorers with decreasing signal
scorers = {name: labels * shift + rng.normal(size=n) for name, shift in
           (("strong", 1.5), ("medium", 1.2), ("weak", 0.6))}
for name, s in scorers.items():
    print(f"{name:6s} AUC {roc_auc(s, labels):.3f}")

print("\npaired bootstrap, 1000 replicates")
results = []
for a, b in (("strong", "medium"), ("strong", "weak"), ("medium", "weak")):
    res = bootstrap_diff(ScoredSet(ids, scorers[a], labels), ScoredSet(ids, scorers[b], labels), 1000, seed=1)
    results.append(((a, b), res))
    lo, hi = res.ci
    print(f"{a} - {b}: {res.mean_diff:+.3f} ({lo:+.3f}, {hi:+.3f})  p = {res.p_value:.3g}")

adjusted = bh_adjust([r.p_value for _, r in results])
print("\nBH-adjusted:")
for ((a, b), res), p in zip(results, adjusted):
    flag = "significant" if p < 0.05 else "not significant"
    print(f"{a} - {b}: {p:.3g} ({flag})")
