"""Run the whole experiment on the tiny smoke configuration (about a minute).

Same stages as the CLI: generate, train the four regimes, evaluate,
detect unseen diseases, t-SNE and the summary report. The numbers are not
meaningful at this size; configs/default.yaml is the real experiment.

    python3 demos/smoke_experiment.py
"""

from pathlib import Path

from openset_cxr import Experiment, ExperimentConfig

config = ExperimentConfig.load(Path(__file__).resolve().parents[1] / "configs" / "smoke.yaml")
exp = Experiment(config)

prov = exp.generate()
print(f"dataset {prov['dataset_digest'][:12]}: {prov['counts']}")

for regime in config.regimes:
    desc = exp.train(regime)
    print(f"{regime:17s} {len(desc['members'])} members from {desc['training_studies']} training studies")

exp.evaluate()
exp.detect_unseen()
for regime, path in exp.run_tsne().items():
    print(f"t-SNE {regime}: {path}")

print()
print(exp.report())
