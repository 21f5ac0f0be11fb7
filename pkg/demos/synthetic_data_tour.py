"""Look at the synthetic chest images and the four training regimes.

Writes a contact sheet of example studies to demos_out/studies.png and
prints how many training studies each regime keeps.

    python3 demos/synthetic_data_tour.py
"""

from pathlib import Path

import numpy as np
from PIL import Image

from openset_cxr import LabelProtocol, SynthConfig, apply_regime, generate_synthetic, subgroups
from openset_cxr.data import Regime, Subgroup

out = Path("demos_out")
out.mkdir(exist_ok=True)

protocol = LabelProtocol()
config = SynthConfig(counts={"train": 2000, "valid": 0, "test": 0}, distractors=3)
ds = generate_synthetic(config, protocol)
print(f"{len(ds)} studies, labels: {', '.join(protocol.all_labels)}")

# one row of examples per subgroup
groups = subgroups(ds, protocol)
rows = []
for g in Subgroup:
    idx = np.flatnonzero(groups == g.value)[:6]
    print(f"{g.value:13s} {int(np.sum(groups == g.value)):5d} studies")
    tiles = [ds.images[i, 0] for i in idx]
    tiles += [np.zeros_like(ds.images[0, 0])] * (6 - len(tiles))
    rows.append(np.concatenate(tiles, axis=1))
sheet = np.concatenate(rows, axis=0)
Image.fromarray((sheet * 255).astype(np.uint8)).resize((sheet.shape[1] * 3, sheet.shape[0] * 3)).save(
    out / "studies.png")
print(f"contact sheet: {out / 'studies.png'} (rows: {', '.join(g.value for g in Subgroup)})")

print()
for regime in Regime:
    view = apply_regime(ds, regime, protocol)
    print(f"{regime.value:17s} keeps {len(view):5d} studies, heads: {', '.join(view.labels)}")
