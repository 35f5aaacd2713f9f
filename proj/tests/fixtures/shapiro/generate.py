"""Regenerates shapiro_reference.json: 20 sample vectors (n = 10..100) drawn
from normal, exponential and uniform distributions, scored with scipy's
Shapiro-Wilk implementation."""
import json
import pathlib

import numpy as np
import scipy
from scipy import stats

rng = np.random.default_rng(20240611)
sizes = np.linspace(10, 100, 20).astype(int)
draws = ["normal", "exponential", "uniform"]
vectors = []
for k, n in enumerate(sizes):
    kind = draws[k % 3]
    if kind == "normal":
        x = rng.normal(50.0, 12.0, n)
    elif kind == "exponential":
        x = rng.exponential(3.0, n)
    else:
        x = rng.uniform(-5.0, 5.0, n)
    x = [float(f"{v:.6f}") for v in x]
    w, p = stats.shapiro(x)
    vectors.append({"distribution": kind, "n": int(n), "values": x, "w": float(w), "p": float(p)})

extra = [1.0, 1.0, 1.0, 2.0]
w, p = stats.shapiro(extra)
out = {
    "generator": f"scipy {scipy.__version__} scipy.stats.shapiro",
    "vectors": vectors,
    "near_degenerate": {"values": extra, "w": float(w), "p": float(p)},
}
path = pathlib.Path(__file__).with_name("shapiro_reference.json")
path.write_text(json.dumps(out, indent=1) + "\n")
