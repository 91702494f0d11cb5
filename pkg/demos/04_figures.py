"""Full experiment reproduction: sweep, curve gallery, and plots.

Writes sweep.csv, per-exponent curve JSON files, and three SVG figures
(maximizer gallery, width ratio against p, ellipse-fit error against p)
into ./figures_out.  The default grid spans p in [1, 4] with a fine
sub-grid across the transition; expect a long run.  Pass --quick for a
coarse, fast variant.
"""

import sys

from chordenergy import ExperimentConfig, reproduce_figures

if "--quick" in sys.argv:
    config = ExperimentConfig(p_min=2.0, p_max=4.0, p_step=0.25,
                              n=128, max_iters=800)
else:
    config = ExperimentConfig(
        fine_grid=tuple(round(3.462 + 0.002 * i, 10) for i in range(12)))

paths = reproduce_figures("figures_out", config)
for key, value in paths.items():
    if key != "records":
        print(f"{key}: {value}")
