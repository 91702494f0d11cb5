"""Symmetry breaking of average chord-power maximizers.

For p < 2 the circle maximizes the p-th power mean of chord lengths
among closed unit-speed curves of length 2*pi.  For large p the doubly
covered segment wins; somewhere in between the circle branch loses its
maximality.  This script locates the closed-form crossover between the
two reference shapes, then runs the continuation sweep and reports the
width ratio r(p) of the computed maximizers.

Expect a few minutes of runtime at the default resolution.
"""

from chordenergy import (
    OptimizeOptions,
    circle_avg_chord,
    crossover_segment_circle,
    segment_avg_chord,
    sweep,
)

crossover = crossover_segment_circle()
print(f"segment overtakes circle at p = {crossover:.4f}")
for p in (2.0, 3.0, crossover, 4.0):
    print(f"  p={p:.4f}  A_p(circle)={circle_avg_chord(p):.6f}  "
          f"A_p(segment)={segment_avg_chord(p):.6f}")

grid = [round(3.0 + 0.05 * i, 2) for i in range(15)]
print(f"\ncontinuation sweep over p in [{grid[0]}, {grid[-1]}] ...")
opts = OptimizeOptions(n=256, max_iters=2000)
for rec in sweep(grid, opts):
    marker = "  <-- symmetry broken" if rec.r > 1.05 else ""
    print(f"  p={rec.p:.2f}  A_p={rec.value:.6f}  r(p)={rec.r:.4f}  "
          f"log10 efit={rec.efit_log10:6.2f}{marker}")
