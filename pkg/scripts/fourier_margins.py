"""Smallest nonzero |lam_hat| of the rank n^2-1 phase matrix, as a function of n."""
import numpy as np

from opschmidt.core import realignment_singular_values
from opschmidt.fourier import find_x, rank_n2_minus_1

for n in range(3, 11):
    u, wit = rank_n2_minus_1(n)
    sv = realignment_singular_values(u)
    print(f"n={n:2d} p={wit.p} x={wit.x:.4f} attempts={wit.attempts} "
          f"min|hat|={wit.min_abs_dft:.3e} sv_gap={sv[n * n - 2] / sv[0]:.3e}/{sv[-1] / sv[0]:.1e}")
    margins = [find_x(n, 1e-6, seed=s).min_abs_dft for s in range(20)]
    print(f"      margin over 20 seeds: median {np.median(margins):.3e}, min {min(margins):.3e}")
