#!/usr/bin/env python3
"""Tour of the local layer: PI tracking with reference and ambient
feedforward, gain selection, rest points, and the port that exposes the
unmeasured heat gain.

The headline identity: at any rest point the port output satisfies
y_p = -M d_q, so a supervisor that reads y_p learns the DC heat gain
without a sensor for it.
"""

import numpy as np

import hvacopt as hv
from hvacopt.control import (PlantState, closed_loop_rhs, outputs_p,
                             select_kappa, simulate_closed_loop, steady_state)

np.set_printoptions(precision=5, suppress=True)

net, eq = hv.desk_network(seed=7)
plant = hv.linearize(net, eq)

ok, mineig = hv.check_actuated_product(plant)
print(f"actuated product M A1 + A1 M positive definite: {ok} "
      f"(min eig {mineig:.4f})")
kappa_max, _ = select_kappa(plant)
print(f"largest grid kappa keeping P > 0: {kappa_max:.4e}")

ctrl = hv.make_controller(plant, k_p=6.0e-2, k_i=1.0e-3, kappa=1.0e-3)
print(f"stock gains: k_p={ctrl.k_p}, k_i={ctrl.k_i}, kappa={ctrl.kappa}")
print("P min eig:", np.linalg.eigvalsh(ctrl.P).min())

print("\n=== rest point for a given reference and disturbances ===")
rng = np.random.default_rng(1)
r_star = rng.normal(size=3)
d_q = rng.normal(scale=0.3, size=3)
d_a = rng.normal(scale=0.2, size=plant.n)
x_star, xi_star, zeta_star = steady_state(r_star, d_q, d_a, plant, ctrl)
print("reference r*:", r_star)
print("actuated block of x* (equals r*):", x_star[:3])
dx, dxi = closed_loop_rhs(PlantState(x=x_star, xi=xi_star), r_star, d_q,
                          d_a, plant, ctrl)
print("closed-loop rates at the rest point:", np.abs(dx).max(),
      np.abs(dxi).max())
_, y_p, _ = outputs_p(PlantState(x=x_star, xi=xi_star), r_star, ctrl, plant)
print("y_p at rest:", y_p)
print("-M d_q:     ", -plant.M @ d_q)

print("\n=== integral action removes constant offsets ===")
t, X, XI = simulate_closed_loop(plant, ctrl, np.zeros(plant.n),
                                np.zeros(3), r_star, d_q, d_a,
                                horizon=6000.0, dt=0.5)
for frac in (0.1, 0.3, 1.0):
    k = int(frac * (len(t) - 1))
    gap = np.abs(X[k, :3] - r_star).max()
    print(f"  t = {t[k]:6.0f} s: |x1 - r*| = {gap:.2e}")

print("\n=== estimate quality while tracking ===")
_, y_p_end, _ = outputs_p(PlantState(x=X[-1], xi=XI[-1]), r_star, ctrl, plant)
print("recovered d_q from the port:", -plant.Minv @ y_p_end)
print("true d_q:                   ", d_q)
