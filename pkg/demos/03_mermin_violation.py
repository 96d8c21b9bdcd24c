"""Mermin test: how strongly the decay state defies local realism.

The Mermin functional combines four three-party correlations; any local
hidden-variable model keeps it within [-2, 2], while quantum states can
reach -4. This demo evaluates the standard settings, scans the
one-parameter state family to find where violation begins, and lets the
numeric extremizer loose to find every stationary value.

Run:  python demos/03_mermin_violation.py
"""
import numpy as np

from triphoton import (
    delta_family_state,
    ghz_state,
    lr_constraint_check,
    mermin_delta_sweep,
    mermin_extremize,
    mermin_value,
    yx_settings,
)


def main():
    print("== the local-realism box ==")
    check = lr_constraint_check()
    print(f"{check.n_assignments} deterministic assignments, "
          f"values {sorted(check.distinct_values)}, within [-2, 2]: {check.within_bounds}")

    print("\n== standard settings (y unprimed, x primed) ==")
    for name, state in (("symmetric decay", delta_family_state(120.0)),
                        ("GHZ", ghz_state())):
        print(f"{name}: M = {mermin_value(state, yx_settings()):+.9f}")

    print("\n== where violation begins along the family ==")
    grid = mermin_delta_sweep(60.0, 180.0, 15.0)
    for d, m, v in zip(grid.axes[0], grid.column("mermin_value"),
                       grid.column("violation")):
        marker = "  <-- violates" if v > 0 else ""
        print(f"delta = {d:5.1f}: M = {m:+.6f}, margin {v:+.6f}{marker}")
    print("the boundary sits near delta = 85.9 degrees.")

    print("\n== extremizing over symmetric settings ==")
    # two angles per measurement (shared by all parties): theta, phi for the
    # unprimed setting and theta', phi' for the primed one
    res = mermin_extremize(delta_family_state(120.0), starts=64, seed=0)
    print("stationary values for the symmetric decay state:")
    for p in res.points:
        t, f, tp, fp = p.angles_deg
        print(f"  M = {p.value:+.9f} at theta = {t:7.3f}, phi = {f:7.3f}, "
              f"theta' = {tp:7.3f}, phi' = {fp:7.3f} (|grad| = {p.gradient_norm:.2g})")
    print("the standard settings give -3; a deeper minimum -3.0460 hides nearby.")


if __name__ == "__main__":
    main()
