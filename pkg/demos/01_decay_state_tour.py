"""Tour of the three-photon decay state, from geometry to amplitudes.

A spin-1 system at rest decays into three photons in a plane. Once two of
the opening angles are chosen the kinematics is fixed: the third angle,
the photon energies, and the momentum directions all follow. The decay
amplitude then assigns a complex number to each of the eight helicity
triples, and that eight-component vector is the entangled state the rest
of this package studies.

Run:  python demos/01_decay_state_tour.py
"""
import numpy as np

from triphoton import (
    geometry_from_angles,
    helicity_table,
    mercedes_geometry,
    ortho_state,
    photon_energies,
    spin_projection_state,
)


def show_geometry(theta12, theta13):
    g = geometry_from_angles(theta12, theta13)
    print(f"openings: 1-2 = {g.theta12_deg:g} deg, 1-3 = {g.theta13_deg:g} deg, "
          f"2-3 = {g.theta23_deg:g} deg")
    energies = photon_energies(g)
    print(f"energies (total 2): {np.round(energies, 6)}")
    print(f"momentum sum: {np.round(energies @ g.unit_vectors, 12)}")
    return g


def main():
    print("== the symmetric decay ==")
    g = mercedes_geometry()
    show_geometry(g.theta12_deg, g.theta13_deg)
    state = ortho_state(g, 0)
    print("spin-0 branch amplitudes (basis +++ .. ---):")
    print(np.round(state.amplitudes.real, 6))
    print("every feasible geometry weights the three 'one photon odd' pairs;")
    print("at 120-120-120 all six entries are equal and the state is uniform.\n")

    print("== an asymmetric decay ==")
    g = show_geometry(90.0, 135.0)
    for sz in (0, 1):
        state = ortho_state(g, sz)
        print(f"spin_z = {sz:+d}: {np.round(state.amplitudes.real, 6)}")
    print("the spin-raised branch flips the sign of one member of each pair.\n")

    print("== the same state from the vector amplitudes ==")
    # building block: per helicity triple the amplitude is a 3-vector; its
    # projections give the three spin branches
    table = helicity_table(g)
    entry = table.entry(+1, +1, -1)
    print(f"V(+,+,-) = {np.round(entry.vector, 6)}")
    route = spin_projection_state(g, 0)
    closed = ortho_state(g, 0)
    gap = np.abs(route.amplitudes - closed.amplitudes).max()
    print(f"projection route vs closed form: max gap {gap:.3g}")


if __name__ == "__main__":
    main()
