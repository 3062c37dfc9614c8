import numpy as np

from seqgen import *
from seqgen.recipes import (adiabatic_recipe, atomic_w_cascade,
                            cluster_state, run_atomic_cluster)

# photonic W, GHZ and cluster states from a single atom in a cavity
for kind in ('W', 'GHZ', 'CLUSTER'):
    recipe = adiabatic_recipe(kind, 5)
    photons, atom, decoupled = recipe.run()
    print(kind, schmidt_profile(photons), decoupled)

# atomic W state: cascade through the cavity, then read the cavity in +/-
joint = atomic_w_cascade(4)
plus = np.array([[1, 1], [1, -1]]) / np.sqrt(2.0)
p, atoms = measure_ancilla(joint, plus, 0)
print(p, schmidt_profile(atoms))

# atomic cluster state with the single-atom phase compensation
p, atoms = run_atomic_cluster(5)
print(p, fidelity(atoms, cluster_state(5)))
