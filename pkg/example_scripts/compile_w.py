import numpy as np

from seqgen import *
from seqgen.recipes import WParams, target_w_state

# a 6 qubit W state with its bond profile
psi = target_w_state(WParams.uniform(6))
print(schmidt_profile(psi))                # BondProfile([1, 2, 2, 2, 2, 2, 1])

# compile into a plan on a two level ancilla
mps = mps_from_dense(psi)
plan = compile_plan(mps)
print(plan.ancilla_dim, plan.schedule)
print(max(plan.residuals()))               # all steps isometric

# run it; verify_plan raises if the ancilla does not decouple
print(verify_plan(plan, psi))

# the same state from a random generic state needs a larger ancilla
rng = np.random.default_rng(7)
phi = random_state(6, rng)
plan = compile_plan(mps_from_dense(phi))
print(plan.ancilla_dim, isometry_dims(6, plan.ancilla_dim))
print(verify_plan(plan, phi))
