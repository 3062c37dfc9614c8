from seqgen import *
from seqgen.library import SQRT_ISWAP

# the sqrt(ISWAP) pulse between atom and cavity
model = CavityModel(g=1.0, omega=1.0, delta=200.0)
t, u = sqrt_iswap_pulse(model)
print(t, abs(u - SQRT_ISWAP).max())

# how well the full three level model reproduces it
for delta in (50, 100, 200, 400):
    err, leak = selectivity_error(CavityModel(delta=delta), 'full',
                                  full_output=True)
    print(delta, err, leak)

# the ISWAP decompositions into CZ or CNOT
print(verify_decomposition('CZ_FORM'), verify_decomposition('CNOT_FORM'))
