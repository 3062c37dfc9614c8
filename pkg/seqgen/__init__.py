__doc__ = """
seqgen compiles matrix-product states into sequences of isometries acting
on a single ancilla, simulates the sequential emission of the qubits, and
models the cavity-QED gates that realise the emission with atoms and
photons.

Modules:

    mps         dense states, MPS, Schmidt ranks
    compiler    MPS -> generation plan
    generation  plan, standard map, qubit chain and measurement simulation
    library     gate matrices and ISWAP identities
    recipes     W, GHZ and cluster targets and recipes
    cavity      atom-cavity Hamiltonians and sqrt(ISWAP) pulses
    parser      JSON and CSV formats

"""

from ._version import __version__
from .errors import InputError, SeqgenError
from .mps import (BondProfile, MatrixProductState, PureState, fidelity,
                  mps_from_dense, mps_to_dense, product_state, random_mps,
                  random_state, schmidt_profile, schmidt_rank_at_cut)
from .compiler import (GenerationPlan, Isometry, compile_plan, isometry_dims,
                       verify_plan)
from .generation import (GateLayer, JointState, measure_ancilla,
                         run_ancilla_swap_chain, run_plan, run_qubit_chain,
                         run_standard_map, standard_map_plan)
from .library import gate, verify_decomposition
from .cavity import (CavityModel, PolarizationModel, selectivity_error,
                     sqrt_iswap_pulse)

__all__ = ['__version__', 'SeqgenError', 'InputError',
           'BondProfile', 'MatrixProductState', 'PureState', 'fidelity',
           'mps_from_dense', 'mps_to_dense', 'product_state', 'random_mps',
           'random_state', 'schmidt_profile', 'schmidt_rank_at_cut',
           'GenerationPlan', 'Isometry', 'compile_plan', 'isometry_dims',
           'verify_plan', 'GateLayer', 'JointState', 'measure_ancilla',
           'run_ancilla_swap_chain', 'run_plan', 'run_qubit_chain',
           'run_standard_map', 'standard_map_plan', 'gate',
           'verify_decomposition', 'CavityModel', 'PolarizationModel',
           'selectivity_error', 'sqrt_iswap_pulse']
