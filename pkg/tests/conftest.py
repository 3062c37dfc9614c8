import numpy as np
import pytest

from seqgen.recipes import WParams, target_w_state

SEED = 20240611


@pytest.fixture
def rng():
    return np.random.default_rng(SEED)


@pytest.fixture
def w4():
    return target_w_state(WParams.uniform(4))


@pytest.fixture(autouse=True)
def _no_outdir(monkeypatch):
    monkeypatch.delenv('SEQGEN_OUTDIR', raising=False)
