"""Session fixtures shared by the unit and acceptance suites.

The exhaustive sweeps are expensive, so each one runs at most once per
session and every test that needs its result reuses the same report.
The brute-force oracle cache is likewise shared: the equivalence and
normality sweeps hit many of the same graphs.
"""

import pytest

from cutgor.sweeps import (
    OracleCache,
    sweep_compressed_implication,
    sweep_decomposition,
    sweep_normality_closure,
    sweep_special_simplices,
    sweep_theorem_equivalence,
)


@pytest.fixture(scope="session")
def oracle_cache():
    return OracleCache()


@pytest.fixture(scope="session")
def equivalence_report(oracle_cache):
    return sweep_theorem_equivalence(max_n=5, max_m=7, cache=oracle_cache)


@pytest.fixture(scope="session")
def simplices_report():
    return sweep_special_simplices(max_n=5)


@pytest.fixture(scope="session")
def compressed_report():
    return sweep_compressed_implication(max_n=7)


@pytest.fixture(scope="session")
def decomposition_report():
    return sweep_decomposition(max_n=7)


@pytest.fixture(scope="session")
def normality_report(oracle_cache):
    return sweep_normality_closure(max_n=5, max_m=7, cache=oracle_cache)
