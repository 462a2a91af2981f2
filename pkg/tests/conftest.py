import pytest

from gccbicolor.gcc import default_gprime, import_paper_solution
from oracles import StarJoinOracle, ansatz_allowed

# Hand-propagated solution over the derived G'; the ansatz fills w-colors 1, 3, 5.
REFERENCE_ENTRIES = [
    ("y_0", "x'_2", 2, "4c"),
    ("y_0", "x'_4", 4, "2a"),
    ("y_1", "x'_3", 2, "2a"),
    ("y_1", "x_4", 4, "4c"),
    ("y_2", "x'_1", 2, "2b"),
    ("y_2", "x_1", 4, "4c"),
    ("y_3", "x_5", 2, "2a"),
    ("y_3", "x'_5", 4, "4b"),
    ("y_4", "x_2", 2, "2a"),
    ("y_4", "x'_3", 4, "4c"),
    ("y_5", "x_4", 2, "2b"),
    ("y_5", "x_2", 4, "4b"),
]

# Frozen after the first derivation.  The oracle reproduces the first three;
# the unrestricted reversible count is checked between two engine paths.
UNRESTRICTED_COUNT = 3_685_171_200
FIX_135_COUNT = 6
FIX_135_REVERSIBLE_COUNT = 4
REVERSIBLE_COUNT = 136_620


def reference_doc() -> dict:
    return {"ansatz135": True, "entries": [{"y": y, "x": x, "w": w, "pair": p} for y, x, w, p in REFERENCE_ENTRIES]}


@pytest.fixture(scope="session")
def gprime():
    return default_gprime()


@pytest.fixture(scope="session")
def reference(gprime):
    sol, report = import_paper_solution(reference_doc(), gprime)
    assert report.ok and sol.complete
    return sol


@pytest.fixture(scope="session")
def oracle_full(gprime):
    return StarJoinOracle(gprime.graph)


@pytest.fixture(scope="session")
def oracle_fix135_solutions(gprime):
    return StarJoinOracle(gprime.graph, ansatz_allowed(gprime.graph)).solutions()


@pytest.fixture(scope="session")
def oracle_first_star_counts(oracle_full):
    return oracle_full.counts_by_first_star()
