import pytest
from hypothesis import strategies as st

from sudoku_spectra.tiling import Tiling, from_cell_sets, random_tiling

# The 4x4 free-form example used throughout: row 1 is one block, the other
# three blocks are non-contiguous.
FREEFORM4_BLOCKS = [{1, 2, 3, 4}, {5, 9, 13, 14}, {6, 8, 12, 16}, {7, 10, 11, 15}]

# Both layers have constant row sums here, yet the row and column layers do
# not commute.
NONCOMMUTING4_BLOCKS = [{1, 8, 9, 16}, {3, 6, 10, 15}, {2, 7, 11, 14}, {4, 5, 12, 13}]


@pytest.fixture(scope="session")
def freeform4() -> Tiling:
    return from_cell_sets(4, FREEFORM4_BLOCKS)


@pytest.fixture(scope="session")
def noncommuting4() -> Tiling:
    return from_cell_sets(4, NONCOMMUTING4_BLOCKS)


@pytest.fixture(scope="session")
def random_sample_100() -> list[Tiling]:
    """100 deterministic random tilings with m cycling over 2..6."""
    return [random_tiling(2 + i % 5, seed=i) for i in range(100)]


@st.composite
def tilings(draw, min_m: int = 1, max_m: int = 5) -> Tiling:
    m = draw(st.integers(min_m, max_m))
    ids = [b for b in range(m) for _ in range(m)]
    perm = draw(st.permutations(ids))
    return Tiling(m, tuple(perm))
