import pytest
from hypothesis import strategies as st

from rooktds.matrix import BitMatrix

# Minimum 3TDS of K3 x K4 as drawn in the paper's figure.
FIG2_ROWS = ["0011", "0011", "1111"]

# 5x7 illustration with a 4x2 component and a 1x5 component.
ILLUSTRATION_ROWS = ["0000011", "0000011", "0000011", "0000011", "1111100"]


@pytest.fixture
def fig2():
    return BitMatrix.from_rows(FIG2_ROWS)


@pytest.fixture
def illustration():
    return BitMatrix.from_rows(ILLUSTRATION_ROWS)


@st.composite
def bit_matrices(draw, max_rows=8, max_cols=8):
    n = draw(st.integers(1, max_rows))
    m = draw(st.integers(1, max_cols))
    cells = draw(st.lists(st.integers(0, 1), min_size=n * m, max_size=n * m))
    return BitMatrix(n, m, tuple(cells))
