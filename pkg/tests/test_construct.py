import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rooktds.construct import (
    CATALOG,
    H33,
    H34,
    Kind,
    SPECIAL_KINDS,
    build_component,
    build_from_decomposition,
    construct_last_k_columns,
    construct_min_3tds,
    d_block,
    decompose_counts,
    j_block,
)
from rooktds.gamma import gamma_3t
from rooktds.matrix import BitMatrix, components, is_ktds, line_sums, ones_count


class TestCatalog:
    @pytest.mark.parametrize("kind", list(Kind))
    def test_entry_matches_matrix(self, kind):
        e = CATALOG[kind]
        M = build_component(kind)
        assert M.shape == (e.rows, e.cols)
        assert ones_count(M) == e.ones
        assert is_ktds(M, 3)
        assert len(components(M)) == 1

    def test_entry_invariants(self):
        for kind, e in CATALOG.items():
            if kind.value.startswith("J"):
                assert e.rows + e.cols >= 5 and e.ones == e.rows * e.cols
            if kind.value.startswith("D"):
                assert e.cols == 3 and e.ones == 2 * e.rows and e.rows in (5, 6)

    def test_j14(self):
        assert build_component(Kind.J14) == BitMatrix.from_rows(["1111"])

    def test_d_blocks_as_drawn(self):
        assert d_block(5) == BitMatrix.from_rows(["011", "011", "101", "101", "110"])
        assert d_block(6) == BitMatrix.from_rows(["011", "011", "011", "101", "101", "110"])
        assert build_component("D53", 7) == BitMatrix.from_rows(
            ["011", "011", "011", "011", "101", "101", "110"]
        )

    def test_h_blocks(self):
        H44 = build_component("H44")
        assert H44 == BitMatrix.from_rows(["0011", "0011", "0011", "1111"])
        assert ones_count(H44) == 10
        assert build_component("H45") == BitMatrix.from_rows(["00011", "00011", "00011", "11110"])

    @pytest.mark.parametrize("x,y", [(1, 3), (2, 2), (1, 1)])
    def test_small_j_rejected(self, x, y):
        with pytest.raises(ValueError):
            j_block(x, y)

    def test_small_d_rejected(self):
        with pytest.raises(ValueError):
            d_block(4)
        with pytest.raises(ValueError):
            build_component("J14", 3)

    @given(st.integers(1, 8), st.integers(1, 8))
    def test_j_block_validity(self, x, y):
        if x + y < 5:
            with pytest.raises(ValueError):
                j_block(x, y)
        else:
            assert is_ktds(j_block(x, y), 3)

    @given(st.integers(5, 30))
    def test_d_block_validity(self, x):
        D = d_block(x)
        assert is_ktds(D, 3) and ones_count(D) == 2 * x


class TestLastColumns:
    @pytest.mark.parametrize("n,m", [(2, 3), (3, 5), (4, 8), (7, 30)])
    def test_valid(self, n, m):
        M = construct_last_k_columns(n, m)
        assert is_ktds(M, 3)
        assert ones_count(M) == 3 * n
        assert all(M[i, j] == (j > m - 3) for i in range(1, n + 1) for j in range(1, m + 1))

    def test_two_by_three_is_full(self):
        assert construct_last_k_columns(2, 3) == BitMatrix.ones(2, 3)

    @pytest.mark.parametrize("n,m", [(1, 5), (3, 2)])
    def test_preconditions(self, n, m):
        with pytest.raises(ValueError):
            construct_last_k_columns(n, m)

    def test_single_row_would_fail(self):
        # one row of three ones: each one only sees two others
        assert not is_ktds(BitMatrix.from_rows(["00111"]), 3)


class TestDecompose:
    def test_examples(self):
        assert decompose_counts(4, 6, 10).counts == {Kind.J14: 1, Kind.J32: 1}
        assert decompose_counts(6, 6, 14).counts == {Kind.J14: 1, Kind.J52: 1}
        assert decompose_counts(16, 16, 36).counts == {Kind.J16: 1, Kind.J32: 5}
        assert decompose_counts(5, 9, 14).counts == {Kind.J14: 1, Kind.H45: 1}

    def test_totals(self):
        d = decompose_counts(16, 16, 36)
        assert (d.rows, d.cols, d.ones) == (16, 16, 36)

    def test_not_found(self):
        # 4x4 with 9 ones is below the optimum
        assert decompose_counts(4, 4, 9) is None

    def test_preconditions(self):
        with pytest.raises(ValueError):
            decompose_counts(3, 5, 9)
        with pytest.raises(ValueError):
            decompose_counts(6, 5, 14)

    def test_pure_case_preferred(self):
        # residue 0: only J(1,4) and J(3,2)
        for n, m in [(4, 6), (8, 12), (7, 14), (10, 15)]:
            if (2 * n - 3 * m) % 10 == 0:
                d = decompose_counts(n, m, gamma_3t(n, m).value)
                assert set(d.counts) <= {Kind.J14, Kind.J32}

    def test_pure_ones_formula(self):
        # a decomposition with no H or J52 block has ceil((8n+3m)/5) ones, +1 for residue 5, 6
        for n in range(4, 30):
            for m in range(n, 3 * n):
                g = gamma_3t(n, m).value
                if g == 3 * n:
                    continue
                d = decompose_counts(n, m, g)
                if not set(d.counts) & {Kind.H44, Kind.H45, Kind.J52}:
                    bump = 1 if (2 * n - 3 * m) % 10 in (5, 6) else 0
                    assert d.ones == -(-(8 * n + 3 * m) // 5) + bump

    def test_special_cap(self):
        for n in range(4, 30):
            for m in range(n, 3 * n):
                g = gamma_3t(n, m).value
                if g < 3 * n:
                    d = decompose_counts(n, m, g)
                    assert all(d.counts.get(k, 0) <= 2 for k in SPECIAL_KINDS)


class TestConstructMin:
    def test_examples(self, fig2):
        M = construct_min_3tds(3, 4)
        assert M == fig2 == H34
        assert construct_min_3tds(1, 5) == BitMatrix.from_rows(["01111"])
        M = construct_min_3tds(7, 7)
        assert ones_count(M) == 16 and is_ktds(M, 3)
        assert construct_min_3tds(2, 2) is None
        assert construct_min_3tds(3, 3) == H33

    def test_transposed_request(self):
        M = construct_min_3tds(9, 5)
        assert M.shape == (9, 5)
        assert M == construct_min_3tds(5, 9).transpose()

    @pytest.mark.parametrize("n,m", [(1, 1), (1, 2), (1, 3), (2, 2), (3, 1), (2, 1)])
    def test_no_solution(self, n, m):
        assert construct_min_3tds(n, m) is None

    def test_deterministic(self):
        assert construct_min_3tds(13, 17) == construct_min_3tds(13, 17)

    @settings(max_examples=200)
    @given(st.integers(1, 45), st.integers(1, 140))
    def test_sound(self, n, m):
        g = gamma_3t(n, m).value
        M = construct_min_3tds(n, m)
        if g is None:
            assert M is None
            return
        assert M.shape == (n, m)
        assert is_ktds(M, 3)
        assert ones_count(M) == g

    def test_components_follow_decomposition(self):
        for n in range(4, 25):
            for m in range(n, 3 * n):
                g = gamma_3t(n, m).value
                if g == 3 * n:
                    continue
                d = decompose_counts(n, m, g)
                M = construct_min_3tds(n, m)
                assert M == build_from_decomposition(d)
                got = sorted((c.shape, c.ones) for c in components(M))
                want = sorted(((e.rows, e.cols), e.ones) for e in d.entries())
                assert got == want

    def test_rows_carry_two_ones(self):
        for n in range(1, 25):
            for m in range(n, 3 * n + 4):
                M = construct_min_3tds(n, m)
                if M is None:
                    continue
                rows, _ = line_sums(M)
                assert min(rows) >= 2
