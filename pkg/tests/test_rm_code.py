from itertools import combinations, product
from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rmacode import BitVector, ParameterError, SubcodeParams, build_generator
from rmacode.errors import DimensionError, GuardrailError
from rmacode.rm_code import (
    dimension,
    encode,
    encode_source,
    minimum_distance,
    prefix_codeword_weights,
    rank,
    source_to_input,
    subcode_codewords,
)

from conftest import valid_configs


def as_matrix(code):
    return np.array([[int(b) for b in format(row, f"0{code.n}b")] for row in code.rows])


def monomial_oracle(m, r):
    """Generator built straight from evaluations of monomials in complemented variables."""
    n = 2**m
    cols = [[1 - ((c >> i) & 1) for i in range(m)] for c in range(n)]
    rows = []
    for j in range(r, 0, -1):
        subsets = sorted(combinations(range(m), j), key=lambda s: s[::-1])
        for s in subsets:
            rows.append([int(all(col[i] for i in s)) for col in cols])
    rows.append([1] * n)
    return np.array(rows)


def test_example_generator_rm21():
    code = build_generator(2, 1)
    assert as_matrix(code).tolist() == [[1, 0, 1, 0], [1, 1, 0, 0], [1, 1, 1, 1]]
    assert code.to_text() == "1010\n1100\n1111\n"


def test_rm11():
    assert as_matrix(build_generator(1, 1)).tolist() == [[1, 0], [1, 1]]


def test_rm31_last_degree_one_row():
    code = build_generator(3, 1)
    start, stop = code.block_bounds[1]
    assert str(code.row(stop - 1)) == "11110000"


@pytest.mark.parametrize("m,r", [(m, r) for m in range(1, 7) for r in range(0, m + 1)])
def test_generator_invariants(m, r):
    code = build_generator(m, r)
    G = as_matrix(code)
    assert G.shape == (sum(comb(m, i) for i in range(r + 1)), 2**m)
    assert code.k_dim == dimension(m, r)
    assert rank(code.rows) == code.k_dim
    assert G[-1].tolist() == [1] * code.n
    for i in range(1, r + 1):
        _, stop = code.block_bounds[i]
        assert code.row(stop - 1) == BitVector.prefix(2 ** (m - i), code.n)
    assert (G == monomial_oracle(m, r)).all()


@pytest.mark.parametrize("m,r", [(m, r) for m in range(1, 5) for r in range(0, m + 1)])
def test_minimum_distance_exhaustive(m, r):
    code = build_generator(m, r)
    G = as_matrix(code)
    U = np.array(list(product([0, 1], repeat=code.k_dim))[1:])
    brute = int(((U @ G) % 2).sum(axis=1).min())
    assert brute == 2 ** (m - r)
    assert minimum_distance(code) == brute


def test_parameter_errors():
    with pytest.raises(ParameterError):
        build_generator(2, 3)
    with pytest.raises(ParameterError):
        build_generator(0, 0)
    with pytest.raises(GuardrailError):
        build_generator(21, 1)


@pytest.mark.parametrize(
    "u,expected", [("100", "1010"), ("000", "0000"), ("110", "0110")]
)
def test_encode_examples(u, expected):
    assert str(encode(build_generator(2, 1), BitVector.from_str(u))) == expected


def test_encode_dimension_error():
    with pytest.raises(DimensionError):
        encode(build_generator(2, 1), BitVector.from_str("10"))


@pytest.mark.parametrize(
    "m,M,s,u", [(2, 2, "10", "100"), (5, 4, "0000", "000000"), (5, 4, "1011", "010110")]
)
def test_source_to_input(m, M, s, u):
    code = build_generator(m, 1)
    assert str(source_to_input(code, SubcodeParams(M, 1), BitVector.from_str(s))) == u


def test_source_to_input_dimension_error():
    with pytest.raises(DimensionError):
        source_to_input(build_generator(2, 1), SubcodeParams(2, 1), BitVector.from_str("1"))


@pytest.mark.parametrize("s,c", [("01", "1100"), ("00", "0000"), ("10", "1010"), ("11", "0110")])
def test_encode_source_toy(s, c):
    assert str(encode_source(build_generator(2, 1), SubcodeParams(2, 1), BitVector.from_str(s))) == c


def test_encode_source_selects_last_degree_one_row():
    code = build_generator(4, 1)
    s = np.array([0, 0, 0, 1])
    G = as_matrix(code)
    oracle = (np.concatenate([s, [0]]) @ G) % 2
    got = encode_source(code, SubcodeParams(4, 3), BitVector.from_str("0001"))
    assert got.to_array().tolist() == oracle.tolist()
    assert got == BitVector.prefix(8, 16)


def test_subcode_params_validation():
    code = build_generator(3, 0)
    with pytest.raises(ParameterError, match="all-one row"):
        SubcodeParams(1, 1).validate(code)
    with pytest.raises(ParameterError):
        SubcodeParams(1, 2)
    with pytest.raises(ParameterError):
        SubcodeParams(2, 0)
    with pytest.raises(ParameterError):
        SubcodeParams(3, 1).validate(build_generator(2, 1))
    SubcodeParams(3, 1, freeze_last=False).validate(build_generator(2, 1))
    with pytest.raises(ParameterError):
        SubcodeParams(4, 1, freeze_last=False).validate(build_generator(2, 2))


def prefix_oracle(code, params):
    found = set()
    for _, cw in subcode_codewords(code, params):
        c = BitVector(code.n, cw)
        w = c.weight()
        if 0 < w < code.n and c == BitVector.prefix(w, code.n):
            found.add(w)
    return found


def test_prefix_weights_examples():
    assert prefix_codeword_weights(build_generator(2, 1), SubcodeParams(2, 1)) == {2}
    assert prefix_codeword_weights(build_generator(4, 1), SubcodeParams(4, 1)) == {8}
    assert 4 not in prefix_codeword_weights(build_generator(2, 1), SubcodeParams(2, 1))


@pytest.mark.parametrize("m,r,M,l", valid_configs(max_m=5, max_M=8, max_l=1))
def test_prefix_weights_match_enumeration(m, r, M, l):
    code = build_generator(m, r)
    params = SubcodeParams(M, l)
    assert prefix_codeword_weights(code, params) == prefix_oracle(code, params)


CONFIGS = valid_configs(max_m=5, orders=(1, 2, 3), max_M=10, max_l=1)


@st.composite
def source_pairs(draw):
    m, r, M, l = draw(st.sampled_from(CONFIGS))
    a = draw(st.integers(0, 2**M - 1))
    b = draw(st.integers(0, 2**M - 1))
    return m, r, M, BitVector(M, a), BitVector(M, b)


@settings(max_examples=300, deadline=None)
@given(source_pairs())
def test_linearity(case):
    m, r, M, s, s2 = case
    code, params = build_generator(m, r), SubcodeParams(M, 1)
    lhs = encode_source(code, params, s) ^ encode_source(code, params, s2)
    assert lhs == encode_source(code, params, s ^ s2)


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(m, r) for m in range(1, 6) for r in range(0, m + 1)]), st.data())
def test_complement_of_neighbouring_inputs(mr, data):
    code = build_generator(*mr)
    head = data.draw(st.integers(0, 2 ** (code.k_dim - 1) - 1))
    u = BitVector(code.k_dim, head << 1)
    u2 = BitVector(code.k_dim, (head << 1) | 1)
    assert encode(code, u) ^ encode(code, u2) == BitVector.ones(code.n)
