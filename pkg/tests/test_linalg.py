"""Linear solving over the field of rational functions in one variable."""

from fractions import Fraction

from hypothesis import given, strategies as st

from telescope.linalg import det_fractions, nullspace, solve_linear
from telescope.poly import Poly
from telescope.ratfunc import RatFunc


def R(text):
    return RatFunc(Poly.parse(text, "n"), Poly.one("n"))


def const(c):
    return RatFunc.constant(Fraction(c), "n")


n = R("n")
n_inv = n.inverse()


def test_identity_system():
    sol = solve_linear([[const(1), const(0)], [const(0), const(1)]],
                       [n, n_inv])
    assert sol == [n, n_inv]


def test_free_variable_pinned_to_zero():
    sol = solve_linear([[const(1), const(1)]], [n])
    assert sol == [n, RatFunc.zero("n")]


def test_inconsistent_returns_none():
    assert solve_linear([[const(1)], [const(1)]], [const(1), const(2)]) is None


def test_rational_function_pivots():
    # n*x + y = n^2 + 1; x - y = n^2 - 1 -> x = n + ... exact over Q(n)
    a = [[n, const(1)], [const(1), const(-1)]]
    rhs = [R("n^2 + 1"), R("n^2 - 1")]
    sol = solve_linear(a, rhs)
    assert sol is not None
    for row, b in zip(a, rhs):
        acc = RatFunc.zero("n")
        for entry, x in zip(row, sol):
            acc = acc + entry * x
        assert acc == b


def test_nullspace_basis():
    basis = nullspace([[const(1), const(1), const(0)]], "n")
    assert len(basis) == 2
    for vec in basis:
        assert vec[0] + vec[1] == RatFunc.zero("n")


def test_nullspace_trivial():
    assert nullspace([[const(1), const(0)], [const(0), const(1)]], "n") == []


def test_det_fractions():
    assert det_fractions([[Fraction(1), Fraction(2)],
                          [Fraction(3), Fraction(4)]]) == -2
    assert det_fractions([[Fraction(1)]]) == 1


entries = st.integers(-5, 5)


@given(st.lists(st.lists(entries, min_size=3, max_size=3),
                min_size=2, max_size=4),
       st.lists(entries, min_size=2, max_size=4))
def test_solution_satisfies_system(matrix, rhs):
    rows = min(len(matrix), len(rhs))
    a = [[const(x) for x in row] for row in matrix[:rows]]
    b = [const(x) for x in rhs[:rows]]
    sol = solve_linear(a, b)
    if sol is None:
        return
    for row, want in zip(a, b):
        acc = RatFunc.zero("n")
        for entry, x in zip(row, sol):
            acc = acc + entry * x
        assert acc == want
