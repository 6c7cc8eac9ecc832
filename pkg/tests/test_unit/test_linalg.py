# -*- coding: utf-8 -*-

"""
Unit tests for the graded linear algebra.

Author: Gertjan van den Burg

"""

import unittest

from fractions import Fraction

from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from aqcoalg.linalg import BigradedVectorSpace
from aqcoalg.linalg import Expresser
from aqcoalg.linalg import Field
from aqcoalg.linalg import GradedLinearMap
from aqcoalg.linalg import GradedVectorSpace
from aqcoalg.linalg import Matrix
from aqcoalg.linalg import Subspace
from aqcoalg.linalg import express
from aqcoalg.linalg import format_label
from aqcoalg.linalg import kernel
from aqcoalg.linalg import linear_kernel
from aqcoalg.linalg import linear_rank
from aqcoalg.linalg import quotient
from aqcoalg.linalg import row_reduce
from aqcoalg.linalg import symmetry
from aqcoalg.linalg import tensor
from aqcoalg.linalg import tensor_many


def f2_matrices(max_rows=6, max_cols=9):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(0, 1), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def q_matrices(max_rows=4, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda m: st.integers(1, max_cols).flatmap(
            lambda n: st.lists(
                st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                min_size=m,
                max_size=m,
            )
        )
    )


def oracle_rank_f2(entries):
    """Elimination on packed rows, pivoting from the last column."""
    ncols = len(entries[0])
    rows = [sum(x << (ncols - 1 - j) for j, x in enumerate(r)) for r in entries]
    rank = 0
    for bit in range(ncols):
        mask = 1 << bit
        pivot = next((r for r in rows if r & mask), None)
        if pivot is None:
            continue
        rows.remove(pivot)
        rows = [r ^ pivot if r & mask else r for r in rows]
        rank += 1
    return rank


class FieldTestCase(unittest.TestCase):
    def test_arithmetic(self):
        self.assertEqual(Field.F2.add(1, 1), 0)
        self.assertEqual(Field.F2.mul(1, 1), 1)
        self.assertEqual(Field.Q.add(Fraction(1, 2), Fraction(1, 3)), Fraction(5, 6))
        self.assertEqual(Field.Q.inv(Fraction(2, 3)), Fraction(3, 2))
        with self.assertRaises(ZeroDivisionError):
            Field.Q.inv(Fraction(0))

    def test_signs(self):
        self.assertEqual(Field.F2.sign(1), 1)
        self.assertEqual(Field.Q.sign(1), -1)
        self.assertEqual(Field.Q.sign(4), 1)
        self.assertEqual(Field.Q.koszul(1, 1), -1)
        self.assertEqual(Field.Q.koszul(2, 1), 1)

    def test_parse_format(self):
        self.assertEqual(Field.Q.parse("3/6"), Fraction(1, 2))
        self.assertEqual(Field.Q.format(Fraction(-2, 4)), "-1/2")
        self.assertEqual(Field.F2.parse("3"), 1)
        self.assertEqual(Field.F2.parse("-2"), 0)
        with self.assertRaises(ValueError):
            Field.F2.parse("1/2")

    def test_from_name(self):
        self.assertIs(Field.from_name("F2"), Field.F2)
        with self.assertRaises(ValueError):
            Field.from_name("F3")


class MatrixTestCase(unittest.TestCase):
    def test_zero_matrix(self):
        rr = row_reduce(Matrix.zeros(Field.F2, 3, 3))
        self.assertEqual(rr.rank, 0)
        self.assertEqual(rr.nullity, 3)

    def test_identity_matrix(self):
        rr = row_reduce(Matrix.identity(Field.Q, 4))
        self.assertEqual(rr.rank, 4)
        self.assertEqual(rr.nullity, 0)

    def test_reduced_form_over_q(self):
        M = Matrix.from_entries(Field.Q, [[2, 4, 0], [1, 2, 1]])
        rr = row_reduce(M)
        self.assertEqual(rr.pivots, (0, 2))
        self.assertEqual(rr.reduced.row(0), (1, 2, 0))
        self.assertEqual(rr.free_columns, (1,))
        self.assertTrue((M @ rr.kernel).is_zero())

    def test_ragged(self):
        with self.assertRaises(ValueError):
            Matrix.from_entries(Field.F2, [[1, 0], [1]])

    @given(f2_matrices())
    @settings(max_examples=200, deadline=None)
    def test_rank_against_oracle(self, entries):
        M = Matrix.from_entries(Field.F2, entries)
        rr = row_reduce(M)
        self.assertEqual(rr.rank, oracle_rank_f2(entries))
        self.assertEqual(rr.rank, row_reduce(M.transpose()).rank)
        self.assertEqual(rr.rank + rr.nullity, M.ncols)
        self.assertTrue((M @ rr.kernel).is_zero())

    @given(q_matrices())
    @settings(max_examples=100, deadline=None)
    def test_rank_nullity_over_q(self, entries):
        M = Matrix.from_entries(Field.Q, entries)
        rr = row_reduce(M)
        self.assertEqual(rr.rank, row_reduce(M.transpose()).rank)
        self.assertEqual(rr.rank + rr.nullity, M.ncols)
        self.assertTrue((M @ rr.kernel).is_zero())


class SparseSystemTestCase(unittest.TestCase):
    def test_linear_kernel(self):
        images = {"a": {"z": 1}, "b": {"z": 1}, "c": {}}
        sub = linear_kernel(Field.F2, ["a", "b", "c"], images.get)
        self.assertEqual(sub.dim, 2)
        for vec in sub.vectors:
            total = {}
            for x, c in vec.items():
                for z, d in images[x].items():
                    total[z] = total.get(z, 0) ^ (c & d)
            self.assertFalse(any(total.values()))
        self.assertEqual(linear_rank(Field.F2, ["a", "b", "c"], images.get), 1)

    def test_subspace(self):
        position = {"a": 0, "b": 1, "c": 2}.get
        sub = Subspace.span(Field.Q, [{"a": 2, "b": 2}, {"a": 1, "b": 1}], position)
        self.assertEqual(sub.dim, 1)
        self.assertTrue(sub.contains({"a": Fraction(5), "b": Fraction(5)}))
        self.assertFalse(sub.contains({"a": 1}))
        self.assertEqual(sub.reduce({"a": 1, "c": 1}), {"b": -1, "c": 1})

    def test_express(self):
        gens = [{"a": 1}, {"a": 1, "b": 1}]
        self.assertEqual(express(Field.F2, gens, {"b": 1}), [1, 1])
        self.assertIsNone(express(Field.F2, gens, {"c": 1}))
        self.assertEqual(express(Field.F2, gens, {}), [0, 0])

    def test_expresser(self):
        position = {"a": 0, "b": 1}.get
        ex = Expresser(Field.Q, [{"a": 1}, {"b": 2}], position)
        self.assertEqual(ex.coefficients({"a": 3, "b": 1}), [3, Fraction(1, 2)])
        self.assertIsNone(Expresser(Field.Q, [{"a": 1}], position).coefficients({"b": 1}))


class GradedSpaceTestCase(unittest.TestCase):
    def setUp(self):
        self.V = GradedVectorSpace(Field.F2, 2, [["v0"], ["v1", "w1"], ["v2"]])
        self.W = GradedVectorSpace(Field.F2, 2, [["u0"], ["u1"]])

    def test_basics(self):
        V = self.V
        self.assertEqual(V.dims(), [1, 2, 1])
        self.assertEqual(V.total_dim, 4)
        self.assertEqual(V.degree("w1"), 1)
        self.assertEqual(V.position("v2"), 3)
        self.assertIn("v1", V)
        self.assertNotIn("x", V)
        self.assertEqual(list(V.labels()), ["v0", "v1", "w1", "v2"])
        self.assertEqual(V.basis(7), ())

    def test_invalid(self):
        with self.assertRaises(ValueError):
            GradedVectorSpace(Field.F2, 1, [["a"], ["a"]])
        with self.assertRaises(ValueError):
            GradedVectorSpace(Field.F2, 0, [[], ["a"]])
        with self.assertRaises(ValueError):
            GradedVectorSpace.from_pairs(Field.F2, 1, [("a", 2)])

    def test_map_degrees(self):
        with self.assertRaises(ValueError):
            GradedLinearMap(self.V, self.W, {"v0": {"u1": 1}})
        f = GradedLinearMap(self.V, self.W, {"v0": {"u1": 1}}, shift=1)
        self.assertEqual(f.rank(), 1)
        with self.assertRaises(ValueError):
            GradedLinearMap(self.V, self.W, {"v0": {"nope": 1}})

    def test_kernel_zero_map(self):
        f = GradedLinearMap.zero(self.V, self.W)
        K, inc = kernel(f)
        self.assertEqual(K.dims(), self.V.dims())
        self.assertTrue(f.compose(inc).is_zero())

    def test_kernel_identity(self):
        K, _ = kernel(GradedLinearMap.identity(self.V))
        self.assertEqual(K.total_dim, 0)

    def test_kernel_sum_map(self):
        V = GradedVectorSpace(Field.F2, 0, [["a", "b"]])
        W = GradedVectorSpace(Field.F2, 0, [["c"]])
        f = GradedLinearMap(V, W, {"a": {"c": 1}, "b": {"c": 1}})
        K, inc = kernel(f)
        self.assertEqual(K.dims(), [1])
        self.assertEqual(K.basis(0), ("ker:0:0",))
        self.assertTrue(f.compose(inc).is_zero())

    def test_quotient(self):
        V = GradedVectorSpace(Field.F2, 0, [["e1", "e2", "e3"]])
        U = GradedVectorSpace(Field.F2, 0, [["u"]])
        inc = GradedLinearMap(U, V, {"u": {"e1": 1, "e2": 1}})
        Q, proj = quotient(V, inc)
        self.assertEqual(Q.dims(), [2])
        self.assertTrue(proj.compose(inc).is_zero())
        with self.subTest(name="by zero"):
            zero = GradedVectorSpace.zero(Field.F2, 0)
            Q0, _ = quotient(V, GradedLinearMap.zero(zero, V))
            self.assertEqual(Q0, V)
        with self.subTest(name="by everything"):
            Q1, _ = quotient(V, GradedLinearMap.identity(V))
            self.assertEqual(Q1.total_dim, 0)
        with self.subTest(name="not injective"):
            U2 = GradedVectorSpace(Field.F2, 0, [["u", "w"]])
            bad = GradedLinearMap(U2, V, {"u": {"e1": 1}, "w": {"e1": 1}})
            with self.assertRaises(ValueError):
                quotient(V, bad)

    def test_tensor_dims(self):
        T = tensor(self.V, self.W)
        self.assertEqual(T.dims(), [1, 3, 3])
        for q in range(3):
            expected = sum(
                self.V.dim(k) * self.W.dim(q - k) for k in range(q + 1)
            )
            self.assertEqual(T.dim(q), expected)
        self.assertIn(("w1", "u1"), T)

    def test_tensor_many_labels(self):
        T = tensor_many([self.W, self.W, self.W])
        self.assertEqual(T.basis(0), (("u0", "u0", "u0"),))
        self.assertEqual(T.dim(1), 3)
        self.assertEqual(format_label(("u0", ("u1", "u0"))), "u0⊗(u1⊗u0)")

    def test_symmetry_sign(self):
        V = GradedVectorSpace(Field.Q, 2, [[], ["a"]])
        W = GradedVectorSpace(Field.Q, 2, [[], ["b"]])
        tau = symmetry(V, W)
        self.assertEqual(tau.image_of(("a", "b")), {("b", "a"): -1})
        back = symmetry(W, V).compose(tau)
        self.assertEqual(back, GradedLinearMap.identity(tensor(V, W)))

    def test_symmetry_f2_permutation(self):
        tau = symmetry(self.V, self.W)
        for label, image in tau.columns.items():
            self.assertEqual(image, {(label[1], label[0]): 1})

    def test_composition_associative(self):
        f = GradedLinearMap(self.V, self.V, {"v1": {"v1": 1, "w1": 1}})
        g = GradedLinearMap(self.V, self.V, {"w1": {"v1": 1}, "v2": {"v2": 1}})
        h = GradedLinearMap(self.V, self.V, {"v1": {"w1": 1}, "w1": {"w1": 1}})
        self.assertEqual(f.compose(g).compose(h), f.compose(g.compose(h)))


class BigradedTestCase(unittest.TestCase):
    def test_dims(self):
        B = BigradedVectorSpace(
            Field.F2, {(0, 0): ["a"], (1, 2): ["b", "c"], (2, 0): []}, p_max=2, max_degree=2
        )
        self.assertEqual(B.dims(), {(0, 0): 1, (1, 2): 2})
        self.assertEqual(B.column(1), [0, 0, 2])
        self.assertEqual(B.total_dims(), {0: 1, 3: 2})
        self.assertFalse(B.is_zero())
        with self.assertRaises(ValueError):
            BigradedVectorSpace(Field.F2, {(-1, 0): ["a"]})


if __name__ == "__main__":
    unittest.main()
