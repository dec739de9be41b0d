from fractions import Fraction

import pytest
from hypothesis import given, settings

from conftest import cycle_graph, path_graph, star_graph
from lapmatch.errors import InternalInconsistencyError
from lapmatch.graphs import Graph
from lapmatch.laplacian import cross_validated, lm_direct, lm_roots, lm_subdivision, lm_tu
from lapmatch.polynomials import sign_at
from test_matching import disjoint_union


class TestDirect:
    def test_k2(self):
        poly = lm_direct(Graph(2, [(0, 1)]))
        assert list(poly.coeffs) == [0, -2, 1]

    def test_p3(self):
        assert list(lm_direct(path_graph(3)).coeffs) == [0, 3, -4, 1]

    def test_c3(self):
        poly = lm_direct(cycle_graph(3))
        assert list(poly.coeffs) == [-2, 9, -6, 1]
        assert poly.b == (1, 6, 9, 2)

    def test_star4(self):
        # x(x-1)^2(x-4)
        assert list(lm_direct(star_graph(4)).coeffs) == [0, -4, 9, -6, 1]

    def test_b1_is_degree_sum(self, atlas):
        for g in atlas[:200]:
            assert lm_direct(g).b[1] == 2 * g.m


class TestSubdivisionRoute:
    def test_k2(self):
        assert lm_subdivision(Graph(2, [(0, 1)])).coeffs == (0, -2, 1)

    def test_c3(self):
        assert lm_subdivision(cycle_graph(3)).coeffs == (-2, 9, -6, 1)

    def test_star4(self):
        assert lm_subdivision(star_graph(4)).coeffs == (0, -4, 9, -6, 1)


class TestCensusRoute:
    def test_c3(self):
        assert lm_tu(cycle_graph(3)).coeffs == (-2, 9, -6, 1)

    def test_tree_has_zero_constant_term(self):
        for tree in (path_graph(5), star_graph(5)):
            assert lm_tu(tree).b[tree.n] == 0

    def test_cycle_constant_term_is_two(self):
        for n in range(3, 8):
            assert lm_tu(cycle_graph(n)).b[n] == 2


class TestCrossValidation:
    def test_routes_agree_small(self, atlas6):
        for g in atlas6:
            poly, routes = cross_validated(g)
            assert set(routes) == {"direct", "subdivision", "tu-census"}

    def test_disagreement_raises(self, monkeypatch):
        from lapmatch import laplacian

        good = laplacian.lm_subdivision

        def broken(g):
            poly = good(g)
            tampered = (poly.coeffs[0] + 4,) + poly.coeffs[1:]
            return laplacian.LaplacianMatchingPoly(tampered, poly.route)

        monkeypatch.setattr(laplacian, "lm_subdivision", broken)
        with pytest.raises(InternalInconsistencyError):
            laplacian.cross_validated(cycle_graph(4))


class TestRoots:
    def test_p3(self):
        roots = lm_roots(path_graph(3))
        poly = list(roots.source)
        assert roots.total_multiplicity == 3
        for entry, value in zip(roots.entries, (3, 1, 0)):
            assert entry.low <= value <= entry.high and entry.multiplicity == 1
            assert sign_at(poly, Fraction(value)) == 0

    def test_star4_largest_root_is_max_degree_plus_one(self):
        roots = lm_roots(star_graph(4))
        assert [e.multiplicity for e in roots.entries] == [1, 2, 1]
        top = roots.entries[0]
        poly = list(roots.source)
        assert top.low <= 4 <= top.high and sign_at(poly, Fraction(4)) == 0
        assert roots.entries[2].low == 0

    def test_c3_roots_bracket_the_surds(self):
        roots = lm_roots(cycle_graph(3))
        assert roots.total_multiplicity == 3
        top, mid, bottom = roots.entries
        # 2 +- sqrt(3) are the roots of x^2 - 4x + 1
        surd = [1, -4, 1]
        assert sign_at(surd, top.low) * sign_at(surd, top.high) < 0
        assert mid.low <= 2 <= mid.high
        assert sign_at(surd, bottom.low) * sign_at(surd, bottom.high) <= 0
        assert bottom.low >= 0

    def test_all_roots_nonnegative(self, atlas6):
        for g in atlas6:
            roots = lm_roots(g)
            assert roots.total_multiplicity == g.n
            assert all(e.low >= 0 for e in roots.entries)


class TestSubdivisionGuards:
    def test_parity_violation_detected(self, monkeypatch):
        from lapmatch import laplacian

        # a polynomial with both parities set can never be a valid pullback
        monkeypatch.setattr(laplacian, "matching_polynomial", lambda g: [0, 1, 1])
        with pytest.raises(InternalInconsistencyError):
            laplacian.lm_subdivision(Graph(2, [(0, 1)]))

    def test_indivisible_pullback_detected(self, monkeypatch):
        from lapmatch import laplacian
        from lapmatch.errors import NotDivisibleError

        # m > n means the pullback divides by x; a nonzero constant term blocks it
        diamond = Graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
        monkeypatch.setattr(laplacian, "matching_polynomial", lambda g: [1, 0, 1])
        with pytest.raises(NotDivisibleError):
            laplacian.lm_subdivision(diamond)


@given(disjoint_union())
@settings(max_examples=40)
def test_multiplicative_over_components(parts):
    from lapmatch.polynomials import multiply

    g1, g2, union = parts
    product = multiply(list(lm_direct(g1).coeffs), list(lm_direct(g2).coeffs))
    assert list(lm_direct(union).coeffs) == product
    assert lm_subdivision(union).coeffs == lm_direct(union).coeffs
    assert lm_tu(union).coeffs == lm_direct(union).coeffs
