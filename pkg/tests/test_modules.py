import pytest

from yokonuma import combinat as C
from yokonuma import linalg
from yokonuma.algebra import YokonumaHecke
from yokonuma.cellular import element_ST
from yokonuma.modules import (
    DimensionMismatch,
    ModuleFactory,
    find_isomorphism,
    gram,
    hom_indices,
    is_intertwiner,
    module_homs,
    perm_hom_basis,
    radical_dim,
    semistandard_basis,
    simple_dim,
    simple_module,
    specht_filtration,
)
from yokonuma.scalars import CycloField, Specialization
from oracle import double_coset_count

E = ()
_factories: dict = {}


def factory(r, n):
    if (r, n) not in _factories:
        _factories[(r, n)] = ModuleFactory(YokonumaHecke(r, n, CycloField(r)))
    return _factories[(r, n)]


def scalar_matrix(dom, c, k):
    return [[c if i == j else dom.zero for j in range(k)] for i in range(k)]


def test_permutation_module_examples():
    f = factory(2, 2)
    M = f.perm(((2,), E)).module
    assert M.dim == 1
    assert M.t[0] == scalar_matrix(f.dom, f.Y.zeta[0], 1)
    assert M.g[0] == scalar_matrix(f.dom, f.Y.field.q, 1)
    assert f.perm(((1, 1), E)).dim == 2
    assert f.perm(((1,), (1,))).dim == 2


@pytest.mark.parametrize("r,n", [(2, 2), (2, 3)])
def test_modules_satisfy_the_defining_relations(r, n):
    f = factory(r, n)
    for mu in C.enumerate_multicompositions(r, n):
        for flavor in ("m", "n"):
            assert f.perm(mu, flavor).module.relation_defects() == []
    for lam in f.all_shapes():
        for flavor in ("m", "n"):
            assert f.specht(lam, flavor).relation_defects() == []


def test_semistandard_basis_elements_lie_in_the_permutation_module():
    f = factory(2, 2)
    for mu in C.enumerate_multicompositions(2, 2):
        P = f.perm(mu)
        basis = semistandard_basis(f, mu)
        assert len(basis) == P.dim
        assert all(P.contains(x) for _, x in basis)
    for lam in f.all_shapes():
        T = C.semistandard_initial(lam)
        assert element_ST(f.cm, T, lam, T, lam) == f.Y.m_elem(lam)


def test_specht_dimensions():
    f = factory(2, 2)
    assert f.specht(((1,), (1,))).dim == 2
    assert sum(f.specht(lam).dim ** 2 for lam in f.all_shapes()) == 8
    g = factory(1, 3)
    S = g.specht(((3,),))
    assert S.dim == 1 and all(m == scalar_matrix(g.dom, g.Y.field.q, 1) for m in S.g)


def test_gram_matrices():
    f = factory(1, 2)
    q = f.Y.field.q
    G = gram(f, ((2,),))
    assert G.matrix == [[1 + q**2]]
    s4 = Specialization(4)
    assert radical_dim(f, ((2,),), s4) == 1 and simple_dim(f, ((2,),), s4) == 0
    assert not C.is_e_restricted(((2,),), s4.e)
    assert simple_module(f, ((1, 1),), s4).dim == 1
    f2 = factory(2, 2)
    for lam in f2.all_shapes():
        G = gram(f2, lam)
        assert G.radical_dim == 0 and G.is_symmetric()
        assert all(x.is_laurent_integral() for row in G.matrix for x in row)


def test_distinct_specht_modules_are_not_isomorphic():
    f = factory(2, 2)
    shapes = f.all_shapes()
    for a in shapes:
        for b in shapes:
            iso = find_isomorphism(f.specht(a), f.specht(b)) if f.specht(a).dim == f.specht(b).dim else None
            assert (iso is not None) == (a == b)
    with pytest.raises(DimensionMismatch):
        find_isomorphism(f.specht(((1,), (1,))), f.specht(((2,), E)))


def test_specht_filtration_example():
    f = factory(2, 2)
    rep = specht_filtration(f, ((1, 1), E))
    assert rep.ok
    assert rep.counts == {((2,), E): 1, ((1, 1), E): 1}


def test_hom_examples():
    f = factory(2, 2)
    assert perm_hom_basis(f, ((1,), (1,)), ((2,), E)) == []
    mu = ((1, 1), E)
    B = perm_hom_basis(f, mu, mu)
    assert len(B) == 2
    ident = linalg.identity(f.dom, f.perm(mu).dim)
    assert ident in B


def _component_double_cosets(mu, nu):
    out = 1
    for a, b in zip(mu, nu):
        if sum(a) != sum(b):
            return 0
        if sum(a):
            out *= double_coset_count(sum(a), a, b)
    return out


@pytest.mark.parametrize("r,n", [(2, 2), (1, 3), (3, 2)])
def test_hom_dimensions_match_double_coset_counts(r, n):
    f = factory(r, n)
    comps = C.enumerate_multicompositions(r, n)
    for nu in comps:
        for mu in comps:
            B = perm_hom_basis(f, nu, mu)
            expected = _component_double_cosets(mu, nu)
            assert len(B) == len(hom_indices(nu, mu)) == expected
            assert len(module_homs(f.perm(nu).module, f.perm(mu).module)) == expected
            assert all(is_intertwiner(f.perm(nu).module, f.perm(mu).module, X) for X in B)


def test_dual_and_specialization():
    f = factory(2, 2)
    M = f.perm(((1,), (1,))).module
    assert M.dual().dual().g == M.g
    Ms = M.specialize(Specialization(4, 4))
    assert Ms.relation_defects() == []
