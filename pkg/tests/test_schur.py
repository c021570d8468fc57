import random

import pytest

from yokonuma import combinat as C
from yokonuma.algebra import YokonumaHecke
from yokonuma.modules import ModuleFactory
from yokonuma.scalars import CycloField, Specialization
from yokonuma.schur import SchurAlgebra, WeylTheory, hom_span_dim, z_weyl_filtration

E = ()
_cache: dict = {}


def schur(r, n, flavor="m", extended=False, M=None):
    key = (r, n, flavor, extended, M)
    if key not in _cache:
        f = ModuleFactory(YokonumaHecke(r, n, CycloField(M or r)))
        _cache[key] = SchurAlgebra(f, flavor, extended)
    return _cache[key]


def test_schur_dimensions():
    assert schur(1, 2).dim == 5
    assert schur(2, 2).dim == 11
    assert schur(1, 3).dim == 33
    assert schur(1, 0).dim == 1


@pytest.mark.parametrize("r,n", [(1, 2), (2, 2), (1, 3)])
def test_dimension_equals_sum_of_hom_spaces(r, n):
    A = schur(r, n)
    comps = A.compositions
    assert A.dim == sum(hom_span_dim(A, mu, nu) for mu in comps for nu in comps)


@pytest.mark.parametrize("r,n", [(1, 2), (2, 2)])
def test_algebra_laws(r, n):
    A = schur(r, n)
    one = A.identity()
    rng = random.Random(1)
    idx = range(A.dim)
    for i in idx:
        e = A.basis_elem(i)
        assert A.mul(one, e) == e == A.mul(e, one)
    for _ in range(60):
        a, b, c = (A.basis_elem(rng.choice(idx)) for _ in range(3))
        assert A.mul(A.mul(a, b), c) == A.mul(a, A.mul(b, c))
        assert A.star(A.mul(a, b)) == A.mul(A.star(b), A.star(a))


def test_weight_idempotents():
    A = schur(2, 2)
    total = {}
    for mu in A.compositions:
        phi = A.weight_idempotent(mu)
        assert A.mul(phi, phi) == phi
        for nu in A.compositions:
            if nu != mu:
                assert not any(not c.is_zero() for c in A.mul(phi, A.weight_idempotent(nu)).values())
        total = A.add(total, phi)
    assert total == A.identity()


def test_weyl_module_dimensions():
    A = schur(2, 2)
    W = WeylTheory(A)
    for lam in A.shapes:
        assert W.weyl(lam).dim == len(C.t0plus_all(lam))
        assert W.weyl(lam).respects_products(A)
    assert W.weyl(((2,), E)).dim == 2
    assert W.weyl((E, (1, 1))).dim == 1
    assert sum(W.weyl(lam).dim ** 2 for lam in A.shapes) == A.dim


def test_decomposition_matrix_at_a_fourth_root():
    A = schur(1, 2, M=4)
    W = WeylTheory(A)
    D = W.decomposition_matrix(Specialization(4))
    assert D[(((2,),), ((2,),))] == 1
    # W^(2) has L^(2) and L^(1,1) as composition factors
    assert D[(((2,),), ((1, 1),))] == 1
    assert D[(((1, 1),), ((2,),))] == 0
    assert D[(((1, 1),), ((1, 1),))] == 1
    assert W.simple_dim(((2,),), Specialization(4)) == 1
    assert W.simple_dim(((1, 1),), Specialization(4)) == 1
    Dg = W.decomposition_matrix()
    assert all(v == (1 if a == b else 0) for (a, b), v in Dg.items())


def test_extended_and_twisted_algebras():
    assert schur(1, 0, extended=True).dim == 4
    An = schur(2, 2, "n")
    assert An.dim == schur(2, 2).dim
    assert schur(1, 2, extended=True).dim > schur(1, 2).dim


def test_z_modules_have_weyl_filtrations():
    A = schur(2, 2)
    W = WeylTheory(A)
    for mu in A.compositions:
        assert z_weyl_filtration(A, W, mu).ok


def test_constants_json_round_trip():
    A = schur(1, 2)
    data = A.constants_to_json()
    B = SchurAlgebra(A.factory, "m")
    B.load_constants(data)
    assert B.constants() == A.constants()
