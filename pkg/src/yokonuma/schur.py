"""The Yokonuma-Schur algebra YS = End_Y(+_mu M^mu) and its modules.

Homomorphisms are stored as matrices in row convention: phi in Hom(M^nu, M^mu)
has one row per basis vector m_nu g_d of M^nu, holding the coordinates of its
image in M^mu.  The product phi psi means "apply psi first", so its matrix is
``A_psi A_phi``.  Basis elements phi_ST are indexed by (lam, (mu, S), (nu, T))
with phi_ST(m_nu h) = m_ST h.  With ``extended=True`` the regular module Y is
added as the extra weight OMEGA, indexed by standard tableaux.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from . import combinat, linalg, perms
from .algebra import Element, YokonumaHecke
from .cellular import _weight, element_sT, tableau_elements
from .combinat import Shape
from .linalg import Domain, Matrix
from .modules import (
    BasisedModule,
    ModuleFactory,
    NotInModule,
    _random_invertible,
    find_isomorphism,
    intertwiners,
    section_matrices,
    simple_module,
)
from .scalars import GENERIC, CycloNumber, Specialization

OMEGA = "omega"


class AlphaMismatch(ValueError):
    pass


# -- weights: the summands of the bimodule ----------------------------------
class Weight:
    """One summand M^mu (or N^mu, or Y itself) with a basis gen * h_b."""

    def __init__(self, factory: ModuleFactory, key, flavor: str):
        self.key = key
        self.flavor = flavor
        Y = factory.Y
        self.Y = Y
        self.dom = factory.dom
        if key == OMEGA:
            self.keys = list(Y.basis_keys)
            self.pos = {k: i for i, k in enumerate(self.keys)}
            self.h = [Y.element({k: Y.field.one}) for k in self.keys]
            e = perms.identity(Y.n)
            self.gen_coords = [self.dom.one if k[1] == e else self.dom.zero for k in self.keys]
            self.module = _regular_module(factory)
            self.perm = None
        else:
            self.perm = factory.perm(key, flavor)
            self.h = [Y.g_w(d) for d in self.perm.reps]
            self.gen_coords = [self.dom.one if perms.length(d) == 0 else self.dom.zero for d in self.perm.reps]
            self.module = self.perm.module

    @property
    def dim(self) -> int:
        return len(self.h)

    def coords(self, x: Element) -> list:
        if self.perm is not None:
            return self.perm.coords(x)
        vec = [self.dom.zero] * len(self.keys)
        for k, c in x.c.items():
            vec[self.pos[k]] = c
        return vec

    def right_mult(self, x: Element, b: int) -> Element:
        """x h_b, where the b-th basis vector is gen h_b."""
        if self.perm is not None:
            return self.Y.rmul_gw(x, self.perm.reps[b])
        return self.Y.mul(x, self.h[b])


def _regular_module(factory: ModuleFactory) -> BasisedModule:
    Y = factory.Y
    keys = list(Y.basis_keys)
    pos = {k: i for i, k in enumerate(keys)}
    basis = [Y.element({k: Y.field.one}) for k in keys]

    def image(_, x):
        vec = [factory.dom.zero] * len(keys)
        for k, c in x.c.items():
            vec[pos[k]] = c
        return vec

    return factory._generator_actions(image, basis, "Y", keys)


def _preimages(item, lam: Shape) -> list:
    wt, X = item
    if wt == OMEGA:
        return [X]
    return combinat.preimages(X, lam, wt)


# -- the algebra ------------------------------------------------------------
class SchurAlgebra:
    """YS (flavor m), the twisted algebra End(+ N^mu) (flavor n), or their extensions."""

    def __init__(self, factory: ModuleFactory, flavor: str = "m", extended: bool = False):
        self.factory = factory
        self.Y = factory.Y
        self.flavor = flavor
        self.extended = extended
        self.cb = factory.cell(flavor)
        self.dom = factory.dom
        self.shapes = factory.all_shapes()
        self.compositions = combinat.enumerate_multicompositions(self.Y.r, self.Y.n)
        self.weight_keys = list(self.compositions) + ([OMEGA] if extended else [])
        self.items = {lam: self._items(lam) for lam in self.shapes}
        self.basis = [(lam, a, b) for lam in self.shapes for a in self.items[lam] for b in self.items[lam]]
        self.index = {x: i for i, x in enumerate(self.basis)}
        self._weights: dict = {}
        self._mats: dict = {}
        self._elems: dict = {}
        self._solvers: dict = {}
        self._consts: dict = {}

    def _items(self, lam: Shape) -> list:
        out = list(combinat.t0plus_all(lam))
        if self.extended:
            out += [(OMEGA, t) for t in combinat.standard_tableaux(lam)]
        return out

    @property
    def dim(self) -> int:
        return len(self.basis)

    def weight(self, key) -> Weight:
        if key not in self._weights:
            self._weights[key] = Weight(self.factory, key, self.flavor)
        return self._weights[key]

    # -- basis elements -----------------------------------------------
    def element(self, idx) -> Element:
        """m_ST (or n_ST) in Y."""
        out = self._elems.get(idx)
        if out is None:
            lam, a, b = idx
            if a[0] != OMEGA and b[0] != OMEGA and combinat.alpha(a[0]) != combinat.alpha(b[0]):
                raise AlphaMismatch(f"alpha({a[0]}) != alpha({b[0]})")
            Y, cb = self.Y, self.cb
            out = Y.zero()
            for s in _preimages(a, lam):
                ls = perms.length(combinat.d_of(s))
                for t in _preimages(b, lam):
                    w = _weight(Y, self.flavor, ls + perms.length(combinat.d_of(t)))
                    out = out + cb.elem(s, t) * w
            self._elems[idx] = out
        return out

    def source(self, idx):
        return idx[2][0]

    def target(self, idx):
        return idx[1][0]

    def matrix(self, idx) -> Matrix:
        """Hom matrix of phi_ST : M^type(T) -> M^type(S)."""
        A = self._mats.get(idx)
        if A is None:
            x = self.element(idx)
            src, tgt = self.weight(self.source(idx)), self.weight(self.target(idx))
            A = [tgt.coords(src.right_mult(x, b)) for b in range(src.dim)]
            self._mats[idx] = A
        return A

    def _solver(self, tgt, src) -> tuple[list, linalg.RowSolver]:
        key = (tgt, src)
        if key not in self._solvers:
            idxs = [i for i, x in enumerate(self.basis) if self.target(x) == tgt and self.source(x) == src]
            W = self.weight(tgt)
            rows = [W.coords(self.element(self.basis[i])) for i in idxs]
            self._solvers[key] = (idxs, linalg.RowSolver(rows, W.dim, self.dom))
        return self._solvers[key]

    def expand_matrix(self, A: Matrix, tgt, src) -> dict[int, object]:
        """Coefficients of a homomorphism M^src -> M^tgt in the basis phi_ST."""
        src_w = self.weight(src)
        image = linalg.vecmat(src_w.gen_coords, A, self.dom) if A else []
        idxs, solver = self._solver(tgt, src)
        if not idxs:
            if any(not x.is_zero() for x in image):
                raise NotInModule("nonzero map with empty basis")
            return {}
        coeffs = solver.solve(image)
        return {i: c for i, c in zip(idxs, coeffs) if not c.is_zero()}

    def to_matrix(self, a: dict, tgt, src) -> Matrix:
        W_src, W_tgt = self.weight(src), self.weight(tgt)
        out = linalg.zeros(self.dom, W_src.dim, W_tgt.dim)
        for i, c in a.items():
            x = self.basis[i]
            if self.target(x) == tgt and self.source(x) == src:
                out = linalg.add(out, linalg.scale(c, self.matrix(x)))
        return out

    # -- multiplication -----------------------------------------------
    def mul_basis(self, i: int, j: int) -> dict[int, object]:
        """phi_i phi_j (apply phi_j first)."""
        key = (i, j)
        out = self._consts.get(key)
        if out is None:
            a, b = self.basis[i], self.basis[j]
            if self.source(a) != self.target(b):
                out = {}
            else:
                A = linalg.matmul(self.matrix(b), self.matrix(a), self.dom)
                out = self.expand_matrix(A, self.target(a), self.source(b))
            self._consts[key] = out
        return out

    def mul(self, a: dict, b: dict) -> dict:
        out: dict = {}
        for i, x in a.items():
            for j, y in b.items():
                for k, c in self.mul_basis(i, j).items():
                    v = x * y * c
                    out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def add(self, a: dict, b: dict) -> dict:
        out = dict(a)
        for k, v in b.items():
            out[k] = out[k] + v if k in out else v
        return {k: v for k, v in out.items() if not v.is_zero()}

    def basis_elem(self, i: int) -> dict:
        return {i: self.dom.one}

    def weight_idempotent(self, key) -> dict:
        """phi_mu: the identity of M^mu; it is phi_{T^mu T^mu} when mu is a multipartition."""
        W = self.weight(key)
        return self.expand_matrix(linalg.identity(self.dom, W.dim), key, key)

    def identity(self) -> dict:
        out: dict = {}
        for key in self.weight_keys:
            out = self.add(out, self.weight_idempotent(key))
        return out

    def star(self, a: dict) -> dict:
        return {self.index[(x[0], x[2], x[1])]: c for x, c in ((self.basis[i], c) for i, c in a.items())}

    def constants(self) -> dict:
        """The full table {(i, j): phi_i phi_j} over type-compatible pairs."""
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                if self.source(a) == self.target(b):
                    self.mul_basis(i, j)
        return {k: v for k, v in self._consts.items() if v}

    def constants_to_json(self) -> dict:
        tab = self.constants()
        return {
            "dim": self.dim,
            "basis": [_index_json(x) for x in self.basis],
            "products": [
                {"i": i, "j": j, "terms": [[k, v.to_json()] for k, v in sorted(t.items())]}
                for (i, j), t in sorted(tab.items())
            ],
        }

    def load_constants(self, data: dict) -> None:
        from .scalars import Scalar

        if data.get("dim") != self.dim:
            raise ValueError("cached table has the wrong dimension")
        F = self.Y.field
        pairs = {}
        for entry in data["products"]:
            pairs[(entry["i"], entry["j"])] = {k: Scalar.from_json(F, v) for k, v in entry["terms"]}
        for i, a in enumerate(self.basis):
            for j, b in enumerate(self.basis):
                if self.source(a) == self.target(b):
                    self._consts[(i, j)] = pairs.get((i, j), {})

    # -- shape data ---------------------------------------------------
    def shape_of(self, i: int) -> Shape:
        return self.basis[i][0]

    def top_item(self, lam: Shape):
        return (lam, combinat.semistandard_initial(lam))


def _index_json(x) -> dict:
    lam, a, b = x

    def item(it):
        wt, T = it
        return {"type": "omega" if wt == OMEGA else combinat.shape_to_json(wt), "tableau": combinat.tableau_to_json(T)}

    return {"shape": combinat.shape_to_json(lam), "S": item(a), "T": item(b)}


# -- Schur modules ----------------------------------------------------------
@dataclass
class SchurModule:
    """A right module over a SchurAlgebra: one action matrix per basis element."""

    name: str
    labels: list
    dom: Domain
    mats: list[Matrix]
    weights: list  # weight key of each basis vector
    spec: Specialization = GENERIC

    @property
    def dim(self) -> int:
        return len(self.labels)

    def specialize(self, spec: Specialization) -> "SchurModule":
        if spec.is_generic:
            return self
        dom = linalg.cyclo_domain(spec.target_field(self.dom.field))
        return SchurModule(
            self.name, list(self.labels), dom, [linalg.map_matrix(A, spec.apply) for A in self.mats], list(self.weights), spec
        )

    def action(self, A: SchurAlgebra, a: dict) -> Matrix:
        out = linalg.zeros(self.dom, self.dim, self.dim)
        for i, c in a.items():
            cc = c if self.spec.is_generic else self.spec.apply(c)
            out = linalg.add(out, linalg.scale(cc, self.mats[i]))
        return out

    def respects_products(self, A: SchurAlgebra, pairs=None) -> bool:
        """rho(phi_i) rho(phi_j) = rho(phi_i phi_j) on the given (or all) pairs."""
        dom = self.dom
        if pairs is None:
            pairs = [(i, j) for i in range(A.dim) for j in range(A.dim)]
        for i, j in pairs:
            lhs = linalg.matmul(self.mats[i], self.mats[j], dom)
            rhs = self.action(A, A.mul_basis(i, j))
            if lhs != rhs:
                return False
        return True

    def weight_space_dims(self) -> dict:
        out: dict = {}
        for w in self.weights:
            out[w] = out.get(w, 0) + 1
        return out

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "dim": self.dim,
            "specialization": str(self.spec),
            "matrices": [[[x.to_json() for x in row] for row in M] for M in self.mats],
        }


def schur_isomorphism(A: SchurModule, B: SchurModule) -> Matrix | None:
    if A.dim != B.dim:
        return None
    if A.dim == 0:
        return []
    allowed = lambda a, b: A.weights[a] == B.weights[b]
    basis = intertwiners(A.mats, B.mats, A.dim, B.dim, A.dom, allowed)
    return _random_invertible(basis, A.dom)


def schur_section(M: SchurModule, top: Matrix, below: Matrix, name: str, weights: list) -> SchurModule:
    mats = section_matrices(M.mats, M.dim, M.dom, top, below)
    return SchurModule(name, list(range(len(top))), M.dom, mats, weights, M.spec)


def weight_decomposition(A: SchurAlgebra, M: SchurModule) -> dict:
    """mu -> basis of the weight space M phi_mu (image of the idempotent)."""
    out = {}
    for key in A.weight_keys:
        P = M.action(A, A.weight_idempotent(key))
        R, piv = linalg.rref(P) if P else ([], [])
        out[key] = R[: len(piv)]
    return out


# -- Weyl modules -----------------------------------------------------------
class WeylTheory:
    """Weyl modules, their forms, simple dimensions and decomposition numbers."""

    def __init__(self, A: SchurAlgebra):
        self.A = A
        self._weyl: dict = {}
        self._gram: dict = {}

    def weyl(self, lam: Shape) -> SchurModule:
        """W^lam with basis phi_S, S in T_0^+(lam), from phi_{T^lam S} phi mod higher terms."""
        if lam in self._weyl:
            return self._weyl[lam]
        A = self.A
        items = [it for it in A.items[lam] if it[0] != OMEGA]
        pos = {it: k for k, it in enumerate(items)}
        top = A.top_item(lam)
        mats = []
        for j in range(A.dim):
            rows = []
            for it in items:
                row = [A.dom.zero] * len(items)
                for k, c in A.mul_basis(A.index[(lam, top, it)], j).items():
                    mu, a, b = A.basis[k]
                    if mu == lam:
                        if a != top:
                            raise AssertionError("Weyl module cell congruence broken")
                        row[pos[b]] = c
                    elif not combinat.dominates(mu, lam):
                        raise AssertionError("term outside the ideal above lam")
                rows.append(row)
            mats.append(rows)
        W = SchurModule(f"W^{lam}", items, A.dom, mats, [it[0] for it in items])
        self._weyl[lam] = W
        return W

    def gram(self, lam: Shape, spec: Specialization = GENERIC) -> Matrix:
        """<phi_S, phi_T> from phi_{T^lam S} phi_{T T^lam} = <phi_S, phi_T> phi_lam mod higher terms."""
        if lam not in self._gram:
            A = self.A
            items = [it for it in A.items[lam] if it[0] != OMEGA]
            top = A.top_item(lam)
            lam_idx = A.index[(lam, top, top)]
            G = linalg.zeros(A.dom, len(items), len(items))
            for a, S in enumerate(items):
                for b, T in enumerate(items):
                    prod = A.mul_basis(A.index[(lam, top, S)], A.index[(lam, T, top)])
                    for k, c in prod.items():
                        mu = A.basis[k][0]
                        if k == lam_idx:
                            G[a][b] = c
                        elif mu == lam or not combinat.dominates(mu, lam):
                            raise AssertionError("Weyl form congruence broken")
            self._gram[lam] = G
        G = self._gram[lam]
        return G if spec.is_generic else linalg.map_matrix(G, spec.apply)

    def simple_weight_dims(self, lam: Shape, spec: Specialization = GENERIC) -> dict:
        """dim L^lam phi_nu as the rank of the type-nu block of the Gram matrix."""
        A = self.A
        items = [it for it in A.items[lam] if it[0] != OMEGA]
        G = self.gram(lam, spec)
        out = {}
        for nu in A.compositions:
            sel = [k for k, it in enumerate(items) if it[0] == nu]
            block = [[G[a][b] for b in sel] for a in sel]
            out[nu] = linalg.rank(block) if sel else 0
        return out

    def simple_dim(self, lam: Shape, spec: Specialization = GENERIC) -> int:
        G = self.gram(lam, spec)
        return linalg.rank(G) if G else 0

    def decomposition_matrix(self, spec: Specialization = GENERIC) -> dict:
        """{(lam, mu): [W^lam : L^mu]} by peeling weight characters along dominance."""
        A = self.A
        shapes = list(A.shapes)  # a linear extension of dominance, most dominant first
        chars = {mu: self.simple_weight_dims(mu, spec) for mu in shapes}
        out = {}
        for lam in shapes:
            rest = {nu: len(combinat.t0plus(lam, nu)) for nu in A.compositions}
            for mu in shapes:
                d = rest[mu]
                if d:
                    for nu in A.compositions:
                        rest[nu] -= d * chars[mu][nu]
                out[(lam, mu)] = d
            if any(rest.values()):
                raise AssertionError(f"weight character of W^{lam} not exhausted")
        return out


# -- Hecke-side decomposition numbers ---------------------------------------
def module_character(M: BasisedModule) -> list:
    """Traces of all monomials t^beta g_w, in the algebra's basis-key order."""
    Y_keys = _monomial_keys(M)
    out = []
    cache: dict = {}
    for beta, w in Y_keys:
        if w not in cache:
            cache[w] = M.g_word(perms.reduced_word(w))
        G = cache[w]
        T = linalg.identity(M.dom, M.dim)
        for j, b in enumerate(beta):
            for _ in range(b):
                T = linalg.matmul(T, M.t[j], M.dom)
        P = linalg.matmul(T, G, M.dom)
        acc = M.dom.zero
        for i in range(M.dim):
            acc = acc + P[i][i]
        out.append(acc)
    return out


def _monomial_keys(M: BasisedModule) -> list:
    from itertools import product

    return [(beta, w) for w in perms.all_perms(M.n) for beta in product(range(M.r), repeat=M.n)]


def hecke_decomposition(factory: ModuleFactory, spec: Specialization) -> tuple[dict, list]:
    """{(lam, mu): [S^lam : D^mu]} from trace characters, and the list of mu with D^mu != 0."""
    shapes = factory.all_shapes()
    simples = {}
    for mu in shapes:
        D = simple_module(factory, mu, spec)
        if D.dim:
            simples[mu] = D
    K = list(simples)
    dom = linalg.cyclo_domain(spec.target_field(factory.Y.field)) if not spec.is_generic else factory.dom
    rows = [module_character(simples[mu]) for mu in K]
    solver = linalg.RowSolver(rows, len(rows[0]) if rows else 0, dom)
    if not solver.independent:
        raise AssertionError("simple characters are linearly dependent")
    out = {}
    for lam in shapes:
        chi = module_character(factory.specht(lam).specialize(spec))
        coeffs = solver.solve(chi)
        for mu, c in zip(K, coeffs):
            out[(lam, mu)] = _as_int(c)
        for mu in shapes:
            out.setdefault((lam, mu), 0)
    return out, K


def _as_int(c) -> int:
    if isinstance(c, CycloNumber):
        co = c.coeffs
    else:
        terms = c.laurent_terms()
        if not terms:
            return 0
        if set(terms) != {0}:
            raise ValueError(f"non-constant multiplicity {c}")
        co = terms[0].coeffs
    if any(x != 0 for x in co[1:]) or co[0].denominator != 1:
        raise ValueError(f"non-integral multiplicity {c}")
    return int(co[0])


# -- Z^mu and E^nu ----------------------------------------------------------
def z_module(A: SchurAlgebra, mu: Shape) -> SchurModule:
    """Z^mu = phi_mu YS with basis phi_ST, type(S) = mu."""
    idxs = [i for i, x in enumerate(A.basis) if A.target(x) == mu and A.source(x) != OMEGA]
    pos = {i: k for k, i in enumerate(idxs)}
    mats = []
    for j in range(A.dim):
        rows = []
        for i in idxs:
            row = [A.dom.zero] * len(idxs)
            for k, c in A.mul_basis(i, j).items():
                row[pos[k]] = c
            rows.append(row)
        mats.append(rows)
    return SchurModule(f"Z^{mu}", [A.basis[i] for i in idxs], A.dom, mats, [A.source(A.basis[i]) for i in idxs])


@dataclass
class SchurFiltrationReport:
    labels: list
    isomorphic: list[bool]
    counts: dict
    expected: dict
    spans: bool

    @property
    def ok(self) -> bool:
        return self.spans and all(self.isomorphic) and self.counts == self.expected


def _schur_filtration(M: SchurModule, groups: dict, weyl: WeylTheory, shapes, expected) -> SchurFiltrationReport:
    order = list(shapes)
    keys = sorted(groups, key=lambda k: (-order.index(k[0]), repr(k[1])))
    rows = [v for k in keys for v in groups[k][0]]
    spans = len(rows) == M.dim and (linalg.rank(rows) if rows else 0) == M.dim
    iso = []
    if spans:
        for n, k in enumerate(keys):
            below = [v for kk in keys[n + 1 :] for v in groups[kk][0]]
            try:
                sec = schur_section(M, groups[k][0], below, str(k), groups[k][1])
            except (NotInModule, ValueError):
                iso.append(False)
                continue
            W = weyl.weyl(k[0]).specialize(M.spec)
            iso.append(schur_isomorphism(sec, W) is not None)
    else:
        iso = [False] * len(keys)
    counts: dict = {}
    for lam, _ in keys:
        counts[lam] = counts.get(lam, 0) + 1
    return SchurFiltrationReport(keys, iso, counts, {k: v for k, v in expected.items() if v}, spans)


def z_weyl_filtration(A: SchurAlgebra, weyl: WeylTheory, mu: Shape) -> SchurFiltrationReport:
    Z = z_module(A, mu)
    groups: dict = {}
    for k, (lam, a, b) in enumerate(Z.labels):
        unit = [A.dom.one if j == k else A.dom.zero for j in range(Z.dim)]
        g = groups.setdefault((lam, a[1]), ([], []))
        g[0].append(unit)
        g[1].append(b[0])
    expected = {lam: len(combinat.t0plus(lam, mu)) for lam in A.shapes}
    return _schur_filtration(Z, groups, weyl, A.shapes, expected)


class TiltingModule:
    """E^nu realized inside +_kappa N^nu as E^nu_kappa = n_nu Y m_kappa.

    A weight-kappa vector z stands for the map m_kappa h -> z h from M^kappa
    to N^nu; phi_UV (from M^kappa to M^mu, m_UV = m_mu h_UV) sends the
    weight-mu vector z to z h_UV.
    """

    def __init__(self, A: SchurAlgebra, nu: Shape):
        if A.flavor != "m":
            raise ValueError("tilting modules live over the m-flavor algebra")
        self.A, self.nu = A, nu
        f = A.factory
        self.factory = f
        self.Y = f.Y
        self.N = f.perm(nu, "n")
        self.Nmod = self.N.module
        self.dom = f.dom
        self._build()

    def _build(self):
        Y, A, dom = self.Y, self.A, self.dom
        n_nu = self.N.gen
        self.spaces = {}
        for kappa in A.compositions:
            m_k = Y.m_elem(kappa)
            vecs = []
            for key in Y.basis_keys:
                vecs.append(self.N.coords(Y.mul(Y.mul(n_nu, Y.element({key: Y.field.one})), m_k)))
            R, piv = linalg.rref(vecs)
            self.spaces[kappa] = R[: len(piv)]
        self.weights = [k for k in A.compositions for _ in self.spaces[k]]
        self.offsets = {}
        off = 0
        for k in A.compositions:
            self.offsets[k] = off
            off += len(self.spaces[k])
        self.dim = off
        self.solvers = {k: linalg.RowSolver(self.spaces[k], self.N.dim, dom) for k in A.compositions}

    def to_coords(self, kappa, z) -> list:
        """Coordinates in E^nu of the weight-kappa vector z of N^nu."""
        c = self.solvers[kappa].solve(z)
        out = [self.dom.zero] * self.dim
        o = self.offsets[kappa]
        out[o : o + len(c)] = c
        return out

    @cached_property
    def module(self) -> SchurModule:
        A, dom = self.A, self.dom
        mats = []
        h_cache: dict = {}
        for j, x in enumerate(A.basis):
            tgt, src = A.target(x), A.source(x)
            M = linalg.zeros(dom, self.dim, self.dim)
            if self.spaces[tgt]:
                if j not in h_cache:
                    h = A.factory.perm(tgt, "m").h_of(A.element(x))
                    h_cache[j] = self.Nmod.action(h)
                H = h_cache[j]
                o = self.offsets[tgt]
                for a, z in enumerate(self.spaces[tgt]):
                    M[o + a] = self.to_coords(src, linalg.vecmat(z, H, dom))
            mats.append(M)
        return SchurModule(f"E^{self.nu}", list(range(self.dim)), dom, mats, list(self.weights))

    # -- the two bases ------------------------------------------------
    def theta_basis(self) -> list[tuple[tuple, object, list]]:
        """theta_ST : m_kappa -> n_nu m_{S. T}, S in T^cs(lam, nu), T in T_0^+(lam, kappa)."""
        Y, f = self.Y, self.factory
        out = []
        for lam in self.A.shapes:
            for S in combinat.column_semistandard(lam, self.nu):
                sd = combinat.s_dot(S, lam, self.nu)
                for kappa, T in combinat.t0plus_all(lam):
                    m = element_sT(f.cm, sd, T, kappa)
                    out.append(((lam, S, kappa, T), kappa, self.N.coords(Y.mul(self.N.gen, m))))
        return out

    def theta_prime_basis(self) -> list[tuple[tuple, object, list]]:
        """theta'_AB : m_kappa -> n_{A B.} m_kappa, A in T_0^+(lam, nu), B in T^cs(lam, kappa)."""
        Y, f = self.Y, self.factory
        out = []
        for lam in self.A.shapes:
            for A_ in combinat.t0plus(lam, self.nu):
                for kappa in self.A.compositions:
                    for B in combinat.column_semistandard(lam, kappa):
                        bd = combinat.s_dot(B, lam, kappa)
                        nab = tableau_elements(f.cn, A_, self.nu, bd)
                        out.append(((lam, A_, kappa, B), kappa, self.N.coords(Y.mul(nab, Y.m_elem(kappa)))))
        return out

    def basis_spans(self, basis) -> bool:
        """Whether the given weight vectors form a basis of E^nu."""
        if len(basis) != self.dim:
            return False
        try:
            rows = [self.to_coords(k, z) for _, k, z in basis]
        except linalg.NotInSpan:
            return False
        return linalg.rank(rows) == self.dim if rows else self.dim == 0

    def pairing_matrix(self) -> Matrix:
        """{theta_ST, theta'_AB} = <m_{S. T}, n_{A B.}> when T and B have the same type, else 0."""
        Y, f = self.Y, self.factory
        th = self.theta_basis()
        tp = self.theta_prime_basis()
        m_el = {}
        for lab, kappa, _ in th:
            lam, S, _, T = lab
            m_el[lab] = element_sT(f.cm, combinat.s_dot(S, lam, self.nu), T, kappa)
        n_el = {}
        for lab, kappa, _ in tp:
            lam, A_, _, B = lab
            n_el[lab] = tableau_elements(f.cn, A_, self.nu, combinat.s_dot(B, lam, kappa))
        return [
            [Y.pairing(m_el[a], n_el[b]) if ka == kb else self.dom.zero for b, kb, _ in tp] for a, ka, _ in th
        ]

    def weyl_filtration(self, weyl: WeylTheory) -> SchurFiltrationReport:
        """Steps spanned by the theta_ST with fixed S; predicted sections W^lam, |T^cs(lam, nu)| times."""
        groups: dict = {}
        try:
            for (lam, S, kappa, T), k, z in self.theta_basis():
                g = groups.setdefault((lam, S), ([], []))
                g[0].append(self.to_coords(k, z))
                g[1].append(k)
        except linalg.NotInSpan:
            return SchurFiltrationReport([], [], {}, {}, False)
        expected = {lam: len(combinat.column_semistandard(lam, self.nu)) for lam in self.A.shapes}
        return _schur_filtration(self.module, groups, weyl, self.A.shapes, expected)


def weyl_multiplicities(A: SchurAlgebra, M: SchurModule) -> dict:
    """Generic [M : W^lam] from weight characters (W^lam has weight dims |T_0^+(lam, kappa)|)."""
    rest = dict(M.weight_space_dims())
    out = {}
    for lam in A.shapes:
        d = rest.get(lam, 0)
        if d:
            for kappa in A.compositions:
                rest[kappa] = rest.get(kappa, 0) - d * len(combinat.t0plus(lam, kappa))
        out[lam] = d
    if any(rest.values()):
        raise AssertionError("weight character not a sum of Weyl characters")
    return out


# -- Schur functor ----------------------------------------------------------
def schur_functor(A: SchurAlgebra, M: SchurModule) -> BasisedModule:
    """M tensor_YS (+_mu M^mu), presented as (M x +M^mu) modulo m phi x b - m x phi(b)."""
    f, dom = A.factory, A.dom
    keys = [k for k in A.weight_keys if k != OMEGA]
    blocks = [A.weight(k).module for k in keys]
    offs, D = {}, 0
    for k, B in zip(keys, blocks):
        offs[k] = D
        D += B.dim
    big_dim = M.dim * D

    def hom_block(i):
        x = A.basis[i]
        src, tgt = A.source(x), A.target(x)
        return src, tgt, A.matrix(x)

    rels = []
    for i in range(A.dim):
        src, tgt, Hm = hom_block(i)
        if src == OMEGA or tgt == OMEGA:
            continue
        Mi = M.mats[i]
        for m in range(M.dim):
            for b in range(A.weight(src).dim):
                v = [dom.zero] * big_dim
                # (m phi) x b
                for m2, c in enumerate(Mi[m]):
                    if not c.is_zero():
                        v[m2 * D + offs[src] + b] = v[m2 * D + offs[src] + b] + c
                # - m x phi(b)
                for b2, c in enumerate(Hm[b]):
                    if not c.is_zero():
                        v[m * D + offs[tgt] + b2] = v[m * D + offs[tgt] + b2] - c
                if any(not x.is_zero() for x in v):
                    rels.append(v)
    R, piv = linalg.rref(rels) if rels else ([], [])
    below = R[: len(piv)]
    keep = [c for c in range(big_dim) if c not in set(piv)]
    top = [[dom.one if j == c else dom.zero for j in range(big_dim)] for c in keep]

    def kron(gen_of_block):
        out = linalg.zeros(dom, big_dim, big_dim)
        for k, B in zip(keys, blocks):
            G = gen_of_block(B)
            o = offs[k]
            for m in range(M.dim):
                base = m * D + o
                for a in range(B.dim):
                    for b, c in enumerate(G[a]):
                        if not c.is_zero():
                            out[base + a][base + b] = c
        return out

    Y = f.Y
    gens = [kron(lambda B, j=j: B.t[j]) for j in range(Y.n)] + [kron(lambda B, i=i: B.g[i]) for i in range(Y.n - 1)]
    mats = section_matrices(gens, big_dim, dom, top, below)
    return BasisedModule(
        f"F({M.name})", list(range(len(top))), Y.r, Y.n, dom, Y.q, list(Y.zeta), mats[: Y.n], mats[Y.n :]
    )


# -- whole-algebra identities -----------------------------------------------
def hom_span_dim(A: SchurAlgebra, tgt, src) -> int:
    """dim Hom_Y(M^src, M^tgt) by solving the intertwiner system."""
    from .modules import module_homs

    return len(module_homs(A.weight(src).module, A.weight(tgt).module))


def intersection_dim(factory: ModuleFactory, mu: Shape, nu: Shape) -> int:
    """dim (Y m_nu  cap  m_mu Y) by exact span arithmetic in Y."""
    Y = factory.Y
    pos = {k: i for i, k in enumerate(Y.basis_keys)}

    def vec(x):
        v = [factory.dom.zero] * Y.dim
        for k, c in x.c.items():
            v[pos[k]] = c
        return v

    Pm, Pn = factory.perm(mu), factory.perm(nu)
    right = [vec(b) for b in Pm.basis]
    left = [vec(Y.star(b)) for b in Pn.basis]
    ra, rb = linalg.rank(right), linalg.rank(left)
    return ra + rb - linalg.rank(right + left)


def double_centralizer(A: SchurAlgebra) -> tuple[int, int]:
    """(dim End over the extended algebra of +M^mu + Y, rank of the Y-action on it)."""
    if not A.extended:
        raise ValueError("needs the extended algebra")
    dom = A.dom
    keys = A.weight_keys
    offs, D = {}, 0
    for k in keys:
        offs[k] = D
        D += A.weight(k).dim
    block_of = [k for k in keys for _ in range(A.weight(k).dim)]
    mats = []
    for x in A.basis:
        src, tgt = A.source(x), A.target(x)
        Hm = A.matrix(x)
        big = linalg.zeros(dom, D, D)
        for a, row in enumerate(Hm):
            for b, c in enumerate(row):
                big[offs[src] + a][offs[tgt] + b] = c
        mats.append(big)
    comm = intertwiners(mats, mats, D, D, dom, lambda a, b: block_of[a] == block_of[b])
    # the right Y-action
    Y = A.Y
    acts = []
    for beta_w in _algebra_keys(Y):
        blocks = [A.weight(k).module.action(Y.element({beta_w: Y.field.one})) for k in keys]
        acts.append([x for row in linalg.direct_sum(blocks, dom) for x in row])
    return len(comm), linalg.rank(acts)


def _algebra_keys(Y: YokonumaHecke) -> list:
    return list(Y.basis_keys)


def twist_structure_constants_match(Am: SchurAlgebra, An: SchurAlgebra) -> bool:
    """The twisted table is the prime image of the untwisted one (indices aligned)."""
    if Am.basis != An.basis:
        return False
    tm, tn = Am.constants(), An.constants()
    keys = set(tm) | set(tn)
    for k in keys:
        a = {i: c.prime() for i, c in tm.get(k, {}).items()}
        if a != tn.get(k, {}):
            return False
    return True


@dataclass
class RingelReport:
    end_dim: int
    schur_dim: int
    image_rank: int
    all_commute: bool
    opposite: bool

    @property
    def ok(self) -> bool:
        return self.end_dim == self.schur_dim == self.image_rank and self.all_commute and self.opposite


def ringel_dual(A: SchurAlgebra, An: SchurAlgebra, tilts: dict) -> RingelReport:
    """End_YS(+E^nu) against the twisted algebra acting by z -> z A' on +_nu N^nu."""
    dom = A.dom
    nus = list(tilts)
    mods = [tilts[nu].module for nu in nus]
    offs, D = {}, 0
    for nu, M in zip(nus, mods):
        offs[nu] = D
        D += M.dim
    weights = [w for M in mods for w in M.weights]
    big = []
    for j in range(A.dim):
        big.append(linalg.direct_sum([M.mats[j] for M in mods], dom))
    end = intertwiners(big, big, D, D, dom, lambda a, b: weights[a] == weights[b])

    def phi_prime(i):
        x = An.basis[i]
        src, tgt = An.source(x), An.target(x)  # N^src -> N^tgt
        Am = An.matrix(x)
        T_src, T_tgt = tilts[src], tilts[tgt]
        out = linalg.zeros(dom, D, D)
        for kappa in A.compositions:
            for a, z in enumerate(T_src.spaces[kappa]):
                w = linalg.vecmat(z, Am, dom)
                c = T_tgt.to_coords(kappa, w)
                out[offs[src] + T_src.offsets[kappa] + a][offs[tgt] : offs[tgt] + T_tgt.dim] = c
        return out

    phis = [phi_prime(i) for i in range(An.dim)]
    commute = all(
        linalg.matmul(B, P, dom) == linalg.matmul(P, B, dom) for P in phis for B in big
    )
    rank = linalg.rank([[x for row in P for x in row] for P in phis]) if phis else 0
    # composition: Phi'_{ab} = Phi'_b Phi'_a as matrices, i.e. the opposite order
    opposite = True
    for i in range(An.dim):
        for j in range(An.dim):
            prod = An.mul_basis(i, j)
            lhs = linalg.zeros(dom, D, D)
            for k, c in prod.items():
                lhs = linalg.add(lhs, linalg.scale(c, phis[k]))
            if lhs != linalg.matmul(phis[j], phis[i], dom):
                opposite = False
                break
        if not opposite:
            break
    return RingelReport(len(end), A.dim, rank, commute, opposite)
