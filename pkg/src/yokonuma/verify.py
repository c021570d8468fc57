"""Registry of named verification checks and their reports.

Each check takes a :class:`Context` (one algebra Y_{r,n}, built lazily) and
a specialization, and returns a :class:`Report`.  Reports carry only exact,
deterministic data so that repeated runs serialize identically.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from itertools import product
from math import factorial, lcm
from typing import Callable

from . import combinat, linalg, perms
from .algebra import YokonumaHecke
from .cellular import CellularBasis, ResidueCollision, Seminormal
from .modules import (
    ModuleFactory,
    NotInModule,
    alt_basis,
    column_filtration,
    coordinates,
    find_isomorphism,
    gram,
    hom_indices,
    is_associative_form,
    is_intertwiner,
    module_homs,
    perm_form,
    perm_hom_basis,
    semistandard_basis,
    specht_filtration,
)
from .scalars import GENERIC, CycloField, Specialization
from .schur import (
    SchurAlgebra,
    TiltingModule,
    WeylTheory,
    double_centralizer,
    hecke_decomposition,
    intersection_dim,
    ringel_dual,
    schur_functor,
    twist_structure_constants_match,
    weyl_multiplicities,
    z_module,
    z_weyl_filtration,
)

EXHAUSTIVE_LIMIT = 36  # r^n n! up to which congruence checks run over a full basis
DEFAULT_SPECIALIZATION = Specialization(4)  # q -> zeta_4, e = 2


@dataclass
class Report:
    name: str
    r: int
    n: int
    spec: str
    passed: bool
    summary: str
    data: dict = dc_field(default_factory=dict)
    elapsed: float | None = None

    def to_json(self, timing: bool = False) -> dict:
        out = {
            "name": self.name,
            "r": self.r,
            "n": self.n,
            "spec": self.spec,
            "status": "pass" if self.passed else "fail",
            "summary": self.summary,
            "data": self.data,
        }
        if timing and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 3)
        return out

    def to_text(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name} (r={self.r}, n={self.n}, {self.spec}): {self.summary}"


class Context:
    """Lazily built data for one (r, n) over Q(zeta_M)."""

    def __init__(self, r: int, n: int, ambient: int | None = None):
        self.r, self.n = r, n
        M = lcm(r, ambient or 1)
        self.field = CycloField(M)
        self.Y = YokonumaHecke(r, n, self.field)

    @cached_property
    def factory(self) -> ModuleFactory:
        return ModuleFactory(self.Y)

    @property
    def cm(self) -> CellularBasis:
        return self.factory.cm

    @property
    def cn(self) -> CellularBasis:
        return self.factory.cn

    @cached_property
    def schur(self) -> SchurAlgebra:
        return SchurAlgebra(self.factory)

    @cached_property
    def twisted(self) -> SchurAlgebra:
        return SchurAlgebra(self.factory, "n")

    @cached_property
    def extended(self) -> SchurAlgebra:
        return SchurAlgebra(self.factory, extended=True)

    @cached_property
    def weyl(self) -> WeylTheory:
        return WeylTheory(self.schur)

    @cached_property
    def tilting(self) -> dict:
        return {nu: TiltingModule(self.schur, nu) for nu in self.schur.compositions}

    @cached_property
    def seminormal(self) -> Seminormal:
        return Seminormal(self.cm, self.cn)

    @property
    def shapes(self):
        return self.factory.all_shapes()

    @property
    def compositions(self):
        return combinat.enumerate_multicompositions(self.r, self.n)

    @property
    def exhaustive(self) -> bool:
        return self.Y.dim <= EXHAUSTIVE_LIMIT


CheckFn = Callable[[Context, Specialization], tuple[bool, str, dict]]
REGISTRY: dict[str, tuple[CheckFn, str]] = {}


def check(name: str, description: str):
    def deco(fn: CheckFn) -> CheckFn:
        REGISTRY[name] = (fn, description)
        return fn

    return deco


def run_check(name: str, ctx: Context, spec: Specialization = GENERIC) -> Report:
    if name not in REGISTRY:
        raise KeyError(f"unknown check {name!r}")
    fn, _ = REGISTRY[name]
    t0 = time.perf_counter()
    passed, summary, data = fn(ctx, spec)
    return Report(name, ctx.r, ctx.n, str(spec), bool(passed), summary, data, time.perf_counter() - t0)


def reports_to_json(reports: list[Report], timing: bool = False) -> str:
    items = sorted((r.to_json(timing) for r in reports), key=lambda d: (d["name"], d["r"], d["n"], d["spec"]))
    return json.dumps(items, indent=2, sort_keys=True)


def _s(x) -> str:
    return str(x)


def _shape(lam) -> str:
    return json.dumps(combinat.shape_to_json(lam))


def _specialization_or_default(spec: Specialization) -> Specialization:
    return DEFAULT_SPECIALIZATION if spec.is_generic else spec


# -- the algebra ------------------------------------------------------------
@check("algebra-rank", "dim Y = r^n n! = sum of |Std(lam)|^2, and the generators span that many dimensions from 1")
def _rank(ctx: Context, spec):
    Y = ctx.Y
    expected = Y.r**Y.n * factorial(Y.n)
    std_sum = sum(len(ctx.cm.std[lam]) ** 2 for lam in ctx.shapes)
    # span of everything reachable from 1 by right multiplication with generators
    pos = {k: i for i, k in enumerate(Y.basis_keys)}
    dom = ctx.factory.dom

    def vec(x):
        v = [dom.zero] * Y.dim
        for k, c in x.c.items():
            v[pos[k]] = c
        return v

    frontier = [Y.one()]
    solver_rows: list = []
    seen_rank = 0
    while frontier and seen_rank < Y.dim:
        nxt = []
        for x in frontier:
            for h in [lambda a, j=j: Y.rmul_t(a, j) for j in range(1, Y.n + 1)] + [
                lambda a, i=i: Y.rmul_g(a, i) for i in range(1, Y.n)
            ]:
                y = h(x)
                cand = solver_rows + [vec(y)]
                rk = linalg.rank(cand)
                if rk > seen_rank:
                    solver_rows, seen_rank = cand, rk
                    nxt.append(y)
        if not solver_rows:
            solver_rows, seen_rank = [vec(Y.one())], 1
        frontier = nxt
    data = {"expected": expected, "basis_size": Y.dim, "sum_std_squared": std_sum, "generated_rank": seen_rank}
    ok = expected == Y.dim == std_sum == seen_rank
    return ok, f"r^n n! = {expected}, basis {Y.dim}, sum |Std|^2 = {std_sum}, generated {seen_rank}", data


@check("defining-relations", "t^r = 1, commutations, quadratic and braid relations, inverse of g_i, e_i idempotent")
def _relations(ctx: Context, spec):
    Y = ctx.Y
    n, r = Y.n, Y.r
    failures = []
    one = Y.one()
    t = {j: Y.gen_t(j) for j in range(1, n + 1)}
    g = {i: Y.gen_g(i) for i in range(1, n)}
    for j in range(1, n + 1):
        if Y.prod([t[j]] * r) != one:
            failures.append(f"t{j}^r")
        for k in range(j + 1, n + 1):
            if Y.mul(t[j], t[k]) != Y.mul(t[k], t[j]):
                failures.append(f"t{j}t{k}")
    for i in range(1, n):
        e = Y.e_i(i)
        if Y.mul(e, e) != e:
            failures.append(f"e{i}^2")
        for j in range(1, n + 1):
            sj = i + 1 if j == i else (i if j == i + 1 else j)
            if Y.mul(g[i], t[j]) != Y.mul(t[sj], g[i]):
                failures.append(f"g{i}t{j}")
        if Y.mul(g[i], g[i]) != one + Y.mul(e, g[i]) * Y.qq:
            failures.append(f"g{i}^2")
        inv = g[i] - e * Y.qq
        if Y.mul(g[i], inv) != one or Y.mul(inv, g[i]) != one:
            failures.append(f"g{i}^-1")
        for k in range(i + 1, n):
            if k == i + 1:
                if Y.prod([g[i], g[k], g[i]]) != Y.prod([g[k], g[i], g[k]]):
                    failures.append(f"braid{i}")
            elif Y.mul(g[i], g[k]) != Y.mul(g[k], g[i]):
                failures.append(f"g{i}g{k}")
    # every g_w is the product along any reduced word
    for w in Y.perms:
        if Y.prod(Y.gen_g(i) for i in perms.reduced_word(w)) != Y.g_w(w):
            failures.append(f"g_w{perms.one_line(w)}")
    return not failures, "all relations hold" if not failures else f"failing: {failures}", {"failures": failures}


# -- cellularity of Y -------------------------------------------------------
@check("cellular-transition", "the m- and n-cellular transition matrices are invertible")
def _transition(ctx: Context, spec):
    data = {}
    ok = True
    for cb in (ctx.cm, ctx.cn):
        try:
            blocks = cb.all_blocks()
            count = sum(len(b.labels) for b in blocks)
            data[cb.flavor] = {"blocks": len(blocks), "basis_size": count}
            ok &= count == ctx.Y.dim
        except AssertionError as exc:
            data[cb.flavor] = {"error": str(exc)}
            ok = False
    return ok, "both transition matrices invertible" if ok else "singular transition", data


def _cell_congruence(cb: CellularBasis, hs: list) -> list:
    """Pairs (index, h) where m_st h breaks the cell congruence."""
    bad = []
    for lam in cb.shapes:
        std = cb.std[lam]
        for t in std:
            for hk, h in hs:
                ref = None
                for s in std:
                    exp = cb.expand(cb.Y.mul(cb.elem(s, t), h))
                    row = {}
                    for (mu, u, v), c in exp.items():
                        if mu == lam:
                            if u != s:
                                bad.append((lam, s, t, hk))
                            row[v] = c
                        elif not combinat.dominates(mu, lam):
                            bad.append((lam, s, t, hk))
                    if ref is None:
                        ref = row
                    elif row != ref:
                        bad.append((lam, s, t, hk))
    return bad


def _test_elements(ctx: Context) -> list:
    Y = ctx.Y
    if ctx.exhaustive:
        return [(str(k), Y.element({k: Y.field.one})) for k in Y.basis_keys]
    return [(f"t{j}", Y.gen_t(j)) for j in range(1, Y.n + 1)] + [(f"g{i}", Y.gen_g(i)) for i in range(1, Y.n)]


@check("cellular-congruence", "m_st h and n_st h are congruent to sums over m_sv (n_sv) modulo higher shapes, independently of s")
def _congruence(ctx: Context, spec):
    hs = _test_elements(ctx)
    bad = {cb.flavor: len(_cell_congruence(cb, hs)) for cb in (ctx.cm, ctx.cn)}
    stars = 0
    for cb in (ctx.cm, ctx.cn):
        for lam, s, t in cb.indices:
            if ctx.Y.star(cb.elem(s, t)) != cb.elem(t, s):
                stars += 1
    scope = "full basis" if ctx.exhaustive else "generators"
    ok = not any(bad.values()) and stars == 0
    return ok, f"tested against {scope}: violations {bad}, star failures {stars}", {
        "scope": scope,
        "violations": bad,
        "star_failures": stars,
    }


# -- the Schur algebra ------------------------------------------------------
@check("schur-dimension", "dim YS = sum of |T_0^+(lam)|^2 = sum over weights of dim Hom(M^nu, M^mu)")
def _schur_dim(ctx: Context, spec):
    A = ctx.schur
    count = sum(len(combinat.t0plus_all(lam)) ** 2 for lam in ctx.shapes)
    homs = sum(
        len(module_homs(ctx.factory.perm(nu).module, ctx.factory.perm(mu).module))
        for mu in ctx.compositions
        for nu in ctx.compositions
    )
    ok = A.dim == count == homs
    return ok, f"dim YS = {A.dim}, tableau count {count}, intertwiner count {homs}", {
        "dim": A.dim,
        "tableau_count": count,
        "intertwiner_count": homs,
    }


def _triples(A: SchurAlgebra, ctx: Context):
    n = A.dim
    if n <= 20:
        return [(i, j, k) for i in range(n) for j in range(n) for k in range(n)]
    rng = random.Random(0)
    return [(rng.randrange(n), rng.randrange(n), rng.randrange(n)) for _ in range(500)]


@check("schur-algebra-laws", "identity and associativity laws of the structure constants; phi_ST* = phi_TS is an anti-automorphism")
def _schur_laws(ctx: Context, spec):
    A = ctx.schur
    one = A.identity()
    e = A.basis_elem
    ident = all(A.mul(one, e(i)) == e(i) == A.mul(e(i), one) for i in range(A.dim))
    triples = _triples(A, ctx)
    assoc = all(A.mul(A.mul(e(i), e(j)), e(k)) == A.mul(e(i), A.mul(e(j), e(k))) for i, j, k in triples)
    star = all(A.star(A.mul(e(i), e(j))) == A.mul(A.star(e(j)), A.star(e(i))) for i in range(A.dim) for j in range(A.dim))
    idem = True
    for mu in A.compositions:
        p = A.weight_idempotent(mu)
        idem &= A.mul(p, p) == p
        if combinat.is_multipartition(mu):
            top = A.top_item(mu)
            idem &= p == {A.index[(mu, top, top)]: A.dom.one}
    ok = ident and assoc and star and idem
    data = {"identity": ident, "associativity": assoc, "triples": len(triples), "star": star, "idempotents": idem}
    return ok, f"identity {ident}, associativity {assoc} ({len(triples)} triples), star {star}, idempotents {idem}", data


@check("schur-cellular-congruence", "phi_ST phi is congruent to sums over phi_SV modulo higher shapes, independently of S")
def _schur_cell(ctx: Context, spec):
    A = ctx.schur
    bad = 0
    js = range(A.dim) if A.dim <= 40 else random.Random(0).sample(range(A.dim), 40)
    for lam in ctx.shapes:
        items = A.items[lam]
        for T in items:
            for j in js:
                ref = None
                for S in items:
                    prod = A.mul_basis(A.index[(lam, S, T)], j)
                    row = {}
                    for k, c in prod.items():
                        mu, a, b = A.basis[k]
                        if mu == lam:
                            if a != S:
                                bad += 1
                            row[b] = c
                        elif not combinat.dominates(mu, lam):
                            bad += 1
                    if ref is None:
                        ref = row
                    elif row != ref:
                        bad += 1
    return bad == 0, f"{bad} violations", {"violations": bad}


@check("hom-space-dimensions", "|D_mu,nu cap S_alpha| = sum over lam of |T_0^+(lam,mu)||T_0^+(lam,nu)| = dim Hom(M^nu, M^mu)")
def _hom_dims(ctx: Context, spec):
    f = ctx.factory
    rows = []
    ok = True
    for nu in ctx.compositions:
        for mu in ctx.compositions:
            B = perm_hom_basis(f, nu, mu)
            Mn, Mm = f.perm(nu).module, f.perm(mu).module
            inter = all(is_intertwiner(Mn, Mm, X) for X in B)
            indep = not B or linalg.rank([[x for row in X for x in row] for X in B]) == len(B)
            k = len(module_homs(Mn, Mm))
            count = sum(len(combinat.t0plus(l, mu)) * len(combinat.t0plus(l, nu)) for l in ctx.shapes)
            inter_dim = intersection_dim(f, mu, nu)
            good = inter and indep and len(B) == k == count == inter_dim
            if combinat.alpha(mu) != combinat.alpha(nu):
                good &= k == 0
            ok &= good
            rows.append([_shape(nu), _shape(mu), len(B), k, count, inter_dim, good])
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} weight pairs agree", {
        "columns": ["nu", "mu", "double_cosets", "intertwiners", "tableau_count", "intersection_dim", "ok"],
        "rows": rows,
    }


@check("permutation-bases", "the coset basis and the basis m_St of M^mu have the predicted size and invertible transition")
def _perm_bases(ctx: Context, spec):
    f = ctx.factory
    rows = []
    ok = True
    for mu in ctx.compositions:
        P = f.perm(mu)
        sb = semistandard_basis(f, mu)
        C = coordinates(P, [x for _, x in sb])
        good = len(C) == P.dim == len(perms.coset_reps(combinat.flat(mu))) and linalg.rank(C) == P.dim
        Mod = P.module
        good &= not Mod.relation_defects()
        if combinat.is_multipartition(mu):
            T = combinat.semistandard_initial(mu)
            good &= len(sb) > 0 and [x for (lam, S, t), x in sb if S == T and t == ctx.cm.std[mu][0]] == [P.gen]
        ok &= good
        rows.append([_shape(mu), P.dim, len(sb), good])
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} permutation modules", {"rows": rows}


# -- Weyl theory and decomposition numbers -----------------------------------
@check("weyl-modules", "dim W^lam = |T_0^+(lam)|, <phi_T^lam, phi_T^lam> = 1, forms vanish across types, action respects products")
def _weyl(ctx: Context, spec):
    W, A = ctx.weyl, ctx.schur
    rows = []
    ok = True
    for lam in ctx.shapes:
        M = W.weyl(lam)
        G = W.gram(lam)
        items = M.labels
        top = combinat.semistandard_initial(lam)
        k = items.index((lam, top))
        norm = G[k][k] == A.dom.one
        types = all(G[a][b].is_zero() for a in range(len(items)) for b in range(len(items)) if items[a][0] != items[b][0])
        pairs = None if A.dim <= 20 else [(i, j) for i in range(A.dim) for j in range(A.dim) if (i + j) % 7 == 0]
        rel = M.respects_products(A, pairs)
        good = M.dim == len(combinat.t0plus_all(lam)) and norm and types and rel
        ok &= good
        rows.append([_shape(lam), M.dim, norm, types, rel])
    return ok, f"{sum(1 for r_ in rows if all(r_[2:]))}/{len(rows)} Weyl modules", {
        "columns": ["shape", "dim", "top_norm_one", "type_orthogonal", "respects_products"],
        "rows": rows,
    }


def _matrix_json(shapes, d: dict) -> list:
    return [[d[(lam, mu)] for mu in shapes] for lam in shapes]


def _unitriangular(shapes, d: dict) -> bool:
    for lam in shapes:
        if d[(lam, lam)] != 1:
            return False
        for mu in shapes:
            if mu != lam and d[(lam, mu)] and not combinat.dominates(lam, mu):
                return False
    return True


@check("decomposition-matrix", "[W^lam : L^mu] is unitriangular; the identity when generic; Hecke-side simples are the e-restricted shapes")
def _decomp(ctx: Context, spec):
    A, W = ctx.schur, ctx.weyl
    shapes = list(ctx.shapes)
    d = W.decomposition_matrix(spec)
    uni = _unitriangular(shapes, d)
    nonzero_simples = all(W.simple_dim(lam, spec) > 0 for lam in shapes)
    data = {"shapes": [_shape(l) for l in shapes], "schur_side": _matrix_json(shapes, d)}
    ok = uni and nonzero_simples
    if spec.is_generic:
        ident = all(d[(l, m)] == (1 if l == m else 0) for l in shapes for m in shapes)
        gens = all(gram(ctx.factory, lam).radical_dim == 0 for lam in shapes)
        ok &= ident and gens
        return ok, f"identity {ident}, unitriangular {uni}", data
    dh, K = hecke_decomposition(ctx.factory, spec)
    Ke = list(combinat.e_restricted(ctx.r, ctx.n, spec.e))
    data["hecke_side"] = [[dh[(l, m)] for m in K] for l in shapes]
    data["hecke_simples"] = [_shape(l) for l in K]
    data["e"] = spec.e
    data["e_restricted"] = [_shape(l) for l in Ke]
    ok &= K == Ke
    return ok, f"unitriangular {uni}, simples = e-restricted {K == Ke}", data


@check("decomposition-comparison", "[S^lam : D^mu] (Hecke characters) = [W^lam : L^mu] (Schur weight peeling) for mu e-restricted")
def _cor44(ctx: Context, spec):
    spec = _specialization_or_default(spec)
    shapes = list(ctx.shapes)
    ds = ctx.weyl.decomposition_matrix(spec)
    dh, K = hecke_decomposition(ctx.factory, spec)
    mism = [[_shape(l), _shape(m), ds[(l, m)], dh[(l, m)]] for l in shapes for m in K if ds[(l, m)] != dh[(l, m)]]
    data = {
        "specialization": str(spec),
        "K": [_shape(m) for m in K],
        "schur_side": [[ds[(l, m)] for m in K] for l in shapes],
        "hecke_side": [[dh[(l, m)] for m in K] for l in shapes],
        "mismatches": mism,
    }
    nontrivial = any(ds[(l, m)] for l in shapes for m in K if l != m)
    return not mism, f"{len(mism)} mismatches over {len(shapes)}x{len(K)} entries (nontrivial: {nontrivial})", data


# -- extended algebra and Schur functor ---------------------------------------
@check("double-centralizer", "End over the extended Schur algebra of (+M^mu) + Y has dim r^n n! and is the image of Y")
def _dc(ctx: Context, spec):
    X = ctx.extended
    count = sum((len(combinat.t0plus_all(lam)) + len(combinat.standard_tableaux(lam))) ** 2 for lam in ctx.shapes)
    end_dim, act_rank = double_centralizer(X)
    expected = ctx.Y.dim
    ok = end_dim == act_rank == expected and X.dim == count
    return ok, f"dim End = {end_dim}, Y-action rank {act_rank}, r^n n! = {expected}, extended dim {X.dim}", {
        "end_dim": end_dim,
        "action_rank": act_rank,
        "expected": expected,
        "extended_dim": X.dim,
        "extended_count": count,
    }


@check("schur-functor", "F(W^lam) = S^lam, F(Z^mu) = M^mu, F(E^mu) = N^mu via explicit isomorphisms")
def _functor(ctx: Context, spec):
    A, f = ctx.schur, ctx.factory
    rows = []
    ok = True
    for lam in ctx.shapes:
        FW = schur_functor(A, ctx.weyl.weyl(lam))
        good = FW.dim == f.specht(lam).dim and find_isomorphism(FW, f.specht(lam)) is not None
        ok &= good
        rows.append(["W", _shape(lam), FW.dim, good])
    for mu in ctx.compositions:
        FZ = schur_functor(A, z_module(A, mu))
        M = f.perm(mu).module
        good = FZ.dim == M.dim and find_isomorphism(FZ, M) is not None
        ok &= good
        rows.append(["Z", _shape(mu), FZ.dim, good])
        FE = schur_functor(A, ctx.tilting[mu].module)
        N = f.perm(mu, "n").module
        good = FE.dim == N.dim and find_isomorphism(FE, N) is not None
        ok &= good
        rows.append(["E", _shape(mu), FE.dim, good])
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} isomorphisms found", {"rows": rows}


# -- Jucys-Murphy elements and the trace form -------------------------------
def _pair_dominates(a, b) -> bool:
    return combinat.tableau_dominates(a[0], b[0]) and combinat.tableau_dominates(a[1], b[1])


@check("jm-triangularity", "m_st J_k = res_t(k) m_st + terms m_uv with (u,v) strictly dominating (s,t) and equal alpha")
def _jm(ctx: Context, spec):
    Y, cb = ctx.Y, ctx.cm
    bad_strong, bad_weak, diag_bad = 0, 0, 0
    J = {k: Y.jm(k) for k in range(1, Y.n + 1)}
    commute = all(Y.mul(J[a], J[b]) == Y.mul(J[b], J[a]) for a in J for b in J)
    for lam, s, t in cb.indices:
        for k in range(1, Y.n + 1):
            exp = cb.expand(Y.mul(cb.elem(s, t), J[k]))
            if exp.get((lam, s, t)) != Y.field.q_power(combinat.residue_exponent(t, k)):
                diag_bad += 1
            for (mu, u, v), c in exp.items():
                if (u, v) == (s, t):
                    continue
                if combinat.alpha(mu) != combinat.alpha(lam):
                    bad_strong += 1
                    bad_weak += 1
                    continue
                if not _pair_dominates((u, v), (s, t)):
                    bad_strong += 1
                    weak = (mu != lam and combinat.dominates(mu, lam)) or (mu == lam and _pair_dominates((u, v), (s, t)))
                    if not weak:
                        bad_weak += 1
    ok = diag_bad == 0 and bad_strong == 0 and commute
    data = {"diagonal_failures": diag_bad, "strong_order_failures": bad_strong, "weak_order_failures": bad_weak, "commute": commute}
    return ok, f"diagonal failures {diag_bad}, strong-order failures {bad_strong} (weak-order {bad_weak})", data


@check("trace-form", "tau is a trace, tau(h*) = tau(h), and the pairing is symmetric and associative")
def _trace(ctx: Context, spec):
    Y = ctx.Y
    rng = random.Random(0)
    keys = [(b, w) for w in Y.perms for b in product(range(Y.r), repeat=Y.n)]
    pairs = [(rng.choice(keys), rng.choice(keys)) for _ in range(200)]
    mono = lambda k: Y.monomial(*k)
    ok_trace = all(Y.tau(Y.mul(mono(a), mono(b))) == Y.tau(Y.mul(mono(b), mono(a))) for a, b in pairs)
    ok_star = all(Y.tau(Y.star(mono(a))) == Y.tau(mono(a)) for a, _ in pairs)
    gens = [Y.gen_t(j) for j in range(1, Y.n + 1)] + [Y.gen_g(i) for i in range(1, Y.n)]
    ok_assoc = all(
        Y.pairing(Y.mul(mono(a), h), mono(b)) == Y.pairing(mono(a), Y.mul(mono(b), Y.star(h))) for a, b in pairs[:40] for h in gens
    )
    ok = ok_trace and ok_star and ok_assoc
    return ok, f"trace {ok_trace}, star {ok_star}, associative {ok_assoc}", {
        "pairs": len(pairs),
        "trace": ok_trace,
        "star_invariant": ok_star,
        "associative": ok_assoc,
    }


@check("trace-pairing", "<m_st, n_uv> is 1 when (u',v') = (s,t) and 0 unless (u',v') dominates (s,t)")
def _thm515(ctx: Context, spec):
    Y, cm, cn = ctx.Y, ctx.cm, ctx.cn
    one_fail, zero_fail = [], []
    total = 0
    for lam, s, t in cm.indices:
        for mu, u, v in cn.indices:
            total += 1
            val = Y.pairing(cm.elem(s, t), cn.elem(u, v))
            uc, vc = combinat.conjugate_tableau(u), combinat.conjugate_tableau(v)
            if (uc, vc) == (s, t):
                if val != Y.field.one:
                    one_fail.append([combinat.render(s), combinat.render(t), combinat.render(u), combinat.render(v), _s(val)])
            elif not _pair_dominates((uc, vc), (s, t)) and not val.is_zero():
                zero_fail.append([combinat.render(s), combinat.render(t), combinat.render(u), combinat.render(v), _s(val)])
    ok = not one_fail and not zero_fail
    return ok, f"{total} entries: {len(one_fail)} diagonal failures, {len(zero_fail)} triangularity failures", {
        "entries": total,
        "diagonal_failures": one_fail[:20],
        "triangularity_failures": zero_fail[:20],
        "diagonal_failure_count": len(one_fail),
        "triangularity_failure_count": len(zero_fail),
    }


@check("seminormal-forms", "m_st = f_st + higher f_uv with equal alpha, and f_st g_uv = 0 unless t = u'")
def _seminormal(ctx: Context, spec):
    Y, sn, cm = ctx.Y, ctx.seminormal, ctx.cm
    try:
        fs = {(s, t): sn.f(s, t) for _, s, t in cm.indices}
        gs = {(s, t): sn.g(s, t) for _, s, t in cm.indices}
    except ResidueCollision as exc:
        return False, str(exc), {}
    orth_fail = 0
    for (s, t), f in fs.items():
        for (u, v), g in gs.items():
            if t != combinat.conjugate_tableau(u) and not Y.mul(f, g).is_zero():
                orth_fail += 1
    # expansion of m_st in the f basis, solved in the E_chi g_w coordinates
    pos = {k: i for i, k in enumerate(Y.basis_keys)}
    dom = ctx.factory.dom
    labels = list(fs)
    vec = lambda x: [x.c.get(k, dom.zero) for k in Y.basis_keys]
    solver = linalg.RowSolver([vec(fs[l]) for l in labels], Y.dim, dom)
    exp_fail = 0
    if not solver.independent:
        exp_fail = -1
    else:
        shape = {l: combinat.shape_of(l[0]) for l in labels}
        for l in labels:
            c = solver.solve(vec(cm.elem(*l)))
            for l2, x in zip(labels, c):
                if x.is_zero():
                    continue
                if l2 == l:
                    if x != dom.one:
                        exp_fail += 1
                elif not (_pair_dominates(l2, l) and combinat.alpha(shape[l2]) == combinat.alpha(shape[l])):
                    exp_fail += 1
    prime_ok = all(gs[l] == Y.prime(fs[l]) for l in labels)
    ok = orth_fail == 0 and exp_fail == 0 and prime_ok
    return ok, f"orthogonality failures {orth_fail}, expansion failures {exp_fail}, g = f' {prime_ok}", {
        "orthogonality_failures": orth_fail,
        "expansion_failures": exp_fail,
        "g_is_prime_of_f": prime_ok,
    }


# -- dualities --------------------------------------------------------------
@check("conjugate-dual-specht", "S^{lam'} is isomorphic to the contragredient dual of S_lam")
def _cor516(ctx: Context, spec):
    f = ctx.factory
    rows = []
    for lam in ctx.shapes:
        A = f.specht(combinat.conjugate(lam), "m").specialize(spec)
        B = f.specht(lam, "n").dual().specialize(spec)
        iso = find_isomorphism(A, B) is not None
        rows.append([_shape(lam), iso])
    ok = all(r_[1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[1])}/{len(rows)} isomorphisms", {"rows": rows}


@check("permutation-self-duality", "the form built from the m_St and m_mu n_{U. v} bases is associative and non-degenerate")
def _prop522(ctx: Context, spec):
    f = ctx.factory
    rows = []
    ok = True
    for flavor in ("m", "n"):
        for mu in ctx.compositions:
            P = f.perm(mu, flavor)
            try:
                F = _perm_form(ctx, mu, flavor)
                det = linalg.det(F, f.dom)
                assoc = is_associative_form(P.module, F)
                nondeg = not det.is_zero()
                info = _s(det)
            except (ZeroDivisionError, NotInModule, ValueError) as exc:
                assoc = nondeg = False
                info = f"{type(exc).__name__}: {exc}"
            self_dual = find_isomorphism(P.module, P.module.dual()) is not None
            good = assoc and nondeg
            ok &= good
            rows.append([flavor, _shape(mu), assoc, nondeg, self_dual, info])
    return ok, f"{sum(1 for r_ in rows if r_[2] and r_[3])}/{len(rows)} forms associative and non-degenerate", {
        "columns": ["flavor", "mu", "associative", "non_degenerate", "dual_isomorphic", "determinant"],
        "rows": rows,
    }


def _perm_form(ctx: Context, mu, flavor: str):
    if flavor == "m":
        return perm_form(ctx.factory, mu)
    # the N^mu analogue: <n_St, n_mu m_{U. v}> = <n_St, m_{U. v}>
    from .cellular import tableau_elements

    f, Y = ctx.factory, ctx.Y
    P = f.perm(mu, "n")
    left = []
    for lam in ctx.shapes:
        for S in combinat.t0plus(lam, mu):
            for t in f.cn.std[lam]:
                left.append(tableau_elements(f.cn, S, mu, t))
    right = []
    for lam in ctx.shapes:
        for U in combinat.column_semistandard(lam, mu):
            ud = combinat.s_dot(U, lam, mu)
            for v in f.cm.std[lam]:
                right.append(f.cm.elem(ud, v))
    if len(left) != P.dim or len(right) != P.dim:
        raise ValueError("basis sizes differ from dim N^mu")
    dom = f.dom
    G = [[Y.pairing(x, y) for y in right] for x in left]
    P1 = coordinates(P, left)
    P2 = coordinates(P, [Y.mul(P.gen, y) for y in right])
    return linalg.matmul(linalg.matmul(linalg.inverse(P1, dom), G, dom), linalg.transpose(linalg.inverse(P2, dom)), dom)


@check("column-nonvanishing", "m_mu n_uv != 0 (and n_mu m_uv != 0) exactly when mu(u) is column semistandard with alpha(lam') = alpha(mu)")
def _cor520(ctx: Context, spec):
    Y, f = ctx.Y, ctx.factory
    bad = []
    tested = 0
    for mu in ctx.compositions:
        for flavor in ("m", "n"):
            gen = Y.m_elem(mu) if flavor == "m" else Y.n_elem(mu)
            other = f.cn if flavor == "m" else f.cm
            for lam, u, v in other.indices:
                tested += 1
                nonzero = not Y.mul(gen, other.elem(u, v)).is_zero()
                pred = combinat.is_column_semistandard(combinat.type_of(u, mu), lam, mu)
                if nonzero != pred:
                    bad.append([flavor, _shape(mu), combinat.render(u), combinat.render(v), nonzero, pred])
    return not bad, f"{len(bad)} of {tested} products disagree with the criterion", {
        "tested": tested,
        "disagreements": len(bad),
        "examples": bad[:10],
    }


@check("column-basis", "the m_mu n_{S. t} (and n_mu m_{S. t}) form bases of M^mu (N^mu)")
def _prop519(ctx: Context, spec):
    f = ctx.factory
    rows = []
    for flavor in ("m", "n"):
        for mu in ctx.compositions:
            P = f.perm(mu, flavor)
            ab = alt_basis(f, mu, flavor)
            try:
                C = coordinates(P, [x for _, x in ab])
                rk = linalg.rank(C) if C else 0
            except NotInModule:
                rk = -1
            rows.append([flavor, _shape(mu), P.dim, len(ab), rk, len(ab) == P.dim == rk])
    ok = all(r_[-1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} bases", {
        "columns": ["flavor", "mu", "dim", "size", "rank", "ok"],
        "rows": rows,
    }


# -- filtrations ------------------------------------------------------------
def _filtration_row(mu, rep) -> list:
    return [_shape(mu), rep.spans, all(rep.isomorphic), {_shape(k): v for k, v in sorted(rep.counts.items())}, rep.ok]


@check("specht-filtration", "M^mu is filtered by the m_St with sections S^lam, |T_0^+(lam, mu)| times")
def _cor53(ctx: Context, spec):
    rows = [_filtration_row(mu, specht_filtration(ctx.factory, mu)) for mu in ctx.compositions]
    ok = all(r_[-1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} filtrations", {"rows": rows}


@check("column-filtrations", "M^mu (N^mu) is filtered with dual Specht (Specht) sections, |T^cs(lam, mu)| times")
def _cor521(ctx: Context, spec):
    rows = []
    for flavor in ("m", "n"):
        for mu in ctx.compositions:
            rows.append([flavor] + _filtration_row(mu, column_filtration(ctx.factory, mu, flavor)))
    ok = all(r_[-1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} filtrations", {"rows": rows}


@check("z-weyl-filtration", "Z^mu is filtered by Weyl modules W^lam, |T_0^+(lam, mu)| times")
def _lemma52(ctx: Context, spec):
    rows = []
    for mu in ctx.compositions:
        rep = z_weyl_filtration(ctx.schur, ctx.weyl, mu)
        Z = z_module(ctx.schur, mu)
        dim_ok = Z.dim == sum(len(combinat.t0plus(l, mu)) * len(combinat.t0plus_all(l)) for l in ctx.shapes)
        rows.append([_shape(mu), rep.spans, all(rep.isomorphic), {_shape(k): v for k, v in sorted(rep.counts.items())}, rep.ok and dim_ok])
    ok = all(r_[-1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} filtrations", {"rows": rows}


@check("twisted-schur", "the algebra End(+N^mu) has the same dimension and its structure constants are the prime image")
def _prop59(ctx: Context, spec):
    A, An = ctx.schur, ctx.twisted
    primes = all(An.element(x) == ctx.Y.prime(A.element(x)) for x in A.basis)
    match = twist_structure_constants_match(A, An)
    ok = A.dim == An.dim and primes and match
    return ok, f"dims {A.dim}/{An.dim}, n_ST = m_ST' {primes}, constants match {match}", {
        "dim": A.dim,
        "twisted_dim": An.dim,
        "prime_elements": primes,
        "constants_match": match,
    }


# -- tilting modules --------------------------------------------------------
@check("tilting-bases", "the theta_ST and theta'_AB families are bases of E^nu of size sum |T^cs(lam,nu)||T_0^+(lam)|")
def _tilt_bases(ctx: Context, spec):
    rows = []
    for nu, T in ctx.tilting.items():
        th, tp = T.theta_basis(), T.theta_prime_basis()
        predicted = sum(len(combinat.column_semistandard(l, nu)) * len(combinat.t0plus_all(l)) for l in ctx.shapes)
        rows.append([_shape(nu), T.dim, predicted, len(th), len(tp), T.basis_spans(th), T.basis_spans(tp)])
    ok = all(r_[1] == r_[2] and r_[5] and r_[6] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[5] and r_[6])}/{len(rows)} modules with both bases", {
        "columns": ["nu", "dim", "predicted", "theta", "theta_prime", "theta_basis", "theta_prime_basis"],
        "rows": rows,
    }


@check("tilting-weyl-filtration", "E^nu is filtered by the theta_ST with sections W^lam, |T^cs(lam, nu)| times")
def _prop526(ctx: Context, spec):
    rows = []
    for nu, T in ctx.tilting.items():
        rep = T.weyl_filtration(ctx.weyl)
        rows.append(_filtration_row(nu, rep))
    ok = all(r_[-1] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[-1])}/{len(rows)} filtrations", {"rows": rows}


@check("tilting-triangularity", "[E^lam : W^{lam'}] = 1 and [E^lam : W^mu] != 0 only if lam' dominates mu")
def _cor527(ctx: Context, spec):
    A = ctx.schur
    rows = []
    ok = True
    for lam in ctx.shapes:
        T = ctx.tilting[lam]
        mult = weyl_multiplicities(A, T.module)
        lc = combinat.conjugate(lam)
        top = mult.get(lc, 0) == 1
        support = all(not m or combinat.dominates(lc, mu) for mu, m in mult.items())
        ok &= top and support
        rows.append([_shape(lam), {_shape(k): v for k, v in mult.items() if v}, top, support])
    ok &= all(T.module.respects_products(A, None if A.dim <= 20 else [(i, i) for i in range(A.dim)]) for T in ctx.tilting.values())
    return ok, f"{sum(1 for r_ in rows if r_[2] and r_[3])}/{len(rows)} shapes", {"rows": rows}


@check("tilting-pairing", "the pairing between the theta and theta' bases of E^nu is square and non-degenerate")
def _thm530(ctx: Context, spec):
    rows = []
    dom = ctx.factory.dom
    for nu, T in ctx.tilting.items():
        P = T.pairing_matrix()
        square = bool(P) and len(P) == len(P[0])
        det = linalg.det(P, dom) if square else dom.zero
        nondeg = square and not det.is_zero()
        spec_ok = nondeg
        if nondeg and not spec.is_generic:
            spec_ok = not linalg.det(linalg.map_matrix(P, spec.apply), linalg.cyclo_domain(spec.target_field(dom.field))).is_zero()
        rows.append([_shape(nu), len(P), len(P[0]) if P else 0, nondeg, spec_ok, _s(det)])
    ok = all(r_[3] and r_[4] for r_ in rows)
    return ok, f"{sum(1 for r_ in rows if r_[3] and r_[4])}/{len(rows)} non-degenerate", {
        "columns": ["nu", "rows", "cols", "non_degenerate", "non_degenerate_specialized", "determinant"],
        "rows": rows,
    }


@check("ringel-dual", "End_YS(+E^nu) has dim = dim YS, is spanned by the twisted maps, and composes in the opposite order")
def _cor534(ctx: Context, spec):
    rep = ringel_dual(ctx.schur, ctx.twisted, ctx.tilting)
    data = {
        "end_dim": rep.end_dim,
        "schur_dim": rep.schur_dim,
        "image_rank": rep.image_rank,
        "maps_commute": rep.all_commute,
        "opposite_composition": rep.opposite,
    }
    return rep.ok, f"dim End = {rep.end_dim}, dim YS = {rep.schur_dim}, image rank {rep.image_rank}, opposite {rep.opposite}", data


@check("specht-gram", "Gram matrices are symmetric and Laurent-integral; generic radicals vanish; sum of (dim D^lam)^2 = r^n n! generically")
def _gram(ctx: Context, spec):
    f = ctx.factory
    rows = []
    ok = True
    total = 0
    for lam in ctx.shapes:
        G = gram(f, lam)
        sym = G.is_symmetric()
        integral = all(x.is_laurent_integral() for row in G.matrix for x in row)
        S = f.specht(lam)
        rel = not S.relation_defects() and not f.specht(lam, "n").relation_defects()
        gs = gram(f, lam, spec)
        total += gs.rank**2
        ok &= sym and integral and rel
        if not spec.is_generic:
            ok &= (gs.rank > 0) == combinat.is_e_restricted(lam, spec.e)
        rows.append([_shape(lam), G.dim, gs.radical_dim, sym, integral, rel])
    if spec.is_generic:
        ok &= total == ctx.Y.dim
    return ok, f"{len(rows)} shapes, sum of squared simple dimensions {total}", {
        "columns": ["shape", "dim", "radical_dim", "symmetric", "laurent_integral", "relations"],
        "rows": rows,
    }


def check_names() -> list[str]:
    return sorted(REGISTRY)
