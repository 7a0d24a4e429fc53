"""Free covers, first Ext groups, and extension construction.

Ext^1(C, A) is computed from a free cover 0 -> K -> F -> C -> 0 as
Hom(K, A) modulo the restrictions of Hom(F, A); a representative cocycle
K -> A is turned into an extension module by the pushout
B = (A + F) / {(-c(w), w) | w in K}.
"""

from . import linalg
from .algebra import is_iso_to_regular
from .classes import is_p_member, is_s_member
from .duality import matlis_dual
from .errors import MatlisLabError, NotEquivariant, ParentMismatch
from .modules import (
    ModuleMap,
    direct_power,
    direct_sum,
    hom_space,
    quotient_module,
    radical,
    regular_module,
    submodule_as_module,
    submodule_from_spanning,
)
from .randmod import Lcg, random_submodule


class FreeCover:
    """A minimal surjection from a free module, with its kernel."""

    def __init__(self, module, free, epi, syzygy, injections):
        self.module = module
        self.free = free
        self.epi = epi
        self.syzygy = syzygy
        self.injections = injections


def free_cover(M):
    """Minimal free cover: R^t -> M with t = dim of M / mM.

    Generators map to lifts of a basis of the top; minimality shows up
    as syzygy <= radical(free), which is verified.
    """
    A = M.parent
    f = A.field
    rad = radical(M)
    lifts = []
    current = list(rad.basis_matrix)
    rk = linalg.rank(current, f) if current else 0
    for j in range(M.dim):
        e = tuple(f.one if t == j else f.zero for t in range(M.dim))
        cand = current + [e]
        r2 = linalg.rank(cand, f)
        if r2 > rk:
            lifts.append(e)
            current = cand
            rk = r2
        if rk == M.dim:
            break
    t = len(lifts)
    R = regular_module(A)
    free, injections = direct_power(R, t)
    cols = []
    for v in lifts:
        for j in range(A.dim):
            cols.append(linalg.mat_vec(M.actions[j], v, f))
    matrix = linalg.transpose(tuple(cols)) if cols else tuple(() for _ in range(M.dim))
    epi = ModuleMap(free, M, matrix, check=False)
    if M.dim and not epi.is_surjective():
        raise MatlisLabError("free cover is not surjective")
    syz = epi.kernel()
    if not radical(free).contains_submodule(syz):
        raise MatlisLabError("free cover is not minimal")
    return FreeCover(M, free, epi, syz, injections)


class Ext1Space:
    """Ext^1(C, A): dimension and representative cocycles K -> A."""

    def __init__(self, C, A, cover, K_mod, K_incl, dim, representatives):
        self.C = C
        self.A = A
        self.cover = cover
        self.K_mod = K_mod
        self.K_incl = K_incl
        self.dim = dim
        self.representatives = tuple(representatives)

    def zero_cocycle(self):
        f = self.A.parent.field
        return ModuleMap(
            self.K_mod, self.A, linalg.zeros(self.A.dim, self.K_mod.dim, f),
            check=False,
        )


def ext1(C, A, cover=None):
    """Hom(K, A) modulo restrictions from Hom(F, A)."""
    if C.parent is not A.parent:
        raise ParentMismatch("Ext across different algebras")
    f = A.parent.field
    cov = cover if cover is not None else free_cover(C)
    K_mod, K_incl = submodule_as_module(cov.syzygy)
    hom_ka = hom_space(K_mod, A)
    if K_mod.dim == 0 or A.dim == 0:
        return Ext1Space(C, A, cov, K_mod, K_incl, 0, ())
    restr_rows = []
    for g in hom_space(cov.free, A).basis:
        mat = linalg.mat_mul(g.matrix, K_incl.matrix, f)
        restr_rows.append(tuple(x for row in mat for x in row))
    current = list(restr_rows)
    rk = linalg.rank(current, f) if current else 0
    reps = []
    for h in hom_ka.basis:
        vec = tuple(x for row in h.matrix for x in row)
        cand = current + [vec]
        r2 = linalg.rank(cand, f)
        if r2 > rk:
            reps.append(h)
            current = cand
            rk = r2
    return Ext1Space(C, A, cov, K_mod, K_incl, len(reps), reps)


def extension_from_class(ext_space, cocycle):
    """The pushout extension 0 -> A -> B -> C -> 0 for a cocycle K -> A.

    Exactness is certified: the inclusion is injective, the projection
    surjective with kernel exactly the image, and lengths add up.
    """
    A = ext_space.A
    C = ext_space.C
    cov = ext_space.cover
    f = A.parent.field
    ModuleMap(ext_space.K_mod, A, cocycle.matrix, check=True)  # NotEquivariant if bad

    D, (inj_a, inj_f), (proj_a, proj_f) = direct_sum(A, cov.free)
    graph_cols = []
    for j in range(ext_space.K_mod.dim):
        e = tuple(f.one if t == j else f.zero for t in range(ext_space.K_mod.dim))
        a_part = cocycle.apply(e)
        f_part = ext_space.K_incl.apply(e)
        vec = inj_f.apply(f_part)
        neg = inj_a.apply(tuple(f.neg(x) for x in a_part))
        graph_cols.append(tuple(f.add(u, v) for u, v in zip(vec, neg)))
    graph = submodule_from_spanning(D, graph_cols)
    B, proj_b = quotient_module(D, graph)

    iota = proj_b.compose(inj_a)
    # the cover surjection kills the graph, so it descends to B
    to_c = cov.epi.compose(proj_f)
    for v in graph.basis_matrix:
        if any(x != f.zero for x in to_c.apply(v)):
            raise NotEquivariant("cocycle does not descend")
    pivset = set(graph.pivots)
    free_cols = [j for j in range(D.dim) if j not in pivset]
    sect = tuple(
        tuple(f.one if free_cols[a] == i else f.zero for a in range(B.dim))
        for i in range(D.dim)
    )
    pi = ModuleMap(B, C, linalg.mat_mul(to_c.matrix, sect, f), check=False)

    if not iota.is_injective():
        raise MatlisLabError("extension inclusion not injective")
    if not pi.is_surjective():
        raise MatlisLabError("extension projection not surjective")
    if iota.image() != pi.kernel():
        raise MatlisLabError("extension fails exactness in the middle")
    if B.dim != A.dim + C.dim:
        raise MatlisLabError("extension length mismatch")
    return B, iota, pi


class SearchVerdict:
    """Outcome of the extension-closure search."""

    CLOSED_TRIVIALLY = "ClosedTrivially"
    WITNESS = "Witness"
    EXHAUSTED = "SearchExhausted"

    def __init__(self, kind, mode, a=None, b=None, c=None, iota=None, pi=None, tested=0):
        self.kind = kind
        self.mode = mode
        self.a = a
        self.b = b
        self.c = c
        self.iota = iota
        self.pi = pi
        self.tested = tested

    def __repr__(self):
        return "SearchVerdict(%s, mode=%s, tested=%d)" % (self.kind, self.mode, self.tested)


def _member_pool(ctx, rng, mode):
    """Deterministic pool of class members to draw extension ends from.

    P mode: quotients of I^j (j <= 2) by random submodules, plus the
    residue field when it is I-generated.  S mode: the Matlis duals.
    """
    from .modules import residue_field_module

    pool = []
    for j in (1, 2):
        Ij, _ = direct_power(ctx.I_mod, j)
        pool.append(Ij)
        for _ in range(3):
            U = random_submodule(Ij, rng)
            if 0 < U.dim:
                Q, _ = quotient_module(Ij, U)
                if Q.dim > 0:
                    pool.append(Q)
    k = residue_field_module(ctx.algebra)
    if is_p_member(ctx, k):
        pool.append(k)
    # de-duplicate structurally, keep first occurrences
    seen = []
    uniq = []
    for M in pool:
        if M not in seen:
            seen.append(M)
            uniq.append(M)
    if mode == "S":
        return [matlis_dual(M) for M in uniq]
    return uniq


def _cocycle_candidates(ext_space, rng, f):
    """Representative basis plus scalar combinations, deterministically."""
    reps = ext_space.representatives
    if not reps:
        return
    for h in reps:
        yield h
    if len(reps) < 2:
        return
    p = getattr(f, "p", None)
    if p is not None and p <= 5 and p ** len(reps) <= 3125:
        for idx in range(1, p ** len(reps)):
            coeffs = []
            t = idx
            for _ in range(len(reps)):
                coeffs.append(t % p)
                t //= p
            yield _combine_cocycles(ext_space, coeffs, f)
    else:
        for _ in range(100):
            coeffs = [f.of(rng.randint(5) - 2) for _ in range(len(reps))]
            if any(c != f.zero for c in coeffs):
                yield _combine_cocycles(ext_space, coeffs, f)


def _combine_cocycles(ext_space, coeffs, f):
    mat = linalg.zeros(ext_space.A.dim, ext_space.K_mod.dim, f)
    for c, h in zip(coeffs, ext_space.representatives):
        if c != f.zero:
            mat = linalg.mat_add(mat, linalg.mat_scale(c, h.matrix, f), f)
    return ModuleMap(ext_space.K_mod, ext_space.A, mat, check=False)


def satz25_search(ctx, budget=500, mode="P", seed=0):
    """Search for an extension of class members that leaves the class.

    Trivial cases (I = 0 or I isomorphic to R) are closed; otherwise the
    theory guarantees a witness exists over the ring, but the bounded
    search may still come back SearchExhausted.
    """
    if ctx.I.dim == 0 or is_iso_to_regular(ctx.I):
        return SearchVerdict(SearchVerdict.CLOSED_TRIVIALLY, mode)
    f = ctx.algebra.field
    rng = Lcg(seed)
    pool = _member_pool(ctx, rng, mode)
    member = is_p_member if mode == "P" else is_s_member
    tested = 0
    for C in pool:
        cov = free_cover(C)
        for A in pool:
            ext_space = ext1(C, A, cover=cov)
            if ext_space.dim == 0:
                continue
            for cocycle in _cocycle_candidates(ext_space, rng, f):
                if tested >= budget:
                    return SearchVerdict(SearchVerdict.EXHAUSTED, mode, tested=tested)
                B, iota, pi = extension_from_class(ext_space, cocycle)
                tested += 1
                if not member(ctx, B):
                    return SearchVerdict(
                        SearchVerdict.WITNESS, mode, a=A, b=B, c=C,
                        iota=iota, pi=pi, tested=tested,
                    )
    return SearchVerdict(SearchVerdict.EXHAUSTED, mode, tested=tested)
