"""Finite-length modules and the submodule calculus.

An FModule is a finite-dimensional k-space with one action matrix per
algebra basis element (column-vector convention: f(v) = F.v).  Length
equals k-dimension here: the relations of every algebra have degree
>= 1, so the unique simple module is the residue field k itself.

Submodules are canonical reduced-echelon subspaces closed under the
action; equality of submodules is representation equality.
"""

from . import linalg
from .algebra import Ideal, ideal_product
from .errors import (
    NotASubmodule,
    NotEquivariant,
    NotUniserial,
    ParentMismatch,
)


class FModule:
    """A finite-length module over an Artinian local algebra."""

    def __init__(self, parent, actions, check=True):
        self.parent = parent
        self.actions = tuple(tuple(tuple(r) for r in a) for a in actions)
        self.dim = len(self.actions[0]) if self.actions and self.actions[0] else 0
        if len(self.actions) != parent.dim:
            raise NotASubmodule(
                "need one action matrix per algebra basis element"
            )
        if check:
            self._check_representation()

    def _check_representation(self):
        A = self.parent
        f = A.field
        n = self.dim
        ident = linalg.identity(n, f)
        if self.actions[0] != ident:
            raise NotASubmodule("action of 1 is not the identity")
        for i in range(A.dim):
            for j in range(A.dim):
                prod = linalg.mat_mul(self.actions[i], self.actions[j], f)
                expect = linalg.zeros(n, n, f)
                for k, c in enumerate(A.mult_table[i][j]):
                    if c != f.zero:
                        expect = linalg.mat_add(
                            expect, linalg.mat_scale(c, self.actions[k], f), f
                        )
                if prod != expect:
                    raise NotASubmodule("representation law fails at (%d, %d)" % (i, j))

    def action_of(self, u):
        """Action matrix of an arbitrary ring element (coordinate vector)."""
        f = self.parent.field
        out = linalg.zeros(self.dim, self.dim, f)
        for i, c in enumerate(u):
            if c != f.zero:
                out = linalg.mat_add(out, linalg.mat_scale(c, self.actions[i], f), f)
        return out

    def generator_actions(self):
        """Action matrices of the algebra variables; they generate with 1."""
        return [self.action_of(v) for v in self.parent.var_elements]

    def zero_vector(self):
        return tuple(self.parent.field.zero for _ in range(self.dim))

    def full_submodule(self):
        f = self.parent.field
        return Submodule(self, linalg.identity(self.dim, f), tuple(range(self.dim)))

    def zero_submodule(self):
        return Submodule(self, (), ())

    def __eq__(self, other):
        return (
            isinstance(other, FModule)
            and self.parent is other.parent
            and self.actions == other.actions
        )

    def __hash__(self):
        return hash((id(self.parent), self.actions))

    def __repr__(self):
        return "FModule(dim=%d over %r)" % (self.dim, self.parent)


class Submodule:
    """An action-closed subspace in canonical reduced-echelon form."""

    def __init__(self, ambient, basis_matrix, pivots):
        self.ambient = ambient
        self.basis_matrix = tuple(tuple(r) for r in basis_matrix)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis_matrix)

    def is_zero(self):
        return self.dim == 0

    def is_full(self):
        return self.dim == self.ambient.dim

    def contains(self, vec):
        return linalg.in_row_space(
            self.basis_matrix, self.pivots, vec, self.ambient.parent.field
        )

    def contains_submodule(self, other):
        return all(self.contains(r) for r in other.basis_matrix)

    def coords(self, vec):
        """Coordinates of a member vector over the echelon basis."""
        return tuple(vec[p] for p in self.pivots)

    def __eq__(self, other):
        return (
            isinstance(other, Submodule)
            and self.ambient == other.ambient
            and self.basis_matrix == other.basis_matrix
        )

    def __hash__(self):
        return hash(self.basis_matrix)

    def __repr__(self):
        return "Submodule(dim=%d of %r)" % (self.dim, self.ambient)


class ModuleMap:
    """An equivariant linear map between modules over the same algebra."""

    def __init__(self, source, target, matrix, check=True):
        self.source = source
        self.target = target
        self.matrix = tuple(tuple(r) for r in matrix)
        if check:
            self._check_equivariance()

    def _check_equivariance(self):
        if self.source.parent is not self.target.parent:
            raise ParentMismatch("map across different algebras")
        f = self.source.parent.field
        for ga, gb in zip(self.source.generator_actions(), self.target.generator_actions()):
            left = linalg.mat_mul(self.matrix, ga, f)
            right = linalg.mat_mul(gb, self.matrix, f)
            if left != right:
                raise NotEquivariant("map is not equivariant")

    def apply(self, vec):
        return linalg.mat_vec(self.matrix, vec, self.source.parent.field)

    def compose(self, other):
        """self after other (source of self = target of other)."""
        f = self.source.parent.field
        return ModuleMap(
            other.source,
            self.target,
            linalg.mat_mul(self.matrix, other.matrix, f),
            check=False,
        )

    def rank(self):
        return linalg.rank(self.matrix, self.source.parent.field)

    def is_injective(self):
        return self.rank() == self.source.dim

    def is_surjective(self):
        return self.rank() == self.target.dim

    def is_zero(self):
        return linalg.is_zero_matrix(self.matrix, self.source.parent.field)

    def image(self):
        return submodule_from_spanning(self.target, linalg.transpose(self.matrix))

    def kernel(self):
        f = self.source.parent.field
        vecs = linalg.nullspace(self.matrix, f) if self.matrix and self.matrix[0] else ()
        if not self.matrix:
            vecs = linalg.identity(self.source.dim, f)
        return submodule_from_spanning(self.source, vecs)

    def __repr__(self):
        return "ModuleMap(%d -> %d)" % (self.source.dim, self.target.dim)


class HomSpace:
    """A deterministic basis of all equivariant maps M -> N."""

    def __init__(self, source, target, basis):
        self.source = source
        self.target = target
        self.basis = tuple(basis)

    @property
    def dim(self):
        return len(self.basis)

    def __repr__(self):
        return "HomSpace(dim=%d)" % self.dim


def submodule_from_spanning(M, vectors):
    """Canonicalize a spanning set; the caller guarantees action closure."""
    red, pivots = linalg.rref(list(vectors), M.parent.field) if vectors else ((), ())
    return Submodule(M, red, pivots)


def generated_submodule(M, vectors):
    """Smallest submodule containing the given vectors.

    One pass over all basis-element actions suffices, as for ideals.
    """
    rows = []
    for v in vectors:
        for a in M.actions:
            rows.append(linalg.mat_vec(a, v, M.parent.field))
    return submodule_from_spanning(M, rows)


def regular_module(A):
    """R as a module over itself: actions are left multiplication."""
    return FModule(A, A.left_mult, check=False)


def residue_field_module(A):
    """The unique simple module k = R/m."""
    f = A.field
    one = ((f.one,),)
    zero = ((f.zero,),)
    return FModule(A, [one] + [zero] * (A.dim - 1), check=False)


def zero_module(A):
    return FModule(A, [() for _ in range(A.dim)], check=False)


def _require_same_parent(a, b):
    if a.parent is not b.parent:
        raise ParentMismatch("operands live over different algebras")


def ideal_times_module(I, M):
    """The submodule I*M."""
    if I.parent is not M.parent:
        raise ParentMismatch("ideal and module over different algebras")
    f = M.parent.field
    from .algebra import minimal_generators

    rows = []
    for g in minimal_generators(I):
        act = M.action_of(g)
        for j in range(M.dim):
            rows.append(tuple(act[i][j] for i in range(M.dim)))
    sub = submodule_from_spanning(M, rows)
    # I*M is action closed, but the generator images alone are not:
    # close up under the action
    return generated_submodule(M, sub.basis_matrix)


def annihilator_submodule(M, a):
    """M[a] = {v in M | a v = 0}."""
    if a.parent is not M.parent:
        raise ParentMismatch("ideal and module over different algebras")
    from .algebra import minimal_generators

    gens = minimal_generators(a)
    if not gens:
        return M.full_submodule()
    f = M.parent.field
    stacked = linalg.stack(*[M.action_of(g) for g in gens])
    return submodule_from_spanning(M, linalg.nullspace(stacked, f))


def colon_submodule(N, I, M):
    """(N :_M I) = {v | g v in N for every generator g of I}."""
    if N.ambient != M:
        raise NotASubmodule("colon needs N to be a submodule of M")
    from .algebra import minimal_generators

    f = M.parent.field
    gens = minimal_generators(I)
    if not gens:
        return M.full_submodule()
    funcs = linalg.vanishing_functionals(N.basis_matrix, M.dim, f)
    rows = []
    for g in gens:
        act = M.action_of(g)
        for phi in funcs:
            rows.append(linalg.mat_vec(linalg.transpose(act), phi, f))
    if not rows:
        return M.full_submodule()
    return submodule_from_spanning(M, linalg.nullspace(rows, f))


def ann_ring(M):
    """Ann_R(M) = {r | r acts as zero}, as an Ideal."""
    A = M.parent
    f = A.field
    if M.dim == 0:
        from .algebra import unit_ideal

        return unit_ideal(A)
    rows = []
    for s in range(M.dim):
        for t in range(M.dim):
            rows.append(tuple(M.actions[i][s][t] for i in range(A.dim)))
    sols = linalg.nullspace(rows, f)
    red, pivots = linalg.rref(list(sols), f) if sols else ((), ())
    return Ideal(A, red, pivots)


def hom_space(M, N):
    """All equivariant maps M -> N, solved from the equivariance system.

    Equivariance against the algebra variables suffices since they
    generate the algebra together with 1.
    """
    _require_same_parent(M, N)
    f = M.parent.field
    dm, dn = M.dim, N.dim
    if dm == 0 or dn == 0:
        return HomSpace(M, N, ())
    rows = []
    for ga, gb in zip(M.generator_actions(), N.generator_actions()):
        # X ga - gb X = 0, unknowns X[a][j] vectorized row-major
        for a in range(dn):
            for c in range(dm):
                row = [f.zero] * (dn * dm)
                for j in range(dm):
                    row[a * dm + j] = f.add(row[a * dm + j], ga[j][c])
                for i in range(dn):
                    row[i * dm + c] = f.sub(row[i * dm + c], gb[a][i])
                rows.append(tuple(row))
    sols = linalg.nullspace(rows, f)
    basis = []
    for s in sols:
        mat = tuple(tuple(s[a * dm + j] for j in range(dm)) for a in range(dn))
        basis.append(ModuleMap(M, N, mat, check=False))
    return HomSpace(M, N, basis)


def quotient_module(M, U):
    """M/U with the canonical projection.

    Quotient coordinates are the non-pivot columns of U's echelon basis.
    """
    if U.ambient != M:
        raise NotASubmodule("quotient by a non-submodule")
    f = M.parent.field
    pivset = set(U.pivots)
    free = [j for j in range(M.dim) if j not in pivset]
    qdim = len(free)
    # projection: v -> normal form of v modulo U, restricted to free columns
    reduced = []
    for j in range(M.dim):
        e = tuple(f.one if t == j else f.zero for t in range(M.dim))
        reduced.append(linalg.reduce_vector(U.basis_matrix, U.pivots, e, f))
    proj = tuple(
        tuple(reduced[j][free[a]] for j in range(M.dim)) for a in range(qdim)
    )
    # section: quotient coordinate a -> unit vector at free column a
    sect = tuple(
        tuple(f.one if free[a] == i else f.zero for a in range(qdim))
        for i in range(M.dim)
    )
    actions = []
    for act in M.actions:
        actions.append(linalg.mat_mul(proj, linalg.mat_mul(act, sect, f), f))
    Q = FModule(M.parent, actions, check=False)
    return Q, ModuleMap(M, Q, proj, check=False)


def direct_sum(M, N):
    """Block-diagonal sum with injections and projections."""
    _require_same_parent(M, N)
    f = M.parent.field
    dm, dn = M.dim, N.dim
    actions = []
    for am, an in zip(M.actions, N.actions):
        rows = []
        for i in range(dm):
            rows.append(tuple(am[i]) + tuple(f.zero for _ in range(dn)))
        for i in range(dn):
            rows.append(tuple(f.zero for _ in range(dm)) + tuple(an[i]))
        actions.append(tuple(rows))
    S = FModule(M.parent, actions, check=False)
    inj_m = ModuleMap(
        M,
        S,
        tuple(
            tuple(f.one if i == j else f.zero for j in range(dm))
            for i in range(dm + dn)
        ),
        check=False,
    )
    inj_n = ModuleMap(
        N,
        S,
        tuple(
            tuple(f.one if i - dm == j else f.zero for j in range(dn))
            for i in range(dm + dn)
        ),
        check=False,
    )
    proj_m = ModuleMap(
        S,
        M,
        tuple(
            tuple(f.one if i == j else f.zero for j in range(dm + dn))
            for i in range(dm)
        ),
        check=False,
    )
    proj_n = ModuleMap(
        S,
        N,
        tuple(
            tuple(f.one if j - dm == i else f.zero for j in range(dm + dn))
            for i in range(dn)
        ),
        check=False,
    )
    return S, (inj_m, inj_n), (proj_m, proj_n)


def direct_power(M, j):
    """M^j with injection maps."""
    if j == 0:
        return zero_module(M.parent), []
    S = M
    injs = [ModuleMap(M, M, linalg.identity(M.dim, M.parent.field), check=False)]
    for _ in range(j - 1):
        S2, (ia, ib), _ = direct_sum(S, M)
        injs = [ia.compose(e) for e in injs] + [ib]
        S = S2
    return S, injs


def socle(M):
    """M[m], the largest semisimple submodule."""
    return annihilator_submodule(M, M.parent.max_ideal)


def radical(M):
    """m*M, the intersection of the maximal submodules."""
    return ideal_times_module(M.parent.max_ideal, M)


def is_essential(U, M):
    """At finite length over a local algebra: U contains the socle.

    Every nonzero submodule contains a simple submodule, and all simples
    sit inside the socle, so meeting every nonzero submodule is
    equivalent to containing socle(M).
    """
    if U.ambient != M:
        raise NotASubmodule("essential test needs a submodule of M")
    return U.contains_submodule(socle(M))


def is_small(U, M):
    """At finite length over a local ring: U lies inside the radical.

    The radical is the unique maximal submodule's intersection; U + V = M
    with V proper would force U to cover the top, i.e. escape m*M.
    """
    if U.ambient != M:
        raise NotASubmodule("small test needs a submodule of M")
    return radical(M).contains_submodule(U)


def submodule_sum(U, V):
    if U.ambient != V.ambient:
        raise NotASubmodule("sum of submodules of different modules")
    return submodule_from_spanning(
        U.ambient, list(U.basis_matrix) + list(V.basis_matrix)
    )


def submodule_intersection(U, V):
    if U.ambient != V.ambient:
        raise NotASubmodule("intersection of submodules of different modules")
    M = U.ambient
    f = M.parent.field
    fu = linalg.vanishing_functionals(U.basis_matrix, M.dim, f)
    fv = linalg.vanishing_functionals(V.basis_matrix, M.dim, f)
    rows = list(fu) + list(fv)
    if not rows:
        return M.full_submodule()
    return submodule_from_spanning(M, linalg.nullspace(rows, f))


def uniserial_chain(M):
    """The radical chain M = M_0 > M_1 > ... > M_n = 0, all layers simple.

    A finite-length module over a local algebra is uniserial exactly when
    every radical layer m^i M / m^(i+1) M is one-dimensional: then every
    submodule is some m^i M, since a submodule not inside m^(i+1)M
    generates M_i by Nakayama.
    """
    chain = [M.full_submodule()]
    current = M
    current_sub = chain[0]
    while current_sub.dim > 0:
        nxt = _radical_of_submodule(M, current_sub)
        if current_sub.dim - nxt.dim != 1:
            raise NotUniserial(
                "layer of dimension %d" % (current_sub.dim - nxt.dim)
            )
        chain.append(nxt)
        current_sub = nxt
    return chain


def _radical_of_submodule(M, U):
    """m * U inside the ambient M."""
    from .algebra import minimal_generators

    rows = []
    for g in minimal_generators(M.parent.max_ideal):
        act = M.action_of(g)
        for v in U.basis_matrix:
            rows.append(linalg.mat_vec(act, v, M.parent.field))
    return generated_submodule(M, rows)


def submodule_as_module(U):
    """The submodule as an FModule of its own, with the inclusion map.

    Coordinates are read off the pivot columns of the echelon basis.
    """
    M = U.ambient
    f = M.parent.field
    k = U.dim
    incl = linalg.transpose(U.basis_matrix)  # M.dim x k
    actions = []
    for act in M.actions:
        rows = []
        for p in U.pivots:
            rows.append(
                tuple(
                    linalg.mat_vec(act, U.basis_matrix[j], f)[p] for j in range(k)
                )
            )
        actions.append(tuple(rows))
    Umod = FModule(M.parent, actions, check=False)
    return Umod, ModuleMap(Umod, M, incl, check=False)


def cokernel_of_presentation(A, rank, columns):
    """The module R^rank / (columns), columns being vectors of R^rank.

    This is the cokernel of a presentation matrix over R.
    """
    R = regular_module(A)
    free, _ = direct_power(R, rank)
    if columns:
        sub = generated_submodule(free, [tuple(c) for c in columns])
    else:
        sub = free.zero_submodule()
    Q, proj = quotient_module(free, sub)
    return Q, free, sub, proj
