"""Artinian local k-algebras from polynomial presentations.

An algebra is built from relations inside the finite-dimensional
truncation spanned by the monomials of total degree below the certified
nilpotency bound; no Groebner machinery is involved.  Elements are
coordinate tuples over the canonical monomial basis (graded-lex, 1
first).  Ideals are canonical reduced-echelon subspaces of the regular
module, closed under multiplication.
"""

from itertools import combinations

from . import linalg
from .errors import (
    BoundNotCertified,
    DimensionMismatch,
    InconsistentPresentation,
    FixtureValidationError,
    NotLocal,
    ParentMismatch,
)


def glex_key(exps):
    """Sort key realizing graded-lex order with x_1 > x_2 > ..."""
    return (sum(exps), exps)


def monomials_up_to(nvars, maxdeg):
    """All exponent tuples of total degree <= maxdeg, ascending graded-lex."""
    out = []

    def rec(prefix, remaining, budget):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for e in range(budget + 1):
            rec(prefix + [e], remaining - 1, budget - e)

    rec([], nvars, maxdeg)
    out.sort(key=glex_key)
    return out


class Presentation:
    """A quotient presentation k[x_1..x_n] / (relations), truncated at m^N.

    relations: list of polynomials, each a list of (coeff, exps) terms
    with every term of total degree >= 1.
    """

    def __init__(self, field, variables, relations, nilpotency):
        if not variables:
            raise FixtureValidationError("need at least one variable")
        if len(set(variables)) != len(variables):
            raise FixtureValidationError("duplicate variable names")
        if nilpotency < 1:
            raise FixtureValidationError("nilpotency bound must be >= 1")
        nvars = len(variables)
        for rel in relations:
            for coeff, exps in rel:
                if len(exps) != nvars:
                    raise FixtureValidationError(
                        "exponent tuple %r does not match %d variables" % (exps, nvars)
                    )
                if any(e < 0 for e in exps):
                    raise FixtureValidationError("negative exponent in %r" % (exps,))
                if sum(exps) < 1 and coeff != field.zero:
                    raise FixtureValidationError(
                        "relation term of degree 0: residue field would shrink"
                    )
        self.field = field
        self.variables = list(variables)
        self.relations = [list(rel) for rel in relations]
        self.nilpotency = nilpotency


class Algebra:
    """An Artinian local k-algebra on a canonical monomial basis.

    Built by :func:`build_algebra`; immutable afterwards.
    """

    def __init__(self, field, variables, bound, basis, mult_table, var_elements):
        self.field = field
        self.variables = list(variables)
        self.bound = bound
        self.basis = tuple(basis)  # exponent tuples, ascending graded-lex
        self.dim = len(basis)
        self.mult_table = mult_table  # mult_table[i][j] = coords of b_i * b_j
        self.var_elements = tuple(var_elements)  # coords of each variable
        # left multiplication by b_i as a matrix (columns are b_i * b_j)
        self.left_mult = tuple(
            tuple(
                tuple(mult_table[i][j][r] for j in range(self.dim))
                for r in range(self.dim)
            )
            for i in range(self.dim)
        )
        self.max_ideal = Ideal(
            self,
            tuple(_unit_vector(self.dim, i, field) for i in range(1, self.dim)),
            tuple(range(1, self.dim)),
        )
        self._monomial_nf = {}

    def zero(self):
        return tuple(self.field.zero for _ in range(self.dim))

    def one(self):
        return _unit_vector(self.dim, 0, self.field)

    def element_action(self, u):
        """Matrix of multiplication by the element u on the regular module."""
        rows = []
        for r in range(self.dim):
            rows.append(
                tuple(
                    _dot_coeff(self, u, j, r)
                    for j in range(self.dim)
                )
            )
        return tuple(rows)

    def multiply(self, u, v):
        if len(u) != self.dim or len(v) != self.dim:
            raise DimensionMismatch(
                "elements of length %d/%d over algebra of dim %d"
                % (len(u), len(v), self.dim)
            )
        f = self.field
        out = [f.zero] * self.dim
        for i, ui in enumerate(u):
            if ui == f.zero:
                continue
            for j, vj in enumerate(v):
                if vj == f.zero:
                    continue
                c = f.mul(ui, vj)
                tij = self.mult_table[i][j]
                for r in range(self.dim):
                    if tij[r] != f.zero:
                        out[r] = f.add(out[r], f.mul(c, tij[r]))
        return tuple(out)

    def is_nilpotent(self, u):
        w = u
        for _ in range(self.bound + 1):
            if all(x == self.field.zero for x in w):
                return True
            w = self.multiply(w, u)
        return all(x == self.field.zero for x in w)

    def element_from_terms(self, terms):
        """Build an element from (coeff, exponent-tuple) terms."""
        f = self.field
        out = [f.zero] * self.dim
        for coeff, exps in terms:
            nf = self._monomial_nf.get(tuple(exps))
            if nf is None:
                nf = self._reduce_monomial(tuple(exps))
            for r in range(self.dim):
                if nf[r] != f.zero:
                    out[r] = f.add(out[r], f.mul(coeff, nf[r]))
        return tuple(out)

    def _reduce_monomial(self, exps):
        """Normal form of an arbitrary monomial, via repeated variable action."""
        if len(exps) != len(self.variables):
            raise DimensionMismatch("exponent tuple %r" % (exps,))
        w = self.one()
        for vi, e in enumerate(exps):
            for _ in range(e):
                w = self.multiply(self.var_elements[vi], w)
        return w

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    def __repr__(self):
        return "Algebra(%s, dim=%d, vars=%s)" % (
            self.field.name,
            self.dim,
            ",".join(self.variables),
        )


def _dot_coeff(A, u, j, r):
    f = A.field
    s = f.zero
    for i, ui in enumerate(u):
        if ui != f.zero:
            t = A.mult_table[i][j][r]
            if t != f.zero:
                s = f.add(s, f.mul(ui, t))
    return s


def _unit_vector(n, i, field):
    return tuple(field.one if j == i else field.zero for j in range(n))


def build_algebra(pres):
    """Construct and validate the algebra of a presentation.

    The reduction space is the span of all monomial multiples of the
    relations inside the degree <= N truncation.  The bound is certified
    by checking that every degree-N monomial reduces to zero.
    """
    f = pres.field
    n = len(pres.variables)
    N = pres.nilpotency
    mons = monomials_up_to(n, N)
    # columns ordered by descending graded-lex so pivots are leading terms
    cols = sorted(mons, key=glex_key, reverse=True)
    col_of = {m: i for i, m in enumerate(cols)}
    ncols = len(cols)

    rows = []
    for rel in pres.relations:
        if all(c == f.zero for c, _ in rel):
            continue
        for m in mons:
            if sum(m) > N - 1:
                continue
            row = [f.zero] * ncols
            nonzero = False
            for coeff, exps in rel:
                prod = tuple(a + b for a, b in zip(m, exps))
                if sum(prod) <= N and coeff != f.zero:
                    c = col_of[prod]
                    row[c] = f.add(row[c], coeff)
                    nonzero = True
            if nonzero and any(x != f.zero for x in row):
                rows.append(tuple(row))

    if rows:
        red, pivots = linalg.rref(rows, f)
    else:
        red, pivots = (), ()

    def normal_form_cols(exps):
        vec = [f.zero] * ncols
        vec[col_of[exps]] = f.one
        return linalg.reduce_vector(red, pivots, vec, f)

    one_mon = tuple(0 for _ in range(n))
    if all(x == f.zero for x in normal_form_cols(one_mon)):
        raise InconsistentPresentation("1 reduces to 0 in the presentation")

    for m in mons:
        if sum(m) == N:
            if any(x != f.zero for x in normal_form_cols(m)):
                raise BoundNotCertified(
                    "degree-%d monomial %r does not reduce to 0" % (N, m)
                )

    pivset = set(pivots)
    basis = sorted(
        (m for i, m in enumerate(cols) if i not in pivset and sum(m) < N),
        key=glex_key,
    )
    basis_index = {m: i for i, m in enumerate(basis)}
    dim = len(basis)

    def nf_coords(exps):
        """Normal form of a monomial as coordinates over the basis."""
        if sum(exps) >= N:
            return tuple(f.zero for _ in range(dim))
        v = normal_form_cols(exps)
        out = [f.zero] * dim
        for ci, x in enumerate(v):
            if x != f.zero:
                out[basis_index[cols[ci]]] = x
        return tuple(out)

    mult_table = tuple(
        tuple(
            nf_coords(tuple(a + b for a, b in zip(basis[i], basis[j])))
            for j in range(dim)
        )
        for i in range(dim)
    )
    var_elements = []
    for vi in range(n):
        e = tuple(1 if k == vi else 0 for k in range(n))
        var_elements.append(nf_coords(e))

    A = Algebra(f, pres.variables, N, basis, mult_table, var_elements)
    A._monomial_nf = {m: nf_coords(m) for m in mons}
    _validate_algebra(A)
    return A


def _validate_algebra(A):
    f = A.field
    dim = A.dim
    one = A.one()
    for j in range(dim):
        ej = _unit_vector(dim, j, f)
        if A.multiply(one, ej) != ej or A.multiply(ej, one) != ej:
            raise InconsistentPresentation("basis element 1 is not a unit")
    for i in range(dim):
        for j in range(i + 1, dim):
            if A.mult_table[i][j] != A.mult_table[j][i]:
                raise InconsistentPresentation("multiplication not commutative")
    for i in range(dim):
        for j in range(dim):
            for k in range(dim):
                left = A.multiply(A.mult_table[i][j], _unit_vector(dim, k, f))
                right = A.multiply(_unit_vector(dim, i, f), A.mult_table[j][k])
                if left != right:
                    raise InconsistentPresentation("multiplication not associative")
    # local ring certificate: every basis element except 1 is nilpotent,
    # so c*1 + nilpotent is invertible whenever c != 0
    for i in range(1, dim):
        if not A.is_nilpotent(_unit_vector(dim, i, f)):
            raise NotLocal("basis element %d is not nilpotent" % i)
    # maxIdeal^N = 0 for the certified bound
    mpow = A.max_ideal
    for _ in range(A.bound - 1):
        if mpow.dim == 0:
            break
        mpow = ideal_product(mpow, A.max_ideal)
    if mpow.dim != 0 and ideal_product(mpow, A.max_ideal).dim != 0:
        raise BoundNotCertified("maximal ideal not nilpotent at the certified bound")


class Ideal:
    """A canonical subspace of the regular module, closed under the action."""

    def __init__(self, parent, basis_matrix, pivots):
        self.parent = parent
        self.basis_matrix = tuple(tuple(r) for r in basis_matrix)
        self.pivots = tuple(pivots)

    @property
    def dim(self):
        return len(self.basis_matrix)

    def is_zero(self):
        return self.dim == 0

    def is_whole_ring(self):
        return self.dim == self.parent.dim

    def contains(self, vec):
        return linalg.in_row_space(
            self.basis_matrix, self.pivots, vec, self.parent.field
        )

    def contains_ideal(self, other):
        return all(self.contains(r) for r in other.basis_matrix)

    def __eq__(self, other):
        return (
            isinstance(other, Ideal)
            and self.parent is other.parent
            and self.basis_matrix == other.basis_matrix
        )

    def __hash__(self):
        return hash((id(self.parent), self.basis_matrix))

    def __repr__(self):
        return "Ideal(dim=%d of %r)" % (self.dim, self.parent)


def _ideal_from_rows(A, rows):
    red, pivots = linalg.rref(rows, A.field) if rows else ((), ())
    return Ideal(A, red, pivots)


def zero_ideal(A):
    return Ideal(A, (), ())


def unit_ideal(A):
    return Ideal(
        A,
        linalg.identity(A.dim, A.field),
        tuple(range(A.dim)),
    )


def ideal_from_generators(A, gens):
    """Smallest ideal containing the given elements, canonical basis.

    The span of {b_i * g} over all basis elements b_i already equals the
    ideal R*gens, so one multiplication pass suffices.
    """
    rows = []
    for g in gens:
        if len(g) != A.dim:
            raise DimensionMismatch("generator of length %d" % len(g))
        for i in range(A.dim):
            rows.append(linalg.mat_vec(A.left_mult[i], g, A.field))
    return _ideal_from_rows(A, rows)


def ideal_product(I, J):
    if I.parent is not J.parent:
        raise ParentMismatch("ideal product across different algebras")
    A = I.parent
    rows = [
        A.multiply(u, v) for u in I.basis_matrix for v in J.basis_matrix
    ]
    return _ideal_from_rows(A, rows)


def ideal_sum(I, J):
    if I.parent is not J.parent:
        raise ParentMismatch("ideal sum across different algebras")
    return _ideal_from_rows(I.parent, list(I.basis_matrix) + list(J.basis_matrix))


def annihilator_of_ideal(I):
    """{r in R | r * I = 0}; applying twice yields the double annihilator."""
    A = I.parent
    f = A.field
    if I.dim == 0:
        return unit_ideal(A)
    rows = []
    # unknown r: for each generator g, the equation r * g = 0,
    # one row per coordinate of the product
    for g in I.basis_matrix:
        cols = [linalg.mat_vec(A.left_mult[i], g, f) for i in range(A.dim)]
        for r_idx in range(A.dim):
            rows.append(tuple(cols[i][r_idx] for i in range(A.dim)))
    sols = linalg.nullspace(rows, f)
    return _ideal_from_rows(A, list(sols))


def minimal_generators(I):
    """A minimal generating set: basis rows independent modulo m*I."""
    A = I.parent
    if I.dim == 0:
        return ()
    mI = ideal_product(A.max_ideal, I)
    chosen = []
    current = list(mI.basis_matrix)
    rk = linalg.rank(current, A.field) if current else 0
    for row in I.basis_matrix:
        cand = current + [row]
        r2 = linalg.rank(cand, A.field)
        if r2 > rk:
            chosen.append(row)
            current = cand
            rk = r2
        if rk == I.dim:
            break
    return tuple(chosen)


def is_iso_to_regular(I):
    """True iff I is isomorphic to the regular module.

    Over an Artinian local algebra this needs a single generator with
    zero annihilator; the candidate set is the reduced basis of I plus
    sums of up to three distinct basis elements (over F_p with a small
    state space, every element of I).
    """
    A = I.parent
    f = A.field
    if I.dim == 0:
        return False
    mI = ideal_product(A.max_ideal, I)
    if I.dim - mI.dim != 1:
        # not cyclic, hence not isomorphic to R (and I=R is cyclic)
        return False
    candidates = list(I.basis_matrix)
    if f.char and f.char ** I.dim <= 4096:
        candidates = list(_all_nonzero_elements(I))
    else:
        for k in (2, 3):
            for combo in combinations(range(I.dim), k):
                v = [f.zero] * A.dim
                for c in combo:
                    row = I.basis_matrix[c]
                    v = [f.add(a, b) for a, b in zip(v, row)]
                candidates.append(tuple(v))
    for g in candidates:
        gen_rows = [linalg.mat_vec(A.left_mult[i], g, f) for i in range(A.dim)]
        if linalg.rank(gen_rows, f) != I.dim:
            continue
        ann_rows = []
        cols = gen_rows  # cols[i] = b_i * g
        for r_idx in range(A.dim):
            ann_rows.append(tuple(cols[i][r_idx] for i in range(A.dim)))
        if not linalg.nullspace(ann_rows, f):
            return True
    return False


def _all_nonzero_elements(I):
    A = I.parent
    f = A.field
    p = f.char
    k = I.dim
    for idx in range(1, p**k):
        coeffs = []
        t = idx
        for _ in range(k):
            coeffs.append(t % p)
            t //= p
        v = [f.zero] * A.dim
        for c, row in zip(coeffs, I.basis_matrix):
            if c:
                for j in range(A.dim):
                    v[j] = f.add(v[j], f.mul(c, row[j]))
        yield tuple(v)
