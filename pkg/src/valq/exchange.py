"""Seed data for quantum cluster algebras of valued quivers.

An ``ExchangeData`` bundles the framed exchange matrix (the n mutable
rows stacked over n frozen rows), the minimal positive symmetrizer of
its principal part, and a compatible skew form on the rank-2n lattice.
Mutation acts on the whole bundle and preserves compatibility.

Sign conventions.  The principal part B is skew-symmetrizable with
positive diagonal D: d_i * b_ij = -d_j * b_ji.  The valued quiver has
an arrow i -> j exactly when b_ij < 0, so sinks k have row k of B
nonnegative and columns nonpositive.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import matrices as mx


class NotSkewSymmetrizable(ValueError):
    """No positive diagonal matrix symmetrizes the given matrix."""


class NotAcyclic(ValueError):
    """The quiver of the principal part has a directed cycle."""


class BadSymmetrizer(ValueError):
    """A supplied symmetrizer is not positive or does not symmetrize."""


class Lambda0NotSkew(ValueError):
    """The supplied base form on the mutable sublattice is not skew."""


class IndexOutOfRange(IndexError):
    """A mutation or reflection index is outside the mutable range."""


class IncompatiblePair(ValueError):
    """The framed matrix and skew form fail the compatibility identity."""


def minimal_symmetrizer(b):
    """Smallest positive integer diagonal with d_i*b_ij = -d_j*b_ji.

    The ratios d_j/d_i are forced along every edge of the underlying
    graph, so each connected component is determined up to one overall
    scale, which is then chosen minimal.
    """
    n, ncols = mx.shape(b)
    if n != ncols:
        raise NotSkewSymmetrizable("matrix is not square")
    for i in range(n):
        if b[i][i] != 0:
            raise NotSkewSymmetrizable("nonzero diagonal entry")
        for j in range(n):
            if (b[i][j] == 0) != (b[j][i] == 0):
                raise NotSkewSymmetrizable(
                    "entries %d,%d do not vanish together" % (i, j)
                )
            if b[i][j] * b[j][i] > 0:
                raise NotSkewSymmetrizable(
                    "entries %d,%d have the same sign" % (i, j)
                )
    ratio = [None] * n
    for start in range(n):
        if ratio[start] is not None:
            continue
        component = [start]
        ratio[start] = Fraction(1)
        queue = [start]
        while queue:
            i = queue.pop()
            for j in range(n):
                if b[i][j] == 0:
                    continue
                forced = ratio[i] * Fraction(-b[i][j], b[j][i])
                if forced <= 0:
                    raise NotSkewSymmetrizable("negative forced ratio")
                if ratio[j] is None:
                    ratio[j] = forced
                    component.append(j)
                    queue.append(j)
                elif ratio[j] != forced:
                    raise NotSkewSymmetrizable("inconsistent ratios on a cycle")
        scale = lcm(*(r.denominator for r in (ratio[i] for i in component)))
        ints = [int(ratio[i] * scale) for i in component]
        shrink = gcd(*ints)
        for i, v in zip(component, ints):
            ratio[i] = v // shrink
    return tuple(int(r) for r in ratio)


def check_symmetrizer(b, diag):
    n, _ = mx.shape(b)
    if len(diag) != n:
        raise BadSymmetrizer("wrong length")
    if any(d <= 0 for d in diag):
        raise BadSymmetrizer("symmetrizer entries must be positive")
    for i in range(n):
        for j in range(n):
            if diag[i] * b[i][j] != -diag[j] * b[j][i]:
                raise BadSymmetrizer(
                    "d_%d*b_%d%d != -d_%d*b_%d%d" % (i, i, j, j, j, i)
                )


def arrows(b):
    """Directed edges (i, j) of the quiver: one per pair with b_ij < 0."""
    n, _ = mx.shape(b)
    return [
        (i, j) for i in range(n) for j in range(n) if b[i][j] < 0
    ]


def topological_order(b):
    """Vertex order with every arrow pointing forward; None if cyclic."""
    n, _ = mx.shape(b)
    indeg = [0] * n
    for _, j in arrows(b):
        indeg[j] += 1
    ready = sorted(i for i in range(n) if indeg[i] == 0)
    order = []
    while ready:
        i = ready.pop(0)
        order.append(i)
        for a, j in arrows(b):
            if a == i:
                indeg[j] -= 1
                if indeg[j] == 0:
                    ready.append(j)
        ready.sort()
    return order if len(order) == n else None


def is_acyclic(b):
    return topological_order(b) is not None


def valued_arrows(b, diag):
    """Arrow classes (i, j, multiplicity, valuation) of the valued quiver.

    Multiplicity m = gcd(|b_ij|, |b_ji|) and valuation g = gcd(d_i, d_j)
    satisfy m * d_j // g = |b_ij| and m * d_i // g = |b_ji|.
    """
    out = []
    for i, j in arrows(b):
        m = gcd(abs(b[i][j]), abs(b[j][i]))
        g = gcd(diag[i], diag[j])
        out.append((i, j, m, g))
    return out


def principal_framing(b):
    """Stack an identity block of frozen rows under the square matrix."""
    n, _ = mx.shape(b)
    return mx.freeze(list(b) + list(mx.identity(n)))


def compatibility_defect(btilde, lam, diag):
    """The matrix btilde^T * lam - [diag | 0]; zero iff the pair is good."""
    n = len(btilde[0])
    prod = mx.matmul(mx.transpose(btilde), lam)
    target = tuple(
        tuple(diag[i] if i == j else 0 for j in range(2 * n))
        for i in range(n)
    )
    return mx.add(prod, mx.neg(target))


def star_left_matrix(b):
    """Square matrix with 1 on the diagonal and min(b_ij, 0) off it."""
    n, _ = mx.shape(b)
    return tuple(
        tuple((1 if i == j else 0) + min(b[i][j], 0) for j in range(n))
        for i in range(n)
    )


def framed_star_matrix(btilde):
    """The 2n x n extension of the star-left matrix to a framed seed.

    Mutable rows carry 1 + min(b_ij, 0) on and off the diagonal as in
    the square case.  A frozen row enters only when it is entrywise
    nonpositive; rows holding a positive entry contribute nothing.  For
    a framing reached from the principal one by a single mutation this
    keeps exactly the row of a vertex mutated at a source, and for the
    principal framing itself (unit rows) the frozen block vanishes.
    """
    n = len(btilde[0])
    rows = []
    for i in range(n):
        rows.append(
            tuple((1 if i == j else 0) + min(btilde[i][j], 0) for j in range(n))
        )
    for i in range(n):
        frozen = btilde[n + i]
        if all(x <= 0 for x in frozen):
            rows.append(tuple(frozen))
        else:
            rows.append((0,) * n)
    return tuple(rows)


def star_right_matrix(b):
    """The 2n x n matrix of the right star operation at the initial seed.

    Mutable rows: identity minus the positive part of b transposed;
    frozen rows: negated identity.
    """
    n, _ = mx.shape(b)
    rows = []
    for j in range(n):
        rows.append(
            tuple(
                (1 if j == i else 0) - max(b[i][j], 0) for i in range(n)
            )
        )
    for i in range(n):
        rows.append(tuple(-1 if j == i else 0 for j in range(n)))
    return tuple(rows)


def _mutation_companion(btilde, k, n):
    """The 2n x 2n column-substitution matrix driving the form update."""
    size = 2 * n
    e = [[1 if i == j else 0 for j in range(size)] for i in range(size)]
    for i in range(size):
        e[i][k] = -1 if i == k else max(-btilde[i][k], 0)
    return mx.freeze(e)


def mutate_btilde(btilde, k):
    nrows, n = mx.shape(btilde)
    out = []
    for i in range(nrows):
        row = []
        for j in range(n):
            if i == k or j == k:
                row.append(-btilde[i][j])
            else:
                b_ik = btilde[i][k]
                b_kj = btilde[k][j]
                row.append(
                    btilde[i][j]
                    + max(b_ik, 0) * max(b_kj, 0)
                    - max(-b_ik, 0) * max(-b_kj, 0)
                )
        out.append(tuple(row))
    return tuple(out)


@dataclass(frozen=True)
class ExchangeData:
    """Framed exchange matrix plus symmetrizer and compatible skew form.

    ``btilde`` is 2n x n with the mutable block on top, ``diag`` is the
    length-n symmetrizer of the initial principal part (mutation keeps
    it), ``lam`` is the 2n x 2n skew form, and ``lambda0`` remembers the
    base form used at construction (None after any mutation).
    """

    n: int
    btilde: tuple
    diag: tuple
    lam: tuple
    lambda0: tuple = None

    def principal(self):
        return self.btilde[: self.n]

    def frozen_part(self):
        return self.btilde[self.n :]

    def is_acyclic(self):
        return is_acyclic(self.principal())

    def mutate(self, k):
        if not 0 <= k < self.n:
            raise IndexOutOfRange("mutable index %d out of range" % k)
        companion = _mutation_companion(self.btilde, k, self.n)
        new_lam = mx.matmul(mx.matmul(mx.transpose(companion), self.lam), companion)
        return ExchangeData(
            n=self.n,
            btilde=mutate_btilde(self.btilde, k),
            diag=self.diag,
            lam=new_lam,
            lambda0=None,
        )

    def mutate_sequence(self, seq):
        data = self
        for k in seq:
            data = data.mutate(k)
        return data

    def lam_pairing(self, a, b):
        return sum(
            a[i] * self.lam[i][j] * b[j]
            for i in range(2 * self.n)
            for j in range(2 * self.n)
            if self.lam[i][j]
        )


def build_exchange_data(b, lambda0=None, diag=None, require_acyclic=True):
    """Assemble an ``ExchangeData`` from a square integer matrix.

    The symmetrizer defaults to the minimal positive one, and the skew
    form is completed from ``lambda0`` (default zero) so that the framed
    matrix pairs with it to [diag | 0].
    """
    b = mx.freeze(b)
    n, ncols = mx.shape(b)
    if n != ncols:
        raise NotSkewSymmetrizable("matrix is not square")
    if diag is None:
        diag = minimal_symmetrizer(b)
    else:
        diag = tuple(int(d) for d in diag)
        minimal_symmetrizer(b)
        check_symmetrizer(b, diag)
    if require_acyclic and not is_acyclic(b):
        raise NotAcyclic("principal part has a directed cycle")
    if lambda0 is None:
        lambda0 = mx.zeros(n, n)
    else:
        lambda0 = mx.freeze(lambda0)
        if not mx.is_skew_symmetric(lambda0):
            raise Lambda0NotSkew("base form must be skew-symmetric")
    dmat = tuple(
        tuple(diag[i] if i == j else 0 for j in range(n)) for i in range(n)
    )
    bt = mx.transpose(b)
    upper_right = mx.add(mx.neg(mx.matmul(lambda0, b)), mx.neg(dmat))
    lower_left = mx.add(mx.neg(mx.matmul(bt, lambda0)), dmat)
    lower_right = mx.add(mx.matmul(bt, mx.matmul(lambda0, b)), mx.matmul(bt, dmat))
    lam = []
    for i in range(n):
        lam.append(tuple(lambda0[i]) + tuple(upper_right[i]))
    for i in range(n):
        lam.append(tuple(lower_left[i]) + tuple(lower_right[i]))
    lam = tuple(lam)
    btilde = principal_framing(b)
    if not mx.is_skew_symmetric(lam):
        raise Lambda0NotSkew("completed form is not skew")
    defect = compatibility_defect(btilde, lam, diag)
    if any(any(row) for row in defect):
        raise IncompatiblePair("framed matrix does not pair to [diag | 0]")
    return ExchangeData(n=n, btilde=btilde, diag=diag, lam=lam, lambda0=lambda0)


BUILTIN_MATRICES = {
    "A2": ((0, 1), (-1, 0)),
    "B2": ((0, 1), (-2, 0)),
    "C2": ((0, 2), (-1, 0)),
    "G2": ((0, 1), (-3, 0)),
    "A3": ((0, 1, 0), (-1, 0, 1), (0, -1, 0)),
    "B3": ((0, 1, 0), (-1, 0, 1), (0, -2, 0)),
    "WILD3": ((0, 2, 2), (-1, 0, 1), (-1, -1, 0)),
}


def builtin_exchange_data(name, lambda0=None):
    key = name.upper()
    if key not in BUILTIN_MATRICES:
        raise KeyError(
            "unknown type %r; known: %s" % (name, sorted(BUILTIN_MATRICES))
        )
    return build_exchange_data(BUILTIN_MATRICES[key], lambda0=lambda0)
