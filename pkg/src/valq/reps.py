"""Representations of valued quivers over towers of finite fields.

Vertex i carries a vector space over the field with p**d_i elements;
an arrow i -> j of valuation g carries a map that is linear over the
common subfield with p**g elements, stored as a matrix in the basis
that expands each top-field coordinate into its d/g subfield
coordinates (index r*(d/g) + m for coordinate r, subfield slot m).

Everything downstream (hom and ext spaces, subrepresentation counts,
sink and source reflections) is exhaustive exact linear algebra.
"""

import random

from .exchange import topological_order, valued_arrows
from .finfield import (
    build_tower,
    enumerate_subspaces_containing,
    f_kernel_basis,
    f_matvec,
    f_rank,
    f_rref,
    gaussian_binomial,
    project_to_quotient,
    quotient_projection,
)


class TowerMismatch(ValueError):
    """Representations over different quivers or towers were combined."""


class NoRigidFound(RuntimeError):
    """Random search did not hit a representation without self-extensions."""


class NotSinkOrSource(ValueError):
    """Reflection was requested at a vertex of the wrong shape."""


class HasSimpleSummand(ValueError):
    """Reflection at k is undefined: the simple at k splits off."""


def _tpow(field, l):
    # the class of t**l as a code; callers keep l < field.d
    return field.p**l if l else 1


class ValuedQuiver:
    """A valued quiver with a fixed tower of coefficient fields."""

    def __init__(self, b, diag, tower):
        self.b = tuple(tuple(int(x) for x in row) for row in b)
        self.n = len(self.b)
        self.diag = tuple(int(d) for d in diag)
        self.tower = tower
        self.arrow_keys = []
        self.valuation = {}
        for i, j, mult, g in valued_arrows(self.b, self.diag):
            self.valuation[(i, j)] = g
            for copy in range(mult):
                self.arrow_keys.append((i, j, copy))

    @classmethod
    def from_matrix(cls, b, diag, p, cap=1 << 16):
        tower = build_tower(p, diag, cap=cap)
        return cls(b, diag, tower)

    @property
    def p(self):
        return self.tower.p

    def field(self, i):
        return self.tower.field(self.diag[i])

    def is_sink(self, k):
        return all(self.b[k][j] >= 0 for j in range(self.n))

    def is_source(self, k):
        return all(self.b[i][k] >= 0 for i in range(self.n))

    def reflected(self, k):
        rows = [list(row) for row in self.b]
        for j in range(self.n):
            rows[k][j] = -rows[k][j]
            rows[j][k] = -rows[j][k]
        return ValuedQuiver(rows, self.diag, self.tower)

    def map_shape(self, key, dims):
        i, j, _ = key
        g = self.valuation[(i, j)]
        return (
            dims[j] * (self.diag[j] // g),
            dims[i] * (self.diag[i] // g),
        )

    def f_to_g(self, i, g, vec):
        """Flatten a vector over the vertex field into subfield coords."""
        d = self.diag[i]
        out = []
        for x in vec:
            out.extend(self.tower.subfield_coords(d, g, x))
        return out

    def g_to_f(self, i, g, gvec):
        d = self.diag[i]
        e = d // g
        out = []
        for r in range(0, len(gvec), e):
            out.append(self.tower.from_subfield_coords(d, g, gvec[r : r + e]))
        return out


class ValuedRep:
    """Dimension vector plus one subfield-linear matrix per arrow."""

    def __init__(self, quiver, dims, maps):
        self.quiver = quiver
        self.dims = tuple(int(v) for v in dims)
        assert len(self.dims) == quiver.n
        assert all(v >= 0 for v in self.dims)
        self.maps = {}
        for key in quiver.arrow_keys:
            mat = maps[key]
            nrows, ncols = quiver.map_shape(key, self.dims)
            mat = tuple(tuple(int(x) for x in row) for row in mat)
            assert len(mat) == nrows
            assert all(len(row) == ncols for row in mat)
            self.maps[key] = mat

    @classmethod
    def zero_maps(cls, quiver, dims):
        maps = {}
        for key in quiver.arrow_keys:
            nrows, ncols = quiver.map_shape(key, dims)
            maps[key] = tuple((0,) * ncols for _ in range(nrows))
        return cls(quiver, dims, maps)

    @classmethod
    def simple(cls, quiver, k):
        dims = tuple(1 if i == k else 0 for i in range(quiver.n))
        return cls.zero_maps(quiver, dims)

    def apply_arrow(self, key, vec):
        """Image of a vertex-field vector under one arrow map."""
        i, j, _ = key
        g = self.quiver.valuation[(i, j)]
        gfield = self.quiver.tower.field(g)
        gin = self.quiver.f_to_g(i, g, vec)
        gout = f_matvec(gfield, self.maps[key], gin)
        return self.quiver.g_to_f(j, g, gout)

    def __eq__(self, other):
        if not isinstance(other, ValuedRep):
            return NotImplemented
        return (
            self.quiver.b == other.quiver.b
            and self.quiver.diag == other.quiver.diag
            and self.quiver.p == other.quiver.p
            and self.dims == other.dims
            and self.maps == other.maps
        )


def random_rep(quiver, dims, rng):
    maps = {}
    for key in quiver.arrow_keys:
        i, j, _ = key
        g = quiver.valuation[(i, j)]
        q = quiver.tower.field(g).q
        nrows, ncols = quiver.map_shape(key, dims)
        maps[key] = tuple(
            tuple(rng.randrange(q) for _ in range(ncols)) for _ in range(nrows)
        )
    return ValuedRep(quiver, dims, maps)


def euler_form(b, diag, v, w):
    """Euler pairing of dimension vectors, in prime-field units."""
    n = len(diag)
    total = sum(diag[i] * v[i] * w[i] for i in range(n))
    for i in range(n):
        for j in range(n):
            if b[i][j] < 0:
                total += diag[i] * b[i][j] * v[i] * w[j]
    return total


def symmetrized_euler(b, diag, v, w):
    return euler_form(b, diag, v, w) + euler_form(b, diag, w, v)


def simple_reflection(b, k, v):
    """Reflect a dimension vector at vertex k of the exchange matrix."""
    n = len(b)
    out = [int(x) for x in v]
    out[k] = -v[k] + sum(abs(b[k][i]) * v[i] for i in range(n) if i != k)
    return tuple(out)


def _fp_arrow_matrix(rep, key):
    """The arrow map as a matrix over the prime field.

    Input and output coordinates flatten vertex-field coordinates into
    base-p digits (index r*d + s for coordinate r, digit s).
    """
    i, j, _ = key
    quiver = rep.quiver
    di, dj = quiver.diag[i], quiver.diag[j]
    fi = quiver.field(i)
    fj = quiver.field(j)
    vi, vj = rep.dims[i], rep.dims[j]
    cols = []
    for r in range(vi):
        for s in range(di):
            vec = [0] * vi
            vec[r] = _tpow(fi, s)
            out = rep.apply_arrow(key, vec)
            col = []
            for y in out:
                col.extend(fj.digits(y))
            cols.append(col)
    nrows = vj * dj
    return [[cols[c][r] for c in range(len(cols))] for r in range(nrows)]


def _fp_mult_blocks(field, w, v):
    """Prime-field matrices of the maps x -> t**s * x_c placed at row r.

    Returns a dict (r, c, s) -> matrix of shape (w*d, v*d); these span
    the vertex-field linear maps from a v-dim to a w-dim space.
    """
    d = field.d
    blocks = {}
    for s in range(d):
        ts = _tpow(field, s)
        small = []
        for srow in range(d):
            small.append(
                [
                    field.digits(field.mul(ts, _tpow(field, sc)))[srow]
                    for sc in range(d)
                ]
            )
        blocks[s] = small
    out = {}
    for r in range(w):
        for c in range(v):
            for s in range(d):
                mat = [[0] * (v * d) for _ in range(w * d)]
                small = blocks[s]
                for a in range(d):
                    for b2 in range(d):
                        mat[r * d + a][c * d + b2] = small[a][b2]
                out[(r, c, s)] = mat
    return out


def hom_dim(repv, repw):
    """Prime-field dimension of the space of homomorphisms V -> W.

    Unknowns are the vertex-field entries of a candidate morphism; each
    arrow imposes the intertwining identity as prime-field equations.
    """
    if repv.quiver is not repw.quiver and (
        repv.quiver.b != repw.quiver.b
        or repv.quiver.diag != repw.quiver.diag
        or repv.quiver.p != repw.quiver.p
    ):
        raise TowerMismatch("representations live over different quivers")
    quiver = repv.quiver
    p = quiver.p
    prime = quiver.tower.field(1)
    n = quiver.n
    offsets = []
    total_unknowns = 0
    for i in range(n):
        offsets.append(total_unknowns)
        total_unknowns += quiver.diag[i] * repv.dims[i] * repw.dims[i]
    if total_unknowns == 0:
        return 0

    def unknown_index(i, r, c, s):
        d = quiver.diag[i]
        return offsets[i] + (r * repv.dims[i] + c) * d + s

    rows = []
    for key in quiver.arrow_keys:
        i, j, _ = key
        di, dj = quiver.diag[i], quiver.diag[j]
        theta_v = _fp_arrow_matrix(repv, key)
        theta_w = _fp_arrow_matrix(repw, key)
        blocks_j = _fp_mult_blocks(quiver.field(j), repw.dims[j], repv.dims[j])
        blocks_i = _fp_mult_blocks(quiver.field(i), repw.dims[i], repv.dims[i])
        out_dim = repw.dims[j] * dj
        in_dim = repv.dims[i] * di
        for alpha in range(out_dim):
            for beta in range(in_dim):
                row = [0] * total_unknowns
                for (r, c, s), mat in blocks_j.items():
                    coeff = 0
                    for gamma in range(repv.dims[j] * dj):
                        if mat[alpha][gamma] and theta_v[gamma][beta]:
                            coeff = (
                                coeff + mat[alpha][gamma] * theta_v[gamma][beta]
                            ) % p
                    if coeff:
                        row[unknown_index(j, r, c, s)] = coeff
                for (r, c, s), mat in blocks_i.items():
                    coeff = 0
                    for gamma in range(repw.dims[i] * di):
                        if theta_w[alpha][gamma] and mat[gamma][beta]:
                            coeff = (
                                coeff + theta_w[alpha][gamma] * mat[gamma][beta]
                            ) % p
                    if coeff:
                        idx = unknown_index(i, r, c, s)
                        row[idx] = (row[idx] - coeff) % p
                if any(row):
                    rows.append(row)
    rank = f_rank(prime, rows) if rows else 0
    return total_unknowns - rank


def ext_dim(repv, repw):
    """Prime-field dimension of the extension space, via the dimension
    identity hom - ext = euler."""
    quiver = repv.quiver
    return hom_dim(repv, repw) - euler_form(
        quiver.b, quiver.diag, repv.dims, repw.dims
    )


def is_rigid(rep):
    return ext_dim(rep, rep) == 0


def build_rigid_rep(quiver, dims, rng_seed=0, attempts=400):
    """Random search for a representation without self-extensions."""
    rng = random.Random(rng_seed)
    dims = tuple(int(v) for v in dims)
    rep = ValuedRep.zero_maps(quiver, dims)
    if is_rigid(rep):
        return rep
    for _ in range(attempts):
        rep = random_rep(quiver, dims, rng)
        if is_rigid(rep):
            return rep
    raise NoRigidFound(
        "no rigid representation of dimension %s after %d draws"
        % (dims, attempts)
    )


def _scale_fvec(field, vec, c):
    return [field.mul(c, x) for x in vec]


def _images_into(rep, target, chosen):
    """Basis of the vertex-field span at ``target`` of all arrow images
    of the chosen subspaces."""
    quiver = rep.quiver
    ftarget = quiver.field(target)
    vecs = []
    for key in quiver.arrow_keys:
        h, j, _ = key
        if j != target or h not in chosen:
            continue
        g = quiver.valuation[(h, j)]
        fh = quiver.field(h)
        steps = quiver.diag[h] // g
        for basisvec in chosen[h]:
            for l in range(steps):
                xv = _scale_fvec(fh, basisvec, _tpow(fh, l))
                vecs.append(rep.apply_arrow(key, xv))
    if not vecs:
        return []
    reduced, pivots = f_rref(ftarget, vecs)
    return reduced[: len(pivots)]


def count_subreps(rep, e):
    """Number of subrepresentations with dimension vector e.

    Non-sink vertices are enumerated (subspaces containing the forced
    images, walked in topological order); each sink contributes a
    closed-form count of subspaces between the forced image and the
    whole fiber.  In-neighbors are never sinks, so the forced image at
    every vertex is known by the time it is needed.
    """
    quiver = rep.quiver
    n = quiver.n
    e = tuple(int(x) for x in e)
    if any(x < 0 or x > v for x, v in zip(e, rep.dims)):
        return 0
    order = topological_order(quiver.b)
    assert order is not None
    nonsinks = [i for i in order if not quiver.is_sink(i)]
    sinks = [i for i in range(n) if quiver.is_sink(i)]
    total = 0

    def recurse(idx, chosen):
        nonlocal total
        if idx == len(nonsinks):
            factor = 1
            for k in sinks:
                u = len(_images_into(rep, k, chosen))
                factor *= gaussian_binomial(
                    quiver.field(k).q, rep.dims[k] - u, e[k] - u
                )
                if factor == 0:
                    return
            total += factor
            return
        i = nonsinks[idx]
        forced = _images_into(rep, i, chosen)
        if len(forced) > e[i]:
            return
        for w in enumerate_subspaces_containing(
            quiver.field(i), rep.dims[i], e[i], forced
        ):
            chosen[i] = w
            recurse(idx + 1, chosen)
        chosen.pop(i, None)

    recurse(0, {})
    return total


def count_all_subreps(rep):
    """Map every dimension vector below the rep's to its count."""
    ranges = [range(v + 1) for v in rep.dims]
    out = {}

    def walk(prefix):
        if len(prefix) == len(ranges):
            out[tuple(prefix)] = count_subreps(rep, prefix)
            return
        for x in ranges[len(prefix)]:
            walk(prefix + [x])

    walk([])
    return out


def reflect_sink(rep, k):
    """Sink reflection: the new fiber at k is the kernel of the summed
    evaluation map, and reversed arrows act through the relative trace."""
    quiver = rep.quiver
    if not quiver.is_sink(k):
        raise NotSinkOrSource("vertex %d is not a sink" % k)
    fk = quiver.field(k)
    dk = quiver.diag[k]
    in_keys = [key for key in quiver.arrow_keys if key[1] == k]
    layout = []
    for key in in_keys:
        h = key[0]
        g = quiver.valuation[(h, k)]
        width = rep.dims[h] * (quiver.diag[h] // g)
        layout.append((key, g, width))
    columns = []
    for key, g, width in layout:
        mat = rep.maps[key]
        for m in range(width):
            gcol = [mat[r][m] for r in range(len(mat))]
            columns.append(quiver.g_to_f(k, g, gcol))
    ncols_phi = len(columns)
    nrows_phi = rep.dims[k]
    if nrows_phi == 0:
        kernel = [
            [1 if i == c else 0 for i in range(ncols_phi)]
            for c in range(ncols_phi)
        ]
        rank = 0
    elif ncols_phi == 0:
        kernel = []
        rank = 0
    else:
        phi = [
            [columns[c][r] for c in range(ncols_phi)] for r in range(nrows_phi)
        ]
        kernel = f_kernel_basis(fk, phi)
        rank = ncols_phi - len(kernel)
    if rank < rep.dims[k]:
        raise HasSimpleSummand("evaluation at the sink is not surjective")
    new_quiver = quiver.reflected(k)
    new_dims = list(rep.dims)
    new_dims[k] = len(kernel)
    maps = {}
    for key in quiver.arrow_keys:
        if key[1] != k:
            maps[key] = rep.maps[key]
    offset = {}
    pos = 0
    for key, g, width in layout:
        offset[key] = pos
        pos += width
    for key, g, width in layout:
        h = key[0]
        steps = dk // g
        new_key = (k, h, key[2])
        ncols = len(kernel) * steps
        mat = [[0] * ncols for _ in range(width)]
        for s, kvec in enumerate(kernel):
            for l in range(steps):
                tl = _tpow(fk, l)
                for m in range(width):
                    c = kvec[offset[key] + m]
                    mat[m][s * steps + l] = quiver.tower.relative_trace(
                        dk, g, fk.mul(c, tl)
                    )
        maps[new_key] = mat
    return ValuedRep(new_quiver, new_dims, maps)


def reflect_source(rep, k):
    """Source reflection: the new fiber at k is the cokernel of the
    coevaluation map built from the trace-dual basis."""
    quiver = rep.quiver
    if not quiver.is_source(k):
        raise NotSinkOrSource("vertex %d is not a source" % k)
    fk = quiver.field(k)
    dk = quiver.diag[k]
    out_keys = [key for key in quiver.arrow_keys if key[0] == k]
    layout = []
    for key in out_keys:
        j = key[1]
        g = quiver.valuation[(k, j)]
        width = rep.dims[j] * (quiver.diag[j] // g)
        layout.append((key, g, width))
    nbig = sum(width for _, _, width in layout)
    psi_cols = []
    for r in range(rep.dims[k]):
        col = []
        for key, g, width in layout:
            steps = dk // g
            dual = quiver.tower.trace_dual_basis(dk, g)
            entry = [0] * width
            for l in range(steps):
                xv = [0] * rep.dims[k]
                xv[r] = _tpow(fk, l)
                gflat = quiver.f_to_g(key[1], g, rep.apply_arrow(key, xv))
                for m in range(width):
                    if gflat[m]:
                        entry[m] = fk.add(
                            entry[m],
                            fk.mul(
                                quiver.tower.embed(g, dk, gflat[m]), dual[l]
                            ),
                        )
            col.extend(entry)
        psi_cols.append(col)
    rank = f_rank(fk, psi_cols) if psi_cols and nbig else 0
    if rank < rep.dims[k]:
        raise HasSimpleSummand("coevaluation at the source is not injective")
    reduced, pivots, free = quotient_projection(fk, nbig, psi_cols)
    new_quiver = quiver.reflected(k)
    new_dims = list(rep.dims)
    new_dims[k] = nbig - rank
    maps = {}
    for key in quiver.arrow_keys:
        if key[0] != k:
            maps[key] = rep.maps[key]
    offset = {}
    pos = 0
    for key, g, width in layout:
        offset[key] = pos
        pos += width
    for key, g, width in layout:
        j = key[1]
        steps = dk // g
        new_key = (j, k, key[2])
        nrows_new = new_dims[k] * steps
        mat = [[0] * width for _ in range(nrows_new)]
        for m in range(width):
            w = [0] * nbig
            w[offset[key] + m] = 1
            qcoords = project_to_quotient(fk, w, reduced, pivots, free)
            flat = quiver.f_to_g(k, g, qcoords)
            for ridx, val in enumerate(flat):
                mat[ridx][m] = val
        maps[new_key] = mat
    return ValuedRep(new_quiver, new_dims, maps)


def reflect(rep, k):
    if rep.quiver.is_sink(k):
        return reflect_sink(rep, k)
    if rep.quiver.is_source(k):
        return reflect_source(rep, k)
    raise NotSinkOrSource("vertex %d is neither sink nor source" % k)
