"""Finite fields, subfield towers, and exact linear algebra over them.

Elements of the field with p**d elements are integer codes 0..p**d-1,
read as base-p digit vectors: code sum(c_i * p**i) stands for the class
of sum(c_i * t**i) modulo a fixed monic irreducible of degree d.  The
modulus is chosen deterministically (smallest code), multiplication
runs through exp/log tables for a primitive element, and addition is
digitwise.  Everything is exact and sized for desk-scale exhaustion,
guarded by an element-count cap.
"""

from fractions import Fraction
from itertools import combinations, product
from math import gcd


class NotPrime(ValueError):
    """The characteristic must be a prime number."""


class CapExceeded(RuntimeError):
    """A field or an enumeration would exceed the configured size cap."""


def is_prime(n):
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def prime_factors(n):
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomial helpers over the prime field (coefficient lists,
#    constant term first) used only while a field is being set up --


def _ptrim(c):
    while c and c[-1] == 0:
        c.pop()
    return c


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pmod(a, f, p):
    # f must be monic
    a = list(a)
    df = len(f) - 1
    while len(a) - 1 >= df and a:
        lead = a[-1] % p
        if lead:
            shiftby = len(a) - 1 - df
            for i, c in enumerate(f):
                a[shiftby + i] = (a[shiftby + i] - lead * c) % p
        a.pop()
        _ptrim(a)
    return _ptrim(a)


def _psub(a, b, p):
    out = [0] * max(len(a), len(b))
    for i, x in enumerate(a):
        out[i] = x
    for i, y in enumerate(b):
        out[i] = (out[i] - y) % p
    return _ptrim(out)


def _pmonic(a, p):
    if not a:
        return a
    lead = a[-1]
    if lead == 1:
        return a
    inv = pow(lead, p - 2, p)
    return [(c * inv) % p for c in a]


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _pmod(a, b, p)
    return _pmonic(a, p)


def _ppow_mod(base, e, f, p):
    out = [1]
    sq = _pmod(base, f, p)
    while e:
        if e & 1:
            out = _pmod(_pmul(out, sq, p), f, p)
        sq = _pmod(_pmul(sq, sq, p), f, p)
        e >>= 1
    return out


def _is_irreducible(f, p):
    d = len(f) - 1
    if d < 1:
        return False
    t = [0, 1]
    x = _pmod(t, f, p)
    for _ in range(d):
        x = _ppow_mod(x, p, f, p)
    if x != _pmod(t, f, p):
        return False
    for ell in prime_factors(d):
        y = _pmod(t, f, p)
        for _ in range(d // ell):
            y = _ppow_mod(y, p, f, p)
        g = _pgcd(_psub(y, t, p), f, p)
        if len(g) - 1 > 0:
            return False
    return True


def _smallest_modulus(p, d):
    for code in range(p**d):
        coeffs = []
        c = code
        for _ in range(d):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if _is_irreducible(f, p):
            return tuple(f)
    raise AssertionError("no irreducible polynomial found")


class FiniteField:
    """The field with p**d elements, with exp/log multiplication tables."""

    def __init__(self, p, d, cap=1 << 16):
        p, d = int(p), int(d)
        if not is_prime(p):
            raise NotPrime("characteristic %d is not prime" % p)
        if d < 1:
            raise ValueError("degree must be positive")
        q = p**d
        if q > cap:
            raise CapExceeded("field size %d exceeds cap %d" % (q, cap))
        self.p = p
        self.d = d
        self.q = q
        self.modulus = _smallest_modulus(p, d)
        # digit vectors of t**k mod modulus for k < 2d-1, for raw products
        red = []
        tk = [1]
        for _ in range(max(2 * d - 1, 1)):
            red.append(tuple(tk[i] if i < len(tk) else 0 for i in range(d)))
            tk = _pmod(_pmul(tk, [0, 1], p), list(self.modulus), p)
        self._tred = red
        self._build_tables()

    def digits(self, a):
        out = []
        for _ in range(self.d):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_digits(self, digs):
        code = 0
        for c in reversed(digs):
            code = code * self.p + (c % self.p)
        return code

    def add(self, a, b):
        p = self.p
        code = 0
        mult = 1
        for _ in range(self.d):
            code += ((a + b) % p) * mult
            a //= p
            b //= p
            mult *= p
        return code

    def neg(self, a):
        p = self.p
        code = 0
        mult = 1
        for _ in range(self.d):
            code += ((-a) % p) * mult
            a //= p
            mult *= p
        return code

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def _raw_mul(self, a, b):
        # convolution of digit vectors, then reduction by the t-power table
        p = self.p
        da = self.digits(a)
        db = self.digits(b)
        conv = [0] * (2 * self.d - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    conv[i + j] = (conv[i + j] + x * y) % p
        out = [0] * self.d
        for k, c in enumerate(conv):
            if c:
                rk = self._tred[k]
                for i in range(self.d):
                    out[i] = (out[i] + c * rk[i]) % p
        return self.from_digits(out)

    def _raw_pow(self, a, e):
        out = 1
        sq = a
        while e:
            if e & 1:
                out = self._raw_mul(out, sq)
            sq = self._raw_mul(sq, sq)
            e >>= 1
        return out

    def _build_tables(self):
        q = self.q
        if q == 2:
            self.gen = 1
        else:
            factors = prime_factors(q - 1)
            for cand in range(2, q):
                if all(
                    self._raw_pow(cand, (q - 1) // ell) != 1 for ell in factors
                ):
                    self.gen = cand
                    break
            else:
                raise AssertionError("no primitive element found")
        exp = [1] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], self.gen)
        log = [0] * q
        for i, v in enumerate(exp):
            log[v] = i
        self.exp = tuple(exp)
        self.log = tuple(log)

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a, k):
        if a == 0:
            if k > 0:
                return 0
            if k == 0:
                return 1
            raise ZeroDivisionError("negative power of zero")
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def frobenius(self, a):
        return self.pow(a, self.p)

    def elements(self):
        return range(self.q)

    def eval_poly(self, coeffs, x):
        """Horner evaluation; coeffs are field codes, constant term first."""
        acc = 0
        for c in reversed(coeffs):
            acc = self.add(self.mul(acc, x), c)
        return acc

    def roots(self, coeffs):
        return [x for x in range(self.q) if self.eval_poly(coeffs, x) == 0]

    def __repr__(self):
        return "FiniteField(%d^%d)" % (self.p, self.d)


# -- exact linear algebra with matrices as lists of rows of codes --


def f_matmul(field, a, b):
    if not a or not b:
        return [[]]
    nb = len(b[0])
    out = []
    for row in a:
        new = [0] * nb
        for k, x in enumerate(row):
            if x:
                bk = b[k]
                for j in range(nb):
                    if bk[j]:
                        new[j] = field.add(new[j], field.mul(x, bk[j]))
        out.append(new)
    return out


def f_matvec(field, a, v):
    out = []
    for row in a:
        acc = 0
        for x, y in zip(row, v):
            if x and y:
                acc = field.add(acc, field.mul(x, y))
        out.append(acc)
    return out


def f_rref(field, rows):
    """Reduced row echelon form; returns (rows, pivot column list)."""
    m = [list(r) for r in rows]
    nrows = len(m)
    ncols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if m[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = field.inv(m[r][col])
        m[r] = [field.mul(inv, x) for x in m[r]]
        for i in range(nrows):
            if i != r and m[i][col]:
                c = m[i][col]
                m[i] = [
                    field.sub(x, field.mul(c, y)) for x, y in zip(m[i], m[r])
                ]
        pivots.append(col)
        r += 1
        if r == nrows:
            break
    return m, pivots


def f_rank(field, rows):
    if not rows or not rows[0]:
        return 0
    _, pivots = f_rref(field, rows)
    return len(pivots)


def f_kernel_basis(field, rows):
    """Basis of the right kernel of the matrix (one vector per free column)."""
    if not rows:
        return []
    ncols = len(rows[0])
    m, pivots = f_rref(field, rows)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for r, pcol in enumerate(pivots):
            v[pcol] = field.neg(m[r][free])
        basis.append(v)
    return basis


def f_inverse(field, rows):
    n = len(rows)
    aug = [list(r) + [1 if i == j else 0 for j in range(n)] for i, r in enumerate(rows)]
    m, pivots = f_rref(field, aug)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in m[:n]]


def f_in_span(field, rows, v):
    """Is v in the row span of rows?"""
    if not rows:
        return all(x == 0 for x in v)
    stacked = [list(r) for r in rows]
    base = f_rank(field, stacked)
    return f_rank(field, stacked + [list(v)]) == base


# -- Grassmannians --


def gaussian_binomial(q, n, k):
    """Number of k-dimensional subspaces of an n-space over a q-element field."""
    if k < 0 or k > n:
        return 0
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(q ** (n - i) - 1, q ** (i + 1) - 1)
    assert out.denominator == 1
    return int(out)


def enumerate_subspaces(field, n, k, cap=2_000_000):
    """All k-dimensional subspaces of field**n as RREF basis row-lists."""
    if k < 0 or k > n:
        return
    total = gaussian_binomial(field.q, n, k)
    if total > cap:
        raise CapExceeded("grassmannian has %d points" % total)
    if k == 0:
        yield []
        return
    for pivots in combinations(range(n), k):
        free_slots = []
        for r, pc in enumerate(pivots):
            for col in range(pc + 1, n):
                if col not in pivots:
                    free_slots.append((r, col))
        for values in product(range(field.q), repeat=len(free_slots)):
            rows = [[0] * n for _ in range(k)]
            for r, pc in enumerate(pivots):
                rows[r][pc] = 1
            for (r, col), val in zip(free_slots, values):
                rows[r][col] = val
            yield rows


def quotient_projection(field, n, sub_rows):
    """Projection data for field**n onto the quotient by a subspace.

    Returns (reduced subspace rows, pivot columns, free columns); the
    image of a vector is its reduction by the subspace rows read off at
    the free columns.
    """
    if sub_rows:
        reduced, pivots = f_rref(field, sub_rows)
        reduced = reduced[: len(pivots)]
    else:
        reduced, pivots = [], []
    free = [c for c in range(n) if c not in pivots]
    return reduced, pivots, free


def project_to_quotient(field, vec, reduced, pivots, free):
    v = list(vec)
    for r, pc in enumerate(pivots):
        if v[pc]:
            c = v[pc]
            v = [field.sub(x, field.mul(c, y)) for x, y in zip(v, reduced[r])]
    return [v[c] for c in free]


def enumerate_subspaces_containing(field, n, k, sub_rows, cap=2_000_000):
    """All k-dimensional subspaces of field**n containing a given one.

    Enumerated through the quotient by the given subspace, so the count
    is a Grassmannian of the quotient, not of the ambient space.
    """
    reduced, pivots, free = quotient_projection(field, n, sub_rows)
    w = len(pivots)
    if k < w or k > n:
        return
    for qrows in enumerate_subspaces(field, n - w, k - w, cap=cap):
        lifted = [list(r) for r in reduced]
        for qr in qrows:
            v = [0] * n
            for idx, col in enumerate(free):
                v[col] = qr[idx]
            lifted.append(v)
        yield lifted


# -- towers of fields with compatible embeddings --


class FieldTower:
    """A family of fields of one characteristic, closed under gcd of
    degrees, with fixed pairwise embeddings along divisibility."""

    def __init__(self, p, degrees, cap=1 << 16):
        p = int(p)
        if not is_prime(p):
            raise NotPrime("characteristic %d is not prime" % p)
        degs = set(int(d) for d in degrees)
        degs.add(1)
        for a in list(degs):
            for b in list(degs):
                degs.add(gcd(a, b))
        self.p = p
        self.cap = cap
        self.degrees = tuple(sorted(degs))
        self.fields = {d: FiniteField(p, d, cap=cap) for d in self.degrees}
        self._emb = {}
        self._emb_inv = {}
        self._coords = {}
        self._dual = {}
        # inner loop descends so that when (a, b) routes through an
        # intermediate c, both (a, c) and (c, b) already exist
        for b in self.degrees:
            for a in reversed(self.degrees):
                if a < b and b % a == 0:
                    self._emb[(a, b)] = self._build_embedding(a, b)

    def field(self, d):
        return self.fields[d]

    def _build_embedding(self, a, b):
        if a == 1:
            return tuple(range(self.p))
        # route through an intermediate subfield when the tower has one,
        # which keeps compositions along chains consistent by construction
        for c in self.degrees:
            if a < c < b and c % a == 0 and b % c == 0:
                lower = self._emb[(a, c)]
                upper = self._emb[(c, b)]
                return tuple(upper[x] for x in lower)
        fa = self.fields[a]
        fb = self.fields[b]
        # the modulus of the small field has prime-field coefficients,
        # which are the same codes in every field of the tower
        coeffs = list(fa.modulus)
        roots = fb.roots(coeffs)
        if not roots:
            raise AssertionError("modulus has no root in the bigger field")
        r = min(roots)
        images = []
        for x in range(fa.q):
            digs = fa.digits(x)
            images.append(fb.eval_poly(digs, r))
        return tuple(images)

    def embed(self, a, b, x):
        if a == b:
            return x
        return self._emb[(a, b)][x]

    def embed_inverse(self, b, a, y):
        if a == b:
            return y
        key = (b, a)
        if key not in self._emb_inv:
            self._emb_inv[key] = {
                img: x for x, img in enumerate(self._emb[(a, b)])
            }
        table = self._emb_inv[key]
        if y not in table:
            raise ValueError("element is not in the subfield")
        return table[y]

    def relative_trace(self, b, a, x):
        """Trace from the degree-b field down to its degree-a subfield."""
        if a == b:
            return x
        fb = self.fields[b]
        step = self.p**a
        acc = x
        y = x
        for _ in range(b // a - 1):
            y = fb.pow(y, step)
            acc = fb.add(acc, y)
        return self.embed_inverse(b, a, acc)

    def subfield_coords(self, b, a, y):
        """Coordinates of y over the degree-a subfield in the basis of
        powers 1, t, ..., t**(b/a - 1) of the big field's generator."""
        if a == b:
            return (y,)
        fa = self.fields[a]
        fb = self.fields[b]
        e = b // a
        key = (b, a)
        if key not in self._coords:
            cols = []
            for l in range(e):
                tb_l = fb.pow(self.p, l) if l else 1
                for s in range(a):
                    ta_s = fa.from_digits(
                        [1 if i == s else 0 for i in range(a)]
                    )
                    val = fb.mul(self.embed(a, b, ta_s), tb_l)
                    cols.append(fb.digits(val))
            # solve digit systems through the inverse over the prime field
            mat = [[cols[j][i] for j in range(b)] for i in range(b)]
            prime = self.fields[1]
            self._coords[key] = f_inverse(prime, mat)
        invmat = self._coords[key]
        prime = self.fields[1]
        sol = f_matvec(prime, invmat, fb.digits(y))
        out = []
        for l in range(e):
            out.append(fa.from_digits(sol[l * a : (l + 1) * a]))
        return tuple(out)

    def from_subfield_coords(self, b, a, coords):
        fb = self.fields[b]
        acc = 0
        for l, c in enumerate(coords):
            tb_l = fb.pow(self.p, l) if l else 1
            acc = fb.add(acc, fb.mul(self.embed(a, b, c), tb_l))
        return acc

    def trace_dual_basis(self, b, a):
        """Basis dual to 1, t, ..., t**(e-1) under the relative trace form."""
        key = (b, a)
        if key not in self._dual:
            fa = self.fields[a]
            fb = self.fields[b]
            e = b // a
            gram = []
            for i in range(e):
                row = []
                for l in range(e):
                    val = fb.pow(self.p, i + l) if i + l else 1
                    row.append(self.relative_trace(b, a, val))
                gram.append(row)
            ginv = f_inverse(fa, gram)
            dual = []
            for l in range(e):
                acc = 0
                for i in range(e):
                    ti = fb.pow(self.p, i) if i else 1
                    acc = fb.add(
                        acc, fb.mul(self.embed(a, b, ginv[i][l]), ti)
                    )
                dual.append(acc)
            self._dual[key] = tuple(dual)
        return self._dual[key]


def build_tower(p, degrees, cap=1 << 16):
    return FieldTower(p, degrees, cap=cap)
