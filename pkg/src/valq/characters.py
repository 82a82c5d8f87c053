"""Cluster characters from exhaustive subrepresentation counts.

The character of a dimension vector v in a seed with framed matrix M
and framed star matrix S is the sum over subrepresentation dimension
vectors e of

    P_e(u**2) * u**(-euler(e, v-e)) * frame(M*e - S*v),

where P_e is the polynomial counting e-dimensional subrepresentations
of the rigid representation of dimension v over the field with q
elements.  P_e is recovered exactly by Lagrange interpolation from
counts over small prime fields (degree is bounded by the fiberwise
Grassmannian dimension) and validated on held-out primes.
"""

from fractions import Fraction

from .exchange import framed_star_matrix
from .laurent import QCoeff
from .qtorus import QTorusElem, QuantumSeed
from .reps import (
    ValuedQuiver,
    build_rigid_rep,
    count_all_subreps,
    euler_form,
    reflect,
    simple_reflection,
)

DEFAULT_PRIMES = (2, 3, 5, 7, 11, 13, 17)


class InterpolationInconsistent(ArithmeticError):
    """Counting data does not come from one integer polynomial."""


def dimension_bound(diag, v, e):
    """Degree bound for the counting polynomial at e: the dimension of
    the product of the fiberwise Grassmannians."""
    return sum(d * x * (y - x) for d, x, y in zip(diag, e, v))


def lagrange_poly(xs, ys):
    """Interpolating polynomial through (xs, ys), ascending coefficients."""
    k = len(xs)
    coeffs = [Fraction(0)] * k
    for i in range(k):
        num = [Fraction(1)]
        denom = Fraction(1)
        for j in range(k):
            if j == i:
                continue
            new = [Fraction(0)] * (len(num) + 1)
            for deg, c in enumerate(num):
                new[deg] += c * (-xs[j])
                new[deg + 1] += c
            num = new
            denom *= xs[i] - xs[j]
        scale = Fraction(ys[i]) / denom
        for deg, c in enumerate(num):
            coeffs[deg] += scale * c
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def eval_poly(coeffs, x):
    acc = 0
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _dimension_box(v):
    out = [()]
    for top in v:
        out = [prefix + (x,) for prefix in out for x in range(top + 1)]
    return out


def rigid_count_tables(b, diag, v, primes, rng_seed=0, cap=1 << 16, transform=None):
    """Subrepresentation counts of the rigid representation of dimension
    v, over each requested prime; ``transform`` may replace the rigid
    representation (a reflection functor, say) before counting."""
    tables = {}
    for p in primes:
        quiver = ValuedQuiver.from_matrix(b, diag, p, cap=cap)
        rep = build_rigid_rep(quiver, v, rng_seed=rng_seed)
        if transform is not None:
            rep = transform(rep)
        tables[p] = count_all_subreps(rep)
    return tables


def interpolate_counts(diag, v, tables, primes):
    """Counting polynomials from per-prime tables, with validation.

    For each e the first bound+1 primes pin the polynomial down and all
    remaining primes must then agree; coefficients must be integers.
    """
    polys = {}
    for e in _dimension_box(v):
        bound = dimension_bound(diag, v, e)
        if bound + 2 > len(primes):
            raise InterpolationInconsistent(
                "need %d primes for %s, have %d" % (bound + 2, e, len(primes))
            )
        pts = primes[: bound + 1]
        ys = [tables[p][e] for p in pts]
        coeffs = lagrange_poly(pts, ys)
        for c in coeffs:
            if c.denominator != 1:
                raise InterpolationInconsistent(
                    "non-integer coefficient %s at %s" % (c, e)
                )
        coeffs = tuple(int(c) for c in coeffs)
        for p in primes[bound + 1 :]:
            if eval_poly(coeffs, p) != tables[p][e]:
                raise InterpolationInconsistent(
                    "held-out prime %d disagrees at %s" % (p, e)
                )
        if coeffs:
            polys[e] = coeffs
    return polys


def counting_polynomials(b, diag, v, primes=DEFAULT_PRIMES, rng_seed=0, cap=1 << 16):
    tables = rigid_count_tables(b, diag, v, primes, rng_seed=rng_seed, cap=cap)
    return interpolate_counts(diag, v, tables, primes)


def reflected_counting_polynomials(
    data, k, v, primes=DEFAULT_PRIMES, rng_seed=0, cap=1 << 16
):
    """Counting polynomials of the reflected rigid representation.

    The rigid representation of dimension v is built over the seed's
    quiver at each prime, pushed through the reflection functor at k,
    and counted over the reflected quiver.  Returns the reflected
    dimension vector and its polynomials.
    """
    b = data.principal()
    diag = data.diag
    v_new = simple_reflection(b, k, v)
    tables = rigid_count_tables(
        b, diag, v, primes, rng_seed=rng_seed, cap=cap,
        transform=lambda rep: reflect(rep, k),
    )
    return v_new, interpolate_counts(diag, v_new, tables, primes)


def _poly_to_qcoeff(coeffs):
    # q-polynomial evaluated at u**2
    return QCoeff({2 * deg: c for deg, c in enumerate(coeffs)})


def character_in_seed(qseed, v, polys):
    """Assemble the character of v using a quantum seed's own frame.

    Negative mutable exponents are handled by multiplying through with
    a frame monomial and dividing back out exactly at the end.
    """
    cur = qseed.current
    n = cur.n
    size = 2 * n
    v = tuple(int(x) for x in v)
    btilde = cur.btilde
    star = framed_star_matrix(btilde)
    b_prin = cur.principal()
    sv = tuple(
        sum(star[i][j] * v[j] for j in range(n)) for i in range(size)
    )
    terms = []
    for e, coeffs in polys.items():
        a = tuple(
            sum(btilde[i][j] * e[j] for j in range(n)) - sv[i]
            for i in range(size)
        )
        vm = tuple(x - y for x, y in zip(v, e))
        coeff = _poly_to_qcoeff(coeffs).shift(-euler_form(b_prin, cur.diag, e, vm))
        terms.append((a, coeff))
    clear = tuple(
        max([0] + [-a[i] for a, _ in terms]) if i < n else 0
        for i in range(size)
    )
    acc = QTorusElem.zero(qseed.initial.lam)
    lam = cur.lam

    def lam_pair(x, y):
        return sum(
            x[i] * lam[i][j] * y[j]
            for i in range(size)
            for j in range(size)
            if x[i] and lam[i][j] and y[j]
        )

    for a, coeff in terms:
        shifted = tuple(x + m for x, m in zip(a, clear))
        piece = qseed.frame_monomial(shifted)
        acc = acc + piece.scale(coeff.shift(lam_pair(a, clear)))
    if all(m == 0 for m in clear):
        return acc
    return acc.div_right(qseed.frame_monomial(clear))


def generic_character(data, v, primes=DEFAULT_PRIMES, rng_seed=0, cap=1 << 16):
    """Character of the rigid representation of dimension v, expressed
    in the initial quantum torus."""
    polys = counting_polynomials(
        data.principal(), data.diag, v, primes=primes, rng_seed=rng_seed, cap=cap
    )
    return character_in_seed(QuantumSeed.initial_seed(data), v, polys)


def torus_denominator_vector(elem, n):
    """Negated minimal mutable exponents of a torus element."""
    mins = [
        min(exp[i] for exp in elem.terms) for i in range(n)
    ]
    return tuple(-m for m in mins)
