"""Exact Laurent polynomial arithmetic.

Two coefficient worlds live here:

* ``LaurentPoly``: integer-coefficient Laurent polynomials in several
  commuting variables, stored as a dict from exponent tuples to nonzero
  ints.  This is the engine for commutative cluster variables.
* ``QCoeff``: integer-coefficient Laurent polynomials in the single
  deformation variable u (so u**2 plays the role of q), used as the
  coefficient ring of the quantum torus.

Both support exact division that raises ``InexactDivision`` instead of
ever returning an approximation.
"""


class ArityMismatch(ValueError):
    """Operands live in Laurent rings with different variable counts."""


class ZeroPolynomial(ZeroDivisionError):
    """An operation needed a nonzero polynomial and got zero."""


class InexactDivision(ArithmeticError):
    """Division was requested but the quotient is not a Laurent polynomial."""


class NegativeExponentInF(ValueError):
    """A polynomial expected to be honest (no negative exponents) is not."""


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class LaurentPoly:
    """Integer Laurent polynomial in ``nvars`` commuting variables."""

    __slots__ = ("nvars", "terms", "_hash")

    def __init__(self, nvars, terms=None):
        self.nvars = int(nvars)
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                coeff = int(coeff)
                if coeff == 0:
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.nvars:
                    raise ArityMismatch(
                        "exponent length %d != nvars %d" % (len(exp), self.nvars)
                    )
                clean[exp] = clean.get(exp, 0) + coeff
                if clean[exp] == 0:
                    del clean[exp]
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {})

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exp, coeff=1):
        exp = tuple(int(e) for e in exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def variable(cls, nvars, index):
        exp = tuple(1 if j == index else 0 for j in range(nvars))
        return cls(nvars, {exp: 1})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {(0,) * self.nvars: 1}

    def is_monomial(self):
        return len(self.terms) == 1

    def _check(self, other):
        if not isinstance(other, LaurentPoly):
            raise TypeError("expected LaurentPoly, got %r" % type(other))
        if other.nvars != self.nvars:
            raise ArityMismatch(
                "nvars %d != %d" % (self.nvars, other.nvars)
            )

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly(self.nvars, out)

    def __neg__(self):
        return LaurentPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(
                self.nvars, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _vec_add(ea, eb)
                s = out.get(e, 0) + ca * cb
                if s:
                    out[e] = s
                else:
                    del out[e]
        return LaurentPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            (exp, coeff), = self.terms.items()
            if coeff not in (1, -1):
                raise InexactDivision("negative power needs unit coefficient")
            base = LaurentPoly(
                self.nvars, {tuple(-e for e in exp): coeff}
            )
            return base ** (-k)
        out = LaurentPoly.one(self.nvars)
        sq = self
        while k:
            if k & 1:
                out = out * sq
            sq = sq * sq
            k >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.nvars, frozenset(self.terms.items())))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def shift(self, exp):
        """Multiply by the monomial with exponent vector ``exp``."""
        exp = tuple(int(e) for e in exp)
        if len(exp) != self.nvars:
            raise ArityMismatch("shift vector has wrong length")
        return LaurentPoly(
            self.nvars, {_vec_add(e, exp): c for e, c in self.terms.items()}
        )

    def min_exponents(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no exponent range")
        return tuple(
            min(e[i] for e in self.terms) for i in range(self.nvars)
        )

    def max_exponents(self):
        if not self.terms:
            raise ZeroPolynomial("zero polynomial has no exponent range")
        return tuple(
            max(e[i] for e in self.terms) for i in range(self.nvars)
        )

    def denominator_vector(self, upto=None):
        """Negated minimal exponent per variable, restricted to the first
        ``upto`` variables when given."""
        k = self.nvars if upto is None else int(upto)
        mins = self.min_exponents()
        return tuple(-mins[i] for i in range(k))

    def coefficient(self, exp):
        return self.terms.get(tuple(int(e) for e in exp), 0)

    def specialize_ones(self, indices):
        """Set the listed variables to 1: zero out those exponent slots."""
        idx = set(int(i) for i in indices)
        out = {}
        for exp, c in self.terms.items():
            e = tuple(0 if i in idx else v for i, v in enumerate(exp))
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly(self.nvars, out)

    def drop_vars(self, keep):
        """Project onto the variables listed in ``keep`` (which must carry
        every nonzero exponent)."""
        keep = [int(i) for i in keep]
        keepset = set(keep)
        out = {}
        for exp, c in self.terms.items():
            for i, v in enumerate(exp):
                if v and i not in keepset:
                    raise ArityMismatch(
                        "variable %d still appears with exponent %d" % (i, v)
                    )
            e = tuple(exp[i] for i in keep)
            out[e] = out.get(e, 0) + c
        return LaurentPoly(len(keep), out)

    def substitute_monomials(self, target_nvars, images):
        """Map each variable to a Laurent monomial of a target ring.

        ``images[i]`` is the exponent vector (length ``target_nvars``)
        that variable i is sent to.  Coefficients are untouched.
        """
        if len(images) != self.nvars:
            raise ArityMismatch("need one image per variable")
        images = [tuple(int(e) for e in im) for im in images]
        for im in images:
            if len(im) != target_nvars:
                raise ArityMismatch("image has wrong length")
        out = {}
        for exp, c in self.terms.items():
            e = [0] * target_nvars
            for i, v in enumerate(exp):
                if v:
                    im = images[i]
                    for j in range(target_nvars):
                        e[j] += v * im[j]
            e = tuple(e)
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                del out[e]
        return LaurentPoly(target_nvars, out)

    def substitute(self, images):
        """Full substitution: variable i is replaced by ``images[i]``.

        All images must be Laurent polynomials of one common ring.  Any
        variable used with a negative exponent must map to a monomial.
        """
        if len(images) != self.nvars:
            raise ArityMismatch("need one image per variable")
        if not images:
            raise ArityMismatch("cannot substitute in a 0-variable ring")
        tn = images[0].nvars
        out = LaurentPoly.zero(tn)
        powcache = {}

        def power(i, v):
            key = (i, v)
            if key not in powcache:
                powcache[key] = images[i] ** v
            return powcache[key]

        for exp, c in self.terms.items():
            piece = LaurentPoly.one(tn) * c
            for i, v in enumerate(exp):
                if v:
                    piece = piece * power(i, v)
            out = out + piece
        return out

    def render(self, names=None):
        """Human-readable string; terms in descending lexicographic order."""
        if not self.terms:
            return "0"
        if names is None:
            names = ["x%d" % (i + 1) for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ArityMismatch("need one name per variable")
        pieces = []
        for exp in sorted(self.terms, reverse=True):
            c = self.terms[exp]
            factors = []
            for i, v in enumerate(exp):
                if v == 0:
                    continue
                if v == 1:
                    factors.append(names[i])
                else:
                    factors.append("%s^%d" % (names[i], v))
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = "%d*%s" % (abs(c), "*".join(factors))
            pieces.append((c < 0, body))
        first_neg, first = pieces[0]
        text = ("-" if first_neg else "") + first
        for negp, body in pieces[1:]:
            text += (" - " if negp else " + ") + body
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "LaurentPoly(%d, %s)" % (self.nvars, self.render())


def exact_div(num, den):
    """Exact quotient of integer Laurent polynomials.

    Runs leading-term elimination in descending lexicographic order.
    Every quotient exponent of an exact division lies inside the box
    [min(num) - max(den), max(num) - min(den)] coordinatewise, so any
    candidate outside that box proves the division inexact.
    """
    if not isinstance(num, LaurentPoly) or not isinstance(den, LaurentPoly):
        raise TypeError("exact_div expects LaurentPoly operands")
    if num.nvars != den.nvars:
        raise ArityMismatch("operands have different variable counts")
    if den.is_zero():
        raise ZeroPolynomial("division by zero polynomial")
    if num.is_zero():
        return LaurentPoly.zero(num.nvars)
    lo = _vec_sub(num.min_exponents(), den.max_exponents())
    den_lead = max(den.terms)
    den_lead_coeff = den.terms[den_lead]
    rem = dict(num.terms)
    quo = {}
    steps = 0
    cap = 1_000_000
    while rem:
        steps += 1
        if steps > cap:
            raise InexactDivision("division did not terminate")
        lead = max(rem)
        q_exp = _vec_sub(lead, den_lead)
        if any(q < l for q, l in zip(q_exp, lo)):
            raise InexactDivision("quotient exponent out of range")
        c, r = divmod(rem[lead], den_lead_coeff)
        if r:
            raise InexactDivision("leading coefficient does not divide")
        quo[q_exp] = quo.get(q_exp, 0) + c
        for e, dc in den.terms.items():
            t = _vec_add(q_exp, e)
            s = rem.get(t, 0) - c * dc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return LaurentPoly(num.nvars, quo)


def tropical_evaluate(poly, assignment):
    """Min-plus evaluation of a Laurent polynomial.

    Each variable i is assigned the integer vector ``assignment[i]``;
    a term with exponent t contributes sum_i t_i * assignment[i], and
    terms combine by coordinatewise minimum.  Coefficients are ignored
    (they must be positive).
    """
    if poly.is_zero():
        raise ZeroPolynomial("tropical evaluation of zero")
    if len(assignment) != poly.nvars:
        raise ArityMismatch("need one assignment vector per variable")
    assignment = [tuple(int(x) for x in v) for v in assignment]
    width = len(assignment[0]) if assignment else 0
    for v in assignment:
        if len(v) != width:
            raise ArityMismatch("assignment vectors have mixed lengths")
    best = None
    for exp, coeff in poly.terms.items():
        if coeff < 0:
            raise ValueError("tropical evaluation needs positive coefficients")
        combo = [0] * width
        for i, t in enumerate(exp):
            if t:
                vi = assignment[i]
                for j in range(width):
                    combo[j] += t * vi[j]
        if best is None:
            best = combo
        else:
            best = [min(a, b) for a, b in zip(best, combo)]
    return tuple(best)


class QCoeff:
    """Integer Laurent polynomial in the single variable u.

    u squares to the quantum parameter, so integer u-exponents encode
    half-integer powers of q.  The bar involution sends u to 1/u.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for k, c in terms.items():
                c = int(c)
                if c == 0:
                    continue
                k = int(k)
                clean[k] = clean.get(k, 0) + c
                if clean[k] == 0:
                    del clean[k]
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls):
        return cls({})

    @classmethod
    def one(cls):
        return cls({0: 1})

    @classmethod
    def u_power(cls, k, coeff=1):
        return cls({int(k): coeff})

    @classmethod
    def integer(cls, n):
        return cls({0: int(n)})

    def is_zero(self):
        return not self.terms

    def is_one(self):
        return self.terms == {0: 1}

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = s
            else:
                del out[k]
        return QCoeff(out)

    def __neg__(self):
        return QCoeff({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return QCoeff({k: c * other for k, c in self.terms.items()})
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = ka + kb
                s = out.get(k, 0) + ca * cb
                if s:
                    out[k] = s
                else:
                    del out[k]
        return QCoeff(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by u**k."""
        k = int(k)
        return QCoeff({e + k: c for e, c in self.terms.items()})

    def bar(self):
        """The involution u -> 1/u."""
        return QCoeff({-k: c for k, c in self.terms.items()})

    def is_bar_invariant(self):
        return self == self.bar()

    def __eq__(self, other):
        if not isinstance(other, QCoeff):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def specialize_u(self, value):
        """Evaluate at a concrete invertible value of u (exact types only)."""
        total = 0
        for k, c in self.terms.items():
            total += c * value ** k
        return total

    def at_q_one(self):
        return sum(self.terms.values())

    def render(self):
        if not self.terms:
            return "0"
        pieces = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                body = str(abs(c))
            else:
                mono = "u" if k == 1 else "u^%d" % k
                body = mono if abs(c) == 1 else "%d*%s" % (abs(c), mono)
            pieces.append((c < 0, body))
        first_neg, first = pieces[0]
        text = ("-" if first_neg else "") + first
        for negp, body in pieces[1:]:
            text += (" - " if negp else " + ") + body
        return text

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "QCoeff(%s)" % self.render()


def qdiv(num, den):
    """Exact quotient in the u-Laurent ring; raises on failure.

    Works from the bottom: the lowest term of the quotient is forced,
    and exact quotients have all exponents at most max(num) - max(den).
    """
    if den.is_zero():
        raise ZeroPolynomial("division by zero")
    if num.is_zero():
        return QCoeff.zero()
    hi = max(num.terms) - max(den.terms)
    den_low = min(den.terms)
    den_low_coeff = den.terms[den_low]
    rem = dict(num.terms)
    quo = {}
    while rem:
        low = min(rem)
        k = low - den_low
        if k > hi:
            raise InexactDivision("quotient exponent out of range")
        c, r = divmod(rem[low], den_low_coeff)
        if r:
            raise InexactDivision("lowest coefficient does not divide")
        quo[k] = quo.get(k, 0) + c
        for e, dc in den.terms.items():
            t = k + e
            s = rem.get(t, 0) - c * dc
            if s:
                rem[t] = s
            else:
                rem.pop(t, None)
    return QCoeff(quo)
