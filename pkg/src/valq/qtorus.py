"""Quantum torus elements and quantum seed mutation.

The torus is based: elements are finite sums of bar-invariant basis
monomials X^a (a in Z^{2n}) with coefficients in the u-Laurent ring,
multiplying by X^a * X^b = u^(a^T L b) * X^(a+b) for the fixed skew
form L.  Quantum seeds keep their cluster variables expanded in the
initial torus, so mutation needs one exact right division per step.
"""

from dataclasses import dataclass

from .laurent import InexactDivision, LaurentPoly, QCoeff, qdiv


class LambdaMismatch(ValueError):
    """Operands live over different skew forms."""


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


class QTorusElem:
    """Element of the based quantum torus attached to a skew form."""

    __slots__ = ("lam", "nvars", "terms", "_hash")

    def __init__(self, lam, terms=None):
        self.lam = lam
        self.nvars = len(lam)
        clean = {}
        if terms:
            for exp, coeff in terms.items():
                if coeff.is_zero():
                    continue
                exp = tuple(int(e) for e in exp)
                if len(exp) != self.nvars:
                    raise LambdaMismatch("exponent length mismatch")
                if exp in clean:
                    clean[exp] = clean[exp] + coeff
                    if clean[exp].is_zero():
                        del clean[exp]
                else:
                    clean[exp] = coeff
        self.terms = clean
        self._hash = None

    @classmethod
    def zero(cls, lam):
        return cls(lam, {})

    @classmethod
    def one(cls, lam):
        return cls(lam, {(0,) * len(lam): QCoeff.one()})

    @classmethod
    def basis_elem(cls, lam, exp, coeff=None):
        return cls(lam, {tuple(exp): coeff if coeff is not None else QCoeff.one()})

    def _check(self, other):
        if self.lam is not other.lam and self.lam != other.lam:
            raise LambdaMismatch("different skew forms")

    def lam_form(self, a, b):
        total = 0
        for i, x in enumerate(a):
            if x:
                row = self.lam[i]
                for j, y in enumerate(b):
                    if y and row[j]:
                        total += x * row[j] * y
        return total

    def is_zero(self):
        return not self.terms

    def is_monomial(self):
        return len(self.terms) == 1

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            if exp in out:
                s = out[exp] + c
                if s.is_zero():
                    del out[exp]
                else:
                    out[exp] = s
            else:
                out[exp] = c
        return QTorusElem(self.lam, out)

    def __neg__(self):
        return QTorusElem(self.lam, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        self._check(other)
        out = {}
        for ea, ca in self.terms.items():
            for eb, cb in other.terms.items():
                e = _vec_add(ea, eb)
                c = (ca * cb).shift(self.lam_form(ea, eb))
                if e in out:
                    s = out[e] + c
                    if s.is_zero():
                        del out[e]
                    else:
                        out[e] = s
                else:
                    out[e] = c
        return QTorusElem(self.lam, out)

    def scale(self, coeff):
        if isinstance(coeff, int):
            coeff = QCoeff.integer(coeff)
        return QTorusElem(
            self.lam, {e: c * coeff for e, c in self.terms.items()}
        )

    def shift_u(self, k):
        return QTorusElem(
            self.lam, {e: c.shift(k) for e, c in self.terms.items()}
        )

    def __pow__(self, k):
        k = int(k)
        if k < 0:
            if not self.is_monomial():
                raise InexactDivision("negative power of a non-monomial")
            (exp, coeff), = self.terms.items()
            if coeff.terms and len(coeff.terms) == 1:
                (uk, c), = coeff.terms.items()
                if c in (1, -1):
                    inv = QTorusElem(
                        self.lam,
                        {tuple(-e for e in exp): QCoeff.u_power(-uk, c)},
                    )
                    return inv ** (-k)
            raise InexactDivision("negative power needs a unit coefficient")
        out = QTorusElem.one(self.lam)
        sq = self
        while k:
            if k & 1:
                out = out * sq
            sq = sq * sq
            k >>= 1
        return out

    def bar(self):
        """Bar involution: conjugate every coefficient, fix the basis."""
        return QTorusElem(
            self.lam, {e: c.bar() for e, c in self.terms.items()}
        )

    def is_bar_invariant(self):
        return self == self.bar()

    def __eq__(self, other):
        if not isinstance(other, QTorusElem):
            return NotImplemented
        return self.lam == other.lam and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(
                (self.lam, frozenset(self.terms.items()))
            )
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def div_right(self, den):
        """Exact right quotient: the element Q with self == Q * den.

        Leading-exponent elimination in lexicographic order; exponents
        add under the twisted product, so the quotient's support must
        stay in the coordinatewise box allowed by the two supports.
        """
        self._check(den)
        if den.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return QTorusElem.zero(self.lam)
        num_min = tuple(
            min(e[i] for e in self.terms) for i in range(self.nvars)
        )
        den_max_all = tuple(
            max(e[i] for e in den.terms) for i in range(self.nvars)
        )
        lo = _vec_sub(num_min, den_max_all)
        den_lead = max(den.terms)
        den_lead_coeff = den.terms[den_lead]
        rem = dict(self.terms)
        quo = {}
        steps = 0
        while rem:
            steps += 1
            if steps > 1_000_000:
                raise InexactDivision("division did not terminate")
            lead = max(rem)
            q_exp = _vec_sub(lead, den_lead)
            if any(q < l for q, l in zip(q_exp, lo)):
                raise InexactDivision("quotient exponent out of range")
            twist = self.lam_form(q_exp, den_lead)
            q_coeff = qdiv(rem[lead], den_lead_coeff.shift(twist))
            quo[q_exp] = quo.get(q_exp, QCoeff.zero()) + q_coeff
            for e, dc in den.terms.items():
                t = _vec_add(q_exp, e)
                c = (q_coeff * dc).shift(self.lam_form(q_exp, e))
                if t in rem:
                    s = rem[t] - c
                    if s.is_zero():
                        del rem[t]
                    else:
                        rem[t] = s
                else:
                    rem[t] = -c
        return QTorusElem(self.lam, quo)

    def specialize_q1(self):
        """Set u to 1, landing in the commutative Laurent ring."""
        return LaurentPoly(
            self.nvars, {e: c.at_q_one() for e, c in self.terms.items()}
        )

    def sorted_terms(self):
        return [(e, self.terms[e]) for e in sorted(self.terms, reverse=True)]

    def render(self):
        if not self.terms:
            return "0"
        pieces = []
        for exp, coeff in self.sorted_terms():
            mono = "X^(%s)" % ",".join(str(e) for e in exp)
            cs = coeff.render()
            if cs == "1":
                pieces.append(mono)
            elif len(coeff.terms) == 1 and not cs.startswith("-"):
                pieces.append("%s*%s" % (cs, mono))
            else:
                pieces.append("(%s)*%s" % (cs, mono))
        return " + ".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return "QTorusElem(%s)" % self.render()


@dataclass(frozen=True)
class QuantumSeed:
    """A quantum seed with variables expanded in the initial torus.

    ``initial`` fixes the ambient torus, ``current`` carries the framed
    matrix and skew form after the mutations in ``history``, and
    ``variables`` lists the n mutable cluster variables followed by the
    n frozen ones (the frozen block never changes).
    """

    initial: object
    current: object
    variables: tuple
    history: tuple = ()

    @property
    def depth(self):
        return len(self.history)

    @classmethod
    def initial_seed(cls, data):
        size = 2 * data.n
        variables = tuple(
            QTorusElem.basis_elem(
                data.lam, tuple(1 if j == i else 0 for j in range(size))
            )
            for i in range(size)
        )
        return cls(initial=data, current=data, variables=variables)

    def frame_monomial(self, c):
        """The bar-invariant ordered monomial of the current cluster.

        Mutable entries of c must be nonnegative unless the variable is
        still a basis monomial; frozen entries may have either sign.
        """
        c = tuple(int(x) for x in c)
        size = 2 * self.current.n
        if len(c) != size:
            raise LambdaMismatch("frame exponent has wrong length")
        lam = self.current.lam
        twist = 0
        for i in range(size):
            if c[i]:
                for j in range(i + 1, size):
                    if c[j] and lam[i][j]:
                        twist += lam[i][j] * c[i] * c[j]
        out = QTorusElem.basis_elem(
            self.initial.lam, (0,) * size, QCoeff.u_power(-twist)
        )
        for i in range(size):
            if c[i]:
                out = out * self.variables[i] ** c[i]
        return out

    def mutate(self, k):
        cur = self.current
        n = cur.n
        size = 2 * n
        col = tuple(cur.btilde[i][k] for i in range(size))
        bp = tuple(max(x, 0) for x in col)
        bm = tuple(max(-x, 0) for x in col)
        eps = tuple(1 if i == k else 0 for i in range(size))
        lam_col = tuple(cur.lam[i][k] for i in range(size))

        def twist(c):
            return sum((c[i] - eps[i]) * lam_col[i] for i in range(size))

        rhs = self.frame_monomial(bp).shift_u(twist(bp)) + self.frame_monomial(
            bm
        ).shift_u(twist(bm))
        new_var = rhs.div_right(self.variables[k])
        variables = list(self.variables)
        variables[k] = new_var
        return QuantumSeed(
            initial=self.initial,
            current=cur.mutate(k),
            variables=tuple(variables),
            history=self.history + (k,),
        )

    def mutate_sequence(self, seq):
        seed = self
        for k in seq:
            seed = seed.mutate(k)
        return seed

    def canonical_key(self):
        """Key identifying the seed up to renumbering its cluster."""
        n = self.current.n
        strs = [self.variables[i].render() for i in range(n)]
        order = sorted(range(n), key=lambda i: strs[i])
        perm = list(order) + list(range(n, 2 * n))
        bt = self.current.btilde
        lam = self.current.lam
        bt_p = tuple(
            tuple(bt[perm[i]][order[j]] for j in range(n))
            for i in range(2 * n)
        )
        lam_p = tuple(
            tuple(lam[perm[i]][perm[j]] for j in range(2 * n))
            for i in range(2 * n)
        )
        return (tuple(strs[i] for i in order), bt_p, lam_p)


@dataclass
class GraphResult:
    """Outcome of an exchange graph walk."""

    seeds: list
    edges: set
    truncated: bool

    @property
    def count(self):
        return len(self.seeds)


def enumerate_quantum_seeds(data, max_depth=None, max_seeds=10000):
    """Breadth-first walk of the quantum exchange graph.

    Seeds are identified up to cluster renumbering.  The walk is
    truncated (and flagged) when a depth or seed cap is hit.
    """
    start = QuantumSeed.initial_seed(data)
    seen = {start.canonical_key(): 0}
    seeds = [start]
    edges = set()
    frontier = [(start, 0)]
    truncated = False
    while frontier:
        new_frontier = []
        for seed, idx in frontier:
            if max_depth is not None and seed.depth >= max_depth:
                truncated = True
                continue
            for k in range(data.n):
                nxt = seed.mutate(k)
                key = nxt.canonical_key()
                if key in seen:
                    j = seen[key]
                    if j != idx:
                        edges.add(frozenset((idx, j)))
                    continue
                if len(seeds) >= max_seeds:
                    truncated = True
                    continue
                seen[key] = len(seeds)
                edges.add(frozenset((idx, len(seeds))))
                seeds.append(nxt)
                new_frontier.append((nxt, len(seeds) - 1))
        frontier = new_frontier
    return GraphResult(seeds=seeds, edges=edges, truncated=truncated)
