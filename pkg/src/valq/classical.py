"""Commutative cluster engine with principal framing.

Seeds hold their 2n variables as exact Laurent polynomials in the
initial cluster (n mutable x's followed by n frozen y's).  Exchange is
literal: the new variable is an exact Laurent division, never a formal
fraction, so the Laurent property is re-proved on every mutation.
"""

from dataclasses import dataclass

from .exchange import star_left_matrix
from .laurent import LaurentPoly, NegativeExponentInF, exact_div
from .qtorus import GraphResult


class NoConstantTerm(ValueError):
    """A polynomial expected to have constant term 1 does not."""


def default_names(n):
    return ["x%d" % (i + 1) for i in range(n)] + [
        "y%d" % (i + 1) for i in range(n)
    ]


def variable_f_polynomial(poly, n):
    """Frozen part of a 2n-variable expansion: mutable variables set to 1,
    result re-indexed to the n frozen slots.  Exponents must come out
    nonnegative with constant term 1."""
    out = poly.specialize_ones(range(n)).drop_vars(range(n, 2 * n))
    mins = out.min_exponents()
    if any(m < 0 for m in mins):
        raise NegativeExponentInF("frozen exponents must be nonnegative")
    if out.coefficient((0,) * n) != 1:
        raise NoConstantTerm(
            "constant term is %d" % out.coefficient((0,) * n)
        )
    return out


def variable_g_vector(poly, n):
    """Mutable degree of the unique frozen-free term, which must have
    coefficient 1."""
    found = None
    for exp, coeff in poly.terms.items():
        if all(exp[j] == 0 for j in range(n, 2 * n)):
            if found is not None:
                raise ValueError("frozen-free term is not unique")
            if coeff != 1:
                raise ValueError(
                    "frozen-free term has coefficient %d" % coeff
                )
            found = exp[:n]
    if found is None:
        raise ValueError("no frozen-free term")
    return found


@dataclass(frozen=True)
class ClassicalSeed:
    """A commutative seed: framed matrix plus expanded cluster."""

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
            LaurentPoly.variable(size, i) for i in range(size)
        )
        return cls(initial=data, current=data, variables=variables)

    def cluster_monomial(self, c):
        """Product of current variables with nonnegative exponents c."""
        size = 2 * self.current.n
        out = LaurentPoly.one(size)
        for i, e in enumerate(c):
            if e < 0:
                raise ValueError("cluster monomial needs nonnegative exponents")
            if e:
                out = out * self.variables[i] ** e
        return out

    def mutate(self, k):
        cur = self.current
        size = 2 * cur.n
        col = tuple(cur.btilde[i][k] for i in range(size))
        bp = tuple(max(x, 0) for x in col)
        bm = tuple(max(-x, 0) for x in col)
        new_var = exact_div(
            self.cluster_monomial(bp) + self.cluster_monomial(bm),
            self.variables[k],
        )
        variables = list(self.variables)
        variables[k] = new_var
        return ClassicalSeed(
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

    def d_vector(self, i):
        """Denominator vector of variable i in the initial cluster."""
        return self.variables[i].denominator_vector(upto=self.current.n)

    def f_polynomial(self, i):
        """Frozen-variable polynomial of variable i (mutable ones set to 1)."""
        return variable_f_polynomial(self.variables[i], self.current.n)

    def g_vector(self, i):
        """Degree of the unique term of variable i free of frozen variables."""
        return variable_g_vector(self.variables[i], self.current.n)

    def hat_monomials(self):
        """Exponent vectors of the framed-column monomials of the seed."""
        size = 2 * self.current.n
        return [
            tuple(self.current.btilde[i][j] for i in range(size))
            for j in range(self.current.n)
        ]

    def separation_check(self, i):
        """Variable i equals its frozen-free degree times the frozen
        polynomial evaluated at the framed-column monomials."""
        n = self.current.n
        g = self.g_vector(i)
        f = self.f_polynomial(i)
        images = [
            tuple(self.initial.btilde[r][j] for r in range(2 * n))
            for j in range(n)
        ]
        rebuilt = f.substitute_monomials(2 * n, images).shift(
            tuple(g) + (0,) * n
        )
        return rebuilt == self.variables[i]

    def render_variable(self, i):
        return self.variables[i].render(default_names(self.current.n))

    def canonical_key(self):
        n = self.current.n
        strs = [self.variables[i].render() for i in range(n)]
        order = sorted(range(n), key=lambda i: strs[i])
        perm = list(order) + list(range(n, 2 * n))
        bt = self.current.btilde
        bt_p = tuple(
            tuple(bt[perm[i]][order[j]] for j in range(n))
            for i in range(2 * n)
        )
        return (tuple(strs[i] for i in order), bt_p)


def g_from_d(data, d):
    """The degree vector forced by a nonnegative denominator vector."""
    e = star_left_matrix(data.btilde[: data.n])
    return tuple(
        -sum(e[i][j] * d[j] for j in range(data.n)) for i in range(data.n)
    )


def enumerate_exchange_graph(data, max_depth=None, max_seeds=10000):
    """Breadth-first walk of the commutative exchange graph."""
    start = ClassicalSeed.initial_seed(data)
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


def cluster_variable_index(result):
    """Map each distinct mutable variable to the seed indices holding it."""
    where = {}
    for idx, seed in enumerate(result.seeds):
        for i in range(seed.current.n):
            key = seed.variables[i]
            where.setdefault(key, set()).add(idx)
    return where


def subgraph_is_connected(result, node_set):
    """Connectivity of the induced subgraph on the given seed indices."""
    nodes = set(node_set)
    if not nodes:
        return True
    adjacency = {v: set() for v in nodes}
    for edge in result.edges:
        a, b = tuple(edge)
        if a in nodes and b in nodes:
            adjacency[a].add(b)
            adjacency[b].add(a)
    start = next(iter(nodes))
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adjacency[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == nodes


def graph_to_dot(result, label_depth=True):
    lines = ["graph exchange {"]
    for idx, seed in enumerate(result.seeds):
        label = "seed %d" % idx
        if label_depth:
            label += " (depth %d)" % seed.depth
        lines.append('  n%d [label="%s"];' % (idx, label))
    for edge in sorted(tuple(sorted(e)) for e in result.edges):
        lines.append("  n%d -- n%d;" % edge)
    lines.append("}")
    return "\n".join(lines)
