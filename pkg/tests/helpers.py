"""Shared oracles and input generators for the test-suite."""

from __future__ import annotations

import random

from simperturb import prf
from simperturb.polys import PREDICATES, SIGN_PREDICATES


class EpsPoly:
    """Polynomial in eps_1..eps_k with integer coefficients, as a dict.

    Used to expand f(x + eps_1 y_1 + ... + eps_k y_k) by running the
    predicate code on these objects, independently of the interpolation path.
    """

    __slots__ = ("terms", "k")

    def __init__(self, terms, k):
        self.terms = {e: c for e, c in terms.items() if c}
        self.k = k

    @classmethod
    def const(cls, c, k):
        return cls({(0,) * k: c}, k)

    def _lift(self, other):
        return other if isinstance(other, EpsPoly) else EpsPoly.const(other, self.k)

    def __add__(self, other):
        o = self._lift(other)
        t = dict(self.terms)
        for e, c in o.terms.items():
            t[e] = t.get(e, 0) + c
        return EpsPoly(t, self.k)

    __radd__ = __add__

    def __neg__(self):
        return EpsPoly({e: -c for e, c in self.terms.items()}, self.k)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        t = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                t[e] = t.get(e, 0) + c1 * c2
        return EpsPoly(t, self.k)

    __rmul__ = __mul__

    def __pow__(self, n):
        out = EpsPoly.const(1, self.k)
        for _ in range(n):
            out = out * self
        return out

    def dominant(self):
        """(exponents, coefficient) of the largest term, or None if zero."""
        if not self.terms:
            return None
        e = min(self.terms, key=lambda e: tuple(reversed(e)))
        return e, self.terms[e]


def expand(f, values, indices, k):
    """f(x + sum eps_j y_j) for j <= k as an EpsPoly, using prf directly."""
    args = []
    for v, i in zip(values, indices):
        terms = {(0,) * k: v}
        for j in range(1, k + 1):
            e = [0] * k
            e[j - 1] = 1
            terms[tuple(e)] = prf.rand_coefficient(j, i)
        args.append(EpsPoly(terms, k))
    return f.fn(*args)


def oracle_sign(f, values, indices, max_level=3):
    """(sign, level) from the symbolic expansion, or (0, None) if unresolved."""
    v = f.fn(*values)
    if v:
        return (1 if v > 0 else -1), 0
    for k in range(1, max_level + 1):
        dom = expand(f, values, indices, k).dominant()
        if dom is not None:
            return (1 if dom[1] > 0 else -1), k
    return 0, None


# Argument layout of each predicate: sizes of the geometric objects.
def groups(name: str) -> list[int]:
    arity = PREDICATES[name].arity
    if name == "diff" or name == "line_disc":
        return [1] * arity
    if name.startswith(("circle_", "below_")):
        return [3] * (arity // 3)
    if name.startswith(("hline_", "linex_")):
        return [3, 3, 1]
    return [2] * (arity // 2)


def is_homogeneous(f, rng) -> bool:
    x = [rng.randint(-50, 50) for _ in range(f.arity)]
    return f.fn(*[2 * v for v in x]) == 2**f.degree * f.fn(*x)


def _candidate(name, rng):
    f = PREDICATES[name]
    sizes = groups(name)
    mode = rng.random()
    if mode < 0.4:
        # Geometric objects repeated from a small pool of atoms.
        pool = {}
        args = []
        m = rng.randint(1, 3)
        for s in sizes:
            a = rng.randrange(m)
            if (s, a) not in pool:
                pool[(s, a)] = [rng.randint(-3, 3) for _ in range(s)]
                if s == 3:
                    pool[(s, a)][2] = abs(pool[(s, a)][2])
            args += pool[(s, a)]
    elif mode < 0.7:
        vals = [rng.randint(-3, 3) for _ in range(rng.randint(1, 2))]
        args = [rng.choice(vals) for _ in range(f.arity)]
    else:
        args = [rng.randint(-2, 2) for _ in range(f.arity)]
    return args


def degenerate_inputs(name, count, rng, scale_bits=40):
    """``count`` argument lists with f(x) == 0 exactly, scaled up when f is homogeneous."""
    f = PREDICATES[name]
    homog = is_homogeneous(f, rng)
    out = []
    while len(out) < count:
        args = _candidate(name, rng)
        if f.fn(*args) != 0:
            continue
        if homog:
            s = rng.randint(1, 1 << scale_bits)
            args = [s * v for v in args]
        out.append(args)
    return out


def random_inputs(name, count, rng, bits=50):
    f = PREDICATES[name]
    lim = 1 << bits
    return [[rng.randint(-lim, lim) for _ in range(f.arity)] for _ in range(count)]


def near_inputs(name, count, rng):
    """Degenerate inputs with some coordinates moved by one unit."""
    out = degenerate_inputs(name, count, rng)
    for args in out:
        for a in range(len(args)):
            if rng.random() < 0.3:
                args[a] += rng.choice((-1, 1))
    return out


def distinct_indices(arity, rng):
    return rng.sample(range(1 << 62), arity)


def query_set(name, per_class, seed):
    """Random, near-degenerate and degenerate queries for one predicate."""
    rng = random.Random(f"{name}:{seed}")
    f = PREDICATES[name]
    out = []
    for cls, gen in (("random", random_inputs), ("near", near_inputs), ("degenerate", degenerate_inputs)):
        for args in gen(name, per_class, rng):
            out.append((cls, args, distinct_indices(f.arity, rng)))
    return out


def compute_signs(queries, shuffle_seed=None):
    """Perturbed signs for ``{name: [(args, indices), ...]}`` as ``{name: bytes}``.

    With ``shuffle_seed`` the queries of all predicates are interleaved in a
    random order before evaluation.
    """
    from simperturb.perturb import perturbed_sign

    jobs = [(name, k) for name, qs in queries.items() for k in range(len(qs))]
    if shuffle_seed is not None:
        random.Random(shuffle_seed).shuffle(jobs)
    out = {name: bytearray(len(qs)) for name, qs in queries.items()}
    for name, k in jobs:
        args, idx = queries[name][k]
        s = perturbed_sign(PREDICATES[name], args, idx)
        out[name][k] = ord("+") if s > 0 else ord("-") if s < 0 else ord("0")
    return {name: bytes(v) for name, v in out.items()}


def signs_main(infile, outfile, shuffle_seed):
    """Subprocess entry: read pickled queries, write pickled signs."""
    import pickle

    with open(infile, "rb") as fh:
        queries = pickle.load(fh)
    seed = None if shuffle_seed < 0 else shuffle_seed
    with open(outfile, "wb") as fh:
        pickle.dump(compute_signs(queries, seed), fh)


__all__ = ["EpsPoly", "expand", "oracle_sign", "groups", "degenerate_inputs", "random_inputs",
           "near_inputs", "distinct_indices", "query_set", "compute_signs", "signs_main", "SIGN_PREDICATES", "PREDICATES"]
