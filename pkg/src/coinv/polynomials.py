"""Exact sparse multivariate polynomials over the rationals.

Polynomials live in a fixed number of variables x_1..x_n with arbitrary
precision rational coefficients.  Each variable carries cohomological
degree two, so every externally reported degree is twice the exponent
sum; internal bookkeeping uses plain exponent sums throughout.

The canonical term order is graded lexicographic: compare total exponent
first, then exponent vectors left to right (so x_1 beats x_2 within a
degree).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import NotDivisibleError
from .reporting import Report
from .shapes import Composition

try:
    from gmpy2 import mpq as Q
except ImportError:  # pragma: no cover - gmpy2 is a declared dependency
    from fractions import Fraction as Q

QZERO = Q(0)
QONE = Q(1)


def grlex_key(exp: tuple) -> tuple:
    return (sum(exp), exp)


class Poly:
    """Immutable sparse polynomial: exponent tuple -> non-zero rational."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: dict | None = None, *, _clean: bool = False):
        object.__setattr__(self, "n", int(n))
        if terms is None:
            terms = {}
        if not _clean:
            terms = {
                tuple(e): Q(c) for e, c in terms.items() if c != 0
            }
            for e in terms:
                if len(e) != n or any(x < 0 for x in e):
                    raise ValueError(f"bad exponent vector {e} for n={n}")
        object.__setattr__(self, "terms", terms)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # ------------------------------------------------------------------
    # constructors

    @classmethod
    def zero(cls, n: int) -> "Poly":
        return cls(n, {}, _clean=True)

    @classmethod
    def const(cls, n: int, c) -> "Poly":
        c = Q(c)
        if c == 0:
            return cls.zero(n)
        return cls(n, {(0,) * n: c}, _clean=True)

    @classmethod
    def one(cls, n: int) -> "Poly":
        return cls.const(n, 1)

    @classmethod
    def var(cls, n: int, i: int) -> "Poly":
        """The generator x_i (1-based)."""
        if not 1 <= i <= n:
            raise ValueError(f"variable index {i} out of range 1..{n}")
        exp = tuple(1 if j == i - 1 else 0 for j in range(n))
        return cls(n, {exp: QONE}, _clean=True)

    @classmethod
    def monomial(cls, n: int, exp: Sequence[int], c=1) -> "Poly":
        c = Q(c)
        if c == 0:
            return cls.zero(n)
        exp = tuple(int(x) for x in exp)
        if len(exp) != n or any(x < 0 for x in exp):
            raise ValueError(f"bad exponent vector {exp} for n={n}")
        return cls(n, {exp: c}, _clean=True)

    # ------------------------------------------------------------------
    # basic queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def degree(self):
        """Top reported (doubled) degree, or None for the zero polynomial."""
        if not self.terms:
            return None
        return 2 * max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict:
        """Split by internal degree (exponent sum)."""
        out: dict = {}
        for e, c in self.terms.items():
            out.setdefault(sum(e), {})[e] = c
        return {d: Poly(self.n, t, _clean=True) for d, t in sorted(out.items())}

    def leading(self) -> tuple:
        """(exponent, coefficient) of the largest term in the term order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        e = max(self.terms, key=grlex_key)
        return e, self.terms[e]

    def coefficient(self, exp: Sequence[int]):
        return self.terms.get(tuple(exp), QZERO)

    def constant(self):
        return self.terms.get((0,) * self.n, QZERO)

    # ------------------------------------------------------------------
    # arithmetic

    def _coerce(self, other):
        if isinstance(other, Poly):
            if other.n != self.n:
                raise ValueError("mixed variable counts")
            return other
        return Poly.const(self.n, other)

    def __add__(self, other) -> "Poly":
        other = self._coerce(other)
        if not self.terms:
            return other
        if not other.terms:
            return self
        terms = dict(self.terms)
        for e, c in other.terms.items():
            s = terms.get(e)
            if s is None:
                terms[e] = c
            else:
                s = s + c
                if s == 0:
                    del terms[e]
                else:
                    terms[e] = s
        return Poly(self.n, terms, _clean=True)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.n, {e: -c for e, c in self.terms.items()}, _clean=True)

    def __sub__(self, other) -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Poly":
        return self._coerce(other) + (-self)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = Q(other)
            if c == 0:
                return Poly.zero(self.n)
            return Poly(
                self.n, {e: k * c for e, k in self.terms.items()}, _clean=True
            )
        if other.n != self.n:
            raise ValueError("mixed variable counts")
        if not self.terms or not other.terms:
            return Poly.zero(self.n)
        a, b = self.terms, other.terms
        if len(a) > len(b):
            a, b = b, a
        out: dict = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                s = out.get(e)
                if s is None:
                    out[e] = c1 * c2
                else:
                    s = s + c1 * c2
                    if s == 0:
                        del out[e]
                    else:
                        out[e] = s
        return Poly(self.n, out, _clean=True)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "Poly":
        c = Q(scalar)
        if c == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self * (QONE / c)

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one(self.n)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    # ------------------------------------------------------------------
    # symmetric group action

    def apply_permutation(self, w: Sequence[int]) -> "Poly":
        """Substitute x_j -> x_{w(j)} where ``w[j-1]`` is the image of j."""
        if len(w) != self.n or sorted(w) != list(range(1, self.n + 1)):
            raise ValueError(f"not a permutation of 1..{self.n}: {w}")
        out: dict = {}
        for e, c in self.terms.items():
            ne = [0] * self.n
            for j, x in enumerate(e):
                if x:
                    ne[w[j] - 1] = x
            e2 = tuple(ne)
            s = out.get(e2)
            out[e2] = c if s is None else s + c
        return Poly(self.n, {e: c for e, c in out.items() if c != 0}, _clean=True)

    # ------------------------------------------------------------------
    # presentation

    def __repr__(self) -> str:
        return f"Poly({self.n}, {self!s})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                f"x{j + 1}" if k == 1 else f"x{j + 1}^{k}"
                for j, k in enumerate(e)
                if k
            )
            if not mono:
                piece = str(c)
            elif c == 1:
                piece = mono
            elif c == -1:
                piece = f"-{mono}"
            else:
                piece = f"{c}*{mono}"
            bits.append(piece)
        out = " + ".join(bits)
        return out.replace("+ -", "- ")

    def to_json(self) -> list:
        out = []
        for e in sorted(self.terms, key=grlex_key):
            c = self.terms[e]
            out.append(
                {
                    "exp": list(e),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
            )
        return out

    @classmethod
    def from_json(cls, n: int, data: Iterable[dict]) -> "Poly":
        terms = {}
        for item in data:
            exp = tuple(int(x) for x in item["exp"])
            c = Q(int(item["num"]), int(item["den"]))
            if c != 0:
                terms[exp] = terms.get(exp, QZERO) + c
        return cls(n, {e: c for e, c in terms.items() if c != 0})


# ----------------------------------------------------------------------
# block structures and the symmetric group of a composition


class BlockStructure:
    """The variable blocks cut out by a composition of n.

    Block ``i`` owns the 1-based variables strictly after the partial sum
    through ``i - 1`` and up to the partial sum through ``i``.
    """

    def __init__(self, nu: Composition):
        self.nu = nu
        self.n = nu.n

    def block(self, i: int) -> tuple:
        return tuple(self.nu.block_range(i))

    def blocks(self) -> list:
        return [self.block(i) for i in self.nu.indices() if self.nu[i] > 0]

    def union(self, indices: Iterable[int]) -> tuple:
        seen = []
        for i in indices:
            seen.extend(self.block(i))
        return tuple(sorted(seen))


@lru_cache(maxsize=None)
def _perms_with_signs(size: int) -> tuple:
    """All permutations of range(size) with signs."""
    out = []
    for p in itertools.permutations(range(size)):
        inv = sum(
            1
            for a in range(size)
            for b in range(a + 1, size)
            if p[a] > p[b]
        )
        out.append((p, -1 if inv % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _group_of_blocks(blocks: tuple, n: int) -> tuple:
    """Elements of the product of symmetric groups on the given blocks.

    Returns (w, sign) pairs where w is the full permutation of 1..n as a
    tuple with w[j-1] = image of j.
    """
    identity = list(range(1, n + 1))
    group = [(tuple(identity), 1)]
    for block in blocks:
        new = []
        for p, s in _perms_with_signs(len(block)):
            for w, sw in group:
                w2 = list(w)
                for pos, j in enumerate(block):
                    w2[j - 1] = w[block[p[pos]] - 1]
                new.append((tuple(w2), s * sw))
        group = new
    return tuple(group)


def block_group(nu: Composition, n: int | None = None) -> tuple:
    """The Young subgroup fixing the blocks of ``nu``, with signs."""
    if n is None:
        n = nu.n
    blocks = tuple(
        tuple(nu.block_range(i)) for i in nu.indices() if nu[i] > 1
    )
    return _group_of_blocks(blocks, n)


def symmetrize(f: Poly, nu: Composition) -> Poly:
    """Average of the orbit of ``f`` under the block subgroup of ``nu``."""
    group = block_group(nu, f.n)
    if len(group) == 1:
        return f
    total = Poly.zero(f.n)
    for w, _ in group:
        total = total + f.apply_permutation(w)
    return total / len(group)


def antisymmetrize(f: Poly, nu: Composition) -> Poly:
    """Signed average of the orbit of ``f`` under the block subgroup of ``nu``."""
    group = block_group(nu, f.n)
    if len(group) == 1:
        return f
    total = Poly.zero(f.n)
    for w, s in group:
        g = f.apply_permutation(w)
        total = total + (g if s == 1 else -g)
    return total / len(group)


# ----------------------------------------------------------------------
# division


def exact_divide(f: Poly, g: Poly) -> Poly:
    """Quotient f/g when g divides f exactly; NotDivisibleError otherwise."""
    if g.is_zero:
        raise ZeroDivisionError("division by zero polynomial")
    if f.n != g.n:
        raise ValueError("mixed variable counts")
    n = f.n
    ge, gc = g.leading()
    quotient: dict = {}
    rem = f
    while not rem.is_zero:
        re, rc = rem.leading()
        qe = tuple(a - b for a, b in zip(re, ge))
        if any(x < 0 for x in qe):
            raise NotDivisibleError(f"leading term x^{re} not divisible by x^{ge}")
        qc = rc / gc
        quotient[qe] = qc
        rem = rem - Poly.monomial(n, qe, qc) * g
    return Poly(n, quotient)


# ----------------------------------------------------------------------
# symmetric polynomials on chosen variables


@lru_cache(maxsize=None)
def _e_cached(n: int, vars_: tuple, r: int) -> Poly:
    if r < 0:
        return Poly.zero(n)
    if r == 0:
        return Poly.one(n)
    if r > len(vars_):
        return Poly.zero(n)
    terms = {}
    for combo in itertools.combinations(vars_, r):
        exp = [0] * n
        for j in combo:
            exp[j - 1] = 1
        terms[tuple(exp)] = QONE
    return Poly(n, terms, _clean=True)


@lru_cache(maxsize=None)
def _h_cached(n: int, vars_: tuple, r: int) -> Poly:
    if r < 0:
        return Poly.zero(n)
    if r == 0:
        return Poly.one(n)
    if not vars_:
        return Poly.zero(n)
    terms = {}
    for combo in itertools.combinations_with_replacement(vars_, r):
        exp = [0] * n
        for j in combo:
            exp[j - 1] += 1
        terms[tuple(exp)] = QONE
    return Poly(n, terms, _clean=True)


def _check_vars(n: int, vars_: Iterable[int]) -> tuple:
    out = tuple(sorted(int(v) for v in vars_))
    if any(not 1 <= v <= n for v in out):
        raise ValueError(f"variable index out of range 1..{n}: {out}")
    if len(set(out)) != len(out):
        raise ValueError(f"repeated variable index in {out}")
    return out

def e_sym(n: int, vars_: Iterable[int], r: int) -> Poly:
    """Elementary symmetric polynomial of degree r in chosen variables.

    Conventions: zero for r < 0 and for r beyond the variable count; one
    for r = 0.
    """
    return _e_cached(n, _check_vars(n, vars_), int(r))


def h_sym(n: int, vars_: Iterable[int], r: int) -> Poly:
    """Complete homogeneous symmetric polynomial of degree r in chosen variables.

    Conventions: zero for r < 0, one for r = 0.
    """
    return _h_cached(n, _check_vars(n, vars_), int(r))


def _block_union(nu: Composition, indices: Iterable[int]) -> tuple:
    idx = list(indices)
    if len(set(idx)) != len(idx):
        raise ValueError(f"repeated block index in {idx}")
    out = []
    for i in idx:
        out.extend(nu.block_range(i))
    return tuple(sorted(out))


def e_block(nu: Composition, indices: Iterable[int], r: int) -> Poly:
    """Elementary symmetric polynomial on a union of blocks of ``nu``."""
    return e_sym(nu.n, _block_union(nu, indices), r)


def h_block(nu: Composition, indices: Iterable[int], r: int) -> Poly:
    """Complete symmetric polynomial on a union of blocks of ``nu``."""
    return h_sym(nu.n, _block_union(nu, indices), r)


# ----------------------------------------------------------------------
# normalized difference products


def _pair_product(n: int, pairs: Iterable[tuple]) -> Poly:
    out = Poly.one(n)
    for i, j in pairs:
        out = out * (Poly.var(n, i) - Poly.var(n, j))
    return out


def eps_full(n: int) -> Poly:
    """(1/n!) times the product of all differences x_i - x_j, i < j."""
    prod = _pair_product(n, ((i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)))
    return prod / math.factorial(n)


def eps_nu(nu: Composition) -> Poly:
    """Difference product over pairs inside a common block, divided by |S_nu|."""
    n = nu.n
    order = 1
    prod = Poly.one(n)
    for i in nu.indices():
        block = list(nu.block_range(i))
        order *= math.factorial(len(block))
        prod = prod * _pair_product(
            n, ((a, b) for ai, a in enumerate(block) for b in block[ai + 1:])
        )
    return prod / order


def move_index(nu: Composition, nu_prime: Composition) -> int:
    """The index i with nu_prime == nu.lower_at(i); error when there is none."""
    if nu.n != nu_prime.n:
        raise ValueError("totals differ")
    lo = min(nu.lo, nu_prime.lo)
    hi = max(nu.hi, nu_prime.hi)
    for i in range(lo - 1, hi + 1):
        if nu[i] > 0 and nu.lower_at(i) == nu_prime:
            return i
    raise ValueError(f"{nu_prime!r} is not obtained from {nu!r} by one move")


def eps_pair(nu: Composition, nu_prime: Composition) -> Poly:
    """Difference product for the common stabilizer of a one-move pair.

    The stabilizer of both block structures is the block group of the
    common refinement splitting off the moved variable as a singleton.
    """
    i = move_index(nu, nu_prime)
    return eps_nu(nu.refine_at(i))


# ----------------------------------------------------------------------
# identity suite


def verify_identity_suite(n: int, r_max: int) -> Report:
    """Exact checks of the classical e/h identities in n variables.

    Splits range over all disjoint pairs of subsets of {1..n}; every check
    compares polynomials exactly and failures are reported, not raised.
    """
    report = Report(f"symmetric-function identities, n={n}, r_max={r_max}")
    universe = list(range(1, n + 1))
    full = tuple(universe)
    subsets = [
        tuple(s)
        for size in range(n + 1)
        for s in itertools.combinations(universe, size)
    ]

    ok = True
    for sub in subsets:
        for r in range(1, r_max + 1):
            acc = Poly.zero(n)
            for s in range(0, r + 1):
                term = e_sym(n, sub, s) * h_sym(n, sub, r - s)
                acc = acc + (term if s % 2 == 0 else -term)
            if not acc.is_zero:
                ok = False
    report.add("eh_alternating_sum_vanishes", ok)

    splits = []
    for a_set in subsets:
        rest = [j for j in universe if j not in a_set]
        for size in range(len(rest) + 1):
            for b_set in itertools.combinations(rest, size):
                splits.append((a_set, b_set))

    ok_h = ok_e = ok_hc = ok_ec = True
    for a_set, b_set in splits:
        union = tuple(sorted(a_set + b_set))
        for r in range(0, r_max + 1):
            lhs = h_sym(n, union, r)
            rhs = Poly.zero(n)
            for s in range(0, r + 1):
                rhs = rhs + h_sym(n, a_set, s) * h_sym(n, b_set, r - s)
            if lhs != rhs:
                ok_h = False

            lhs = e_sym(n, union, r)
            rhs = Poly.zero(n)
            for s in range(0, r + 1):
                rhs = rhs + e_sym(n, a_set, s) * e_sym(n, b_set, r - s)
            if lhs != rhs:
                ok_e = False

            lhs = h_sym(n, a_set, r)
            rhs = Poly.zero(n)
            for s in range(0, r + 1):
                term = e_sym(n, b_set, s) * h_sym(n, union, r - s)
                rhs = rhs + (term if s % 2 == 0 else -term)
            if lhs != rhs:
                ok_hc = False

            lhs = e_sym(n, a_set, r)
            rhs = Poly.zero(n)
            for s in range(0, r + 1):
                term = h_sym(n, b_set, s) * e_sym(n, union, r - s)
                rhs = rhs + (term if s % 2 == 0 else -term)
            if lhs != rhs:
                ok_ec = False
    report.add("h_splits_over_disjoint_union", ok_h)
    report.add("e_splits_over_disjoint_union", ok_e)
    report.add("h_of_subset_via_complement", ok_hc)
    report.add("e_of_subset_via_complement", ok_ec)

    ok = True
    for j in universe:
        xj = Poly.var(n, j)
        acc = Poly.zero(n)
        for s in range(0, n + 1):
            term = e_sym(n, full, s) * xj ** (n - s)
            acc = acc + (term if s % 2 == 0 else -term)
        if not acc.is_zero:
            ok = False
    report.add("generator_annihilates_characteristic_sum", ok)

    ok = True
    for j in universe:
        others = tuple(v for v in universe if v != j)
        xj = Poly.var(n, j)
        for m in range(0, r_max + 1):
            rhs = Poly.zero(n)
            for s in range(0, n):
                term = e_sym(n, others, s) * h_sym(n, full, m - s)
                rhs = rhs + (term if s % 2 == 0 else -term)
            if xj ** m != rhs:
                ok = False
    report.add("power_reduces_to_e_h_combination", ok)

    return report
