"""Bimodule adjunction calculus for one raising/lowering step.

The refined quotient sits over both neighbouring quotients as a free
module of rank a+1 (over the nu side) and b+1 (over the nu_prime side).
Each side carries a perfect pairing given by multiplying and pushing
forward; the units of the two adjunctions are the Casimir elements of
these pairings and the counits are the pairings themselves.  Trace maps
close a unit against the opposite pushforward and must reproduce the
Chevalley operators; that equality is the module's main test surface.

All natural transformations are evaluated on regular modules only, and
tensor elements are canonicalized eagerly over the power bases so that
equality is decidable.
"""

from __future__ import annotations

from .glaction import (
    KeySituation,
    apply_E_oracle,
    apply_F_oracle,
    decompose_over,
    push_p,
    push_p_poly,
    push_p_prime,
    push_p_prime_poly,
)
from .polynomials import Poly, e_block
from .quotients import QuotientElement, presentation
from .reporting import Report
from .shapes import compositions_of


def _as_poly(ks: KeySituation, x) -> Poly:
    if isinstance(x, QuotientElement):
        return x.rep
    if isinstance(x, Poly):
        return x
    return Poly.const(ks.n, x)


class ModuleHom:
    """Base-ring-linear map out of the refined quotient.

    direction "nu": an element of Hom over the nu-side base ring,
    recorded by its values on the basis powers x_k^0..x_k^a; direction
    "nu_prime" mirrors with powers up to b.
    """

    __slots__ = ("ks", "direction", "values")

    def __init__(self, ks: KeySituation, direction: str, values):
        if direction not in ("nu", "nu_prime"):
            raise ValueError("direction must be 'nu' or 'nu_prime'")
        rank = (ks.a if direction == "nu" else ks.b) + 1
        values = tuple(values)
        if len(values) != rank:
            raise ValueError(f"expected {rank} basis values, got {len(values)}")
        self.ks = ks
        self.direction = direction
        self.values = values

    def evaluate(self, y) -> QuotientElement:
        """Apply the map to an arbitrary element of the refined quotient."""
        ks = self.ks
        base = presentation(ks.nu if self.direction == "nu" else ks.nu_prime)
        coeffs = decompose_over(ks, _as_poly(ks, y), self.direction)
        acc = Poly.zero(ks.n)
        for w, val in zip(coeffs, self.values):
            if not w.is_zero:
                acc = acc + w * val.rep
        return base.normal_form(acc)

    def __eq__(self, other) -> bool:
        if not isinstance(other, ModuleHom):
            return NotImplemented
        return (
            self.direction == other.direction
            and self.ks.nu == other.ks.nu
            and self.ks.i == other.ks.i
            and self.values == other.values
        )

    def __repr__(self) -> str:
        vals = ", ".join(repr(v) for v in self.values)
        return f"ModuleHom({self.direction}; [{vals}])"

    def to_json(self) -> dict:
        return {
            "direction": self.direction,
            "values": [v.to_json() for v in self.values],
        }


class PowerBasisTensor:
    """Canonicalized element of a two-factor tensor product.

    shape "nu": the tensor joined over the nu_prime side with outer
    coefficients in the nu-side quotient (powers r <= b, s <= a).
    shape "nu_prime" mirrors (r <= a, s <= b, nu_prime coefficients).
    """

    __slots__ = ("ks", "shape", "coeffs")

    def __init__(self, ks: KeySituation, shape: str, coeffs: dict):
        if shape not in ("nu", "nu_prime"):
            raise ValueError("shape must be 'nu' or 'nu_prime'")
        self.ks = ks
        self.shape = shape
        self.coeffs = {k: v for k, v in coeffs.items() if not v.is_zero}

    @classmethod
    def from_pairs(cls, ks: KeySituation, shape: str, pairs):
        """Canonicalize a sum of left x right factor pairs.

        Left factors are decomposed over the junction side and slid
        across; the collected right factors are then decomposed over the
        coefficient side.
        """
        junction = "nu_prime" if shape == "nu" else "nu"
        r_max = ks.b if shape == "nu" else ks.a
        n = ks.n
        collected = [Poly.zero(n) for _ in range(r_max + 1)]
        for left, right in pairs:
            left = _as_poly(ks, left)
            right = _as_poly(ks, right)
            if left.is_zero or right.is_zero:
                continue
            for r, z in enumerate(decompose_over(ks, left, junction)):
                if not z.is_zero:
                    collected[r] = collected[r] + z * right
        base = presentation(ks.nu if shape == "nu" else ks.nu_prime)
        coeffs = {}
        for r, y in enumerate(collected):
            if y.is_zero:
                continue
            for s, c in enumerate(decompose_over(ks, y, shape)):
                val = base.normal_form(c)
                if not val.is_zero:
                    coeffs[(r, s)] = val
        return cls(ks, shape, coeffs)

    def pairs(self) -> list:
        """The canonical entries as explicit factor pairs."""
        n, k = self.ks.n, self.ks.k
        xk = Poly.var(n, k)
        return [
            (xk**r, c.rep * xk**s) for (r, s), c in sorted(self.coeffs.items())
        ]

    def multiply_middle(self, z, *, factor: str = "right") -> "PowerBasisTensor":
        """Multiply one tensor factor by a ring element and recanonicalize.

        The two factor choices must give the same closed evaluations;
        that agreement is a tested invariant, not an assumption.
        """
        if factor not in ("left", "right"):
            raise ValueError("factor must be 'left' or 'right'")
        z = _as_poly(self.ks, z)
        n, k = self.ks.n, self.ks.k
        xk = Poly.var(n, k)
        pairs = []
        for (r, s), c in self.coeffs.items():
            if factor == "right":
                pairs.append((xk**r, c.rep * xk**s * z))
            else:
                pairs.append((xk**r * z, c.rep * xk**s))
        return PowerBasisTensor.from_pairs(self.ks, self.shape, pairs)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PowerBasisTensor):
            return NotImplemented
        return (
            self.shape == other.shape
            and self.ks.nu == other.ks.nu
            and self.ks.i == other.ks.i
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        body = ", ".join(
            f"{rs}: {c!r}" for rs, c in sorted(self.coeffs.items())
        )
        return f"PowerBasisTensor({self.shape}; {{{body}}})"

    def to_json(self) -> list:
        return [
            {"r": r, "s": s, "coeff": c.to_json()}
            for (r, s), c in sorted(self.coeffs.items())
        ]


# ----------------------------------------------------------------------
# the duality isomorphism


def delta(ks: KeySituation, g) -> ModuleHom:
    """Pair against g: the basis power x_k^s maps to push(g x_k^s)."""
    g = _as_poly(ks, g)
    xk = Poly.var(ks.n, ks.k)
    values = [push_p(ks, g * xk**s) for s in range(ks.a + 1)]
    return ModuleHom(ks, "nu", values)


def delta_inv(ks: KeySituation, f: ModuleHom):
    """Reconstruct the pairing element from a hom's basis values."""
    if f.direction != "nu":
        raise ValueError("delta_inv expects a nu-side hom")
    n = ks.n
    sign = -1 if ks.a % 2 else 1
    acc = Poly.zero(n)
    for r in range(ks.a + 1):
        term = e_block(ks.nu_prime, [ks.i], r) * f.values[ks.a - r].rep
        acc = acc + (term if r % 2 == 0 else -term)
    return presentation(ks.rho).normal_form(acc * sign)


# ----------------------------------------------------------------------
# units and counits


def _unit_pairs_prime(ks: KeySituation) -> list:
    """Defining factor pairs of the nu-side unit, before canonicalization."""
    xk = Poly.var(ks.n, ks.k)
    sign = -1 if ks.a % 2 else 1
    pairs = []
    for r in range(ks.a + 1):
        left = e_block(ks.nu_prime, [ks.i], r) * sign
        if r % 2:
            left = -left
        pairs.append((left, xk ** (ks.a - r)))
    return pairs


def _unit_pairs(ks: KeySituation) -> list:
    """Defining factor pairs of the nu_prime-side unit."""
    xk = Poly.var(ks.n, ks.k)
    pairs = []
    for r in range(ks.b + 1):
        left = e_block(ks.nu, [ks.i + 1], r)
        if r % 2:
            left = -left
        pairs.append((left, xk ** (ks.b - r)))
    return pairs


def unit_iota_prime(ks: KeySituation) -> PowerBasisTensor:
    """Casimir element of the nu-side pairing, canonicalized."""
    return PowerBasisTensor.from_pairs(ks, "nu", _unit_pairs_prime(ks))


def unit_iota(ks: KeySituation) -> PowerBasisTensor:
    """Casimir element of the nu_prime-side pairing, canonicalized."""
    return PowerBasisTensor.from_pairs(ks, "nu_prime", _unit_pairs(ks))


def counit_eps(ks: KeySituation, first, second=None) -> QuotientElement:
    """The nu-side pairing: multiply the factors and push down.

    Accepts either an explicit pair of factors or a canonicalized
    tensor; on basis powers the values are (-1)^a h_{r+s-a} over block i.
    """
    if second is not None:
        return push_p(ks, _as_poly(ks, first) * _as_poly(ks, second))
    acc = Poly.zero(ks.n)
    for left, right in first.pairs():
        acc = acc + push_p_poly(ks, left * right)
    return presentation(ks.nu).normal_form(acc)


def counit_eps_prime(ks: KeySituation, first, second=None) -> QuotientElement:
    """The nu_prime-side pairing; values h_{r+s-b} over block i+1."""
    if second is not None:
        return push_p_prime(ks, _as_poly(ks, first) * _as_poly(ks, second))
    acc = Poly.zero(ks.n)
    for left, right in first.pairs():
        acc = acc + push_p_prime_poly(ks, left * right)
    return presentation(ks.nu_prime).normal_form(acc)


# ----------------------------------------------------------------------
# trace maps


def trace_F(ks: KeySituation, z) -> QuotientElement:
    """Close the nu-side unit against the nu_prime-side pairing."""
    t = unit_iota_prime(ks).multiply_middle(z)
    return counit_eps_prime(ks, t)


def trace_E(ks: KeySituation, z) -> QuotientElement:
    """Close the nu_prime-side unit against the nu-side pairing."""
    t = unit_iota(ks).multiply_middle(z)
    return counit_eps(ks, t)


# ----------------------------------------------------------------------
# verification


def triangle_identity_check(ks: KeySituation) -> bool:
    """Both triangle identities for both unit/counit pairs.

    Each unit is the Casimir element of its pairing, so contracting its
    defining factor pairs against any element through either slot must
    reconstruct the element.  Checked on the powers x_k^t for t up to
    a+b, which span the refined quotient over either base ring.
    """
    n, k = ks.n, ks.k
    xk = Poly.var(n, k)
    rho = presentation(ks.rho)
    iota_p = _unit_pairs_prime(ks)
    iota = _unit_pairs(ks)
    for t in range(ks.a + ks.b + 1):
        u = xk**t
        want = rho.normal_form(u)
        first_slot = Poly.zero(n)
        second_slot = Poly.zero(n)
        for left, right in iota_p:
            first_slot = first_slot + left * push_p_poly(ks, right * u)
            second_slot = second_slot + push_p_poly(ks, u * left) * right
        if rho.normal_form(first_slot) != want:
            return False
        if rho.normal_form(second_slot) != want:
            return False
        first_slot = Poly.zero(n)
        second_slot = Poly.zero(n)
        for left, right in iota:
            first_slot = first_slot + left * push_p_prime_poly(ks, right * u)
            second_slot = second_slot + push_p_prime_poly(ks, u * left) * right
        if rho.normal_form(first_slot) != want:
            return False
        if rho.normal_form(second_slot) != want:
            return False
    return True


def _window_weights(n: int, window) -> list:
    seen = set()
    out = []
    for nu in compositions_of(n, window):
        if nu.key() not in seen:
            seen.add(nu.key())
            out.append(nu)
    return out


def trace_map_report(n: int, window) -> Report:
    """Trace maps against the Chevalley operators on every basis vector."""
    report = Report(f"trace maps vs operators, n={n}, window={window}")
    lo, hi = window
    ok_f = ok_e = True
    for nu in _window_weights(n, window):
        for i in range(lo, hi):
            if nu[i] == 0:
                continue
            ks = KeySituation(i, nu)
            src = presentation(nu)
            for d in range(0, (src.top_degree or 0) + 1, 2):
                for z in src.graded_basis(d):
                    if trace_F(ks, z) != apply_F_oracle(ks, z):
                        ok_f = False
            dst = presentation(ks.nu_prime)
            for d in range(0, (dst.top_degree or 0) + 1, 2):
                for z in dst.graded_basis(d):
                    if trace_E(ks, z) != apply_E_oracle(ks, z):
                        ok_e = False
    report.add("trace_F_matches_lowering_oracle", ok_f)
    report.add("trace_E_matches_raising_oracle", ok_e)
    return report


def adjunction_report(n: int, window) -> Report:
    """Duality isomorphism, triangles, centrality and linearity checks."""
    report = Report(f"adjunction calculus, n={n}, window={window}")
    lo, hi = window
    ok_iso = ok_tri = ok_central = ok_linear = True
    for nu in _window_weights(n, window):
        for i in range(lo, hi):
            if nu[i] == 0:
                continue
            ks = KeySituation(i, nu)
            rho = presentation(ks.rho)
            base = presentation(ks.nu)
            # delta_inv(delta(g)) == g over the whole refined quotient
            for d in range(0, (rho.top_degree or 0) + 1, 2):
                for g in rho.graded_basis(d):
                    if delta_inv(ks, delta(ks, g)) != g:
                        ok_iso = False
            # delta(delta_inv(f)) == f on an exhaustive hom basis
            for s in range(ks.a + 1):
                for d in range(0, (base.top_degree or 0) + 1, 2):
                    for w in base.graded_basis(d):
                        values = [
                            w if t == s else base.zero()
                            for t in range(ks.a + 1)
                        ]
                        f = ModuleHom(ks, "nu", values)
                        if delta(ks, delta_inv(ks, f)) != f:
                            ok_iso = False
            if not triangle_identity_check(ks):
                ok_tri = False
            # centrality: multiplying either tensor factor gives one trace
            src = presentation(nu)
            unit = unit_iota_prime(ks)
            unit_e = unit_iota(ks)
            for d in range(0, (src.top_degree or 0) + 1, 2):
                for z in src.graded_basis(d):
                    left = counit_eps_prime(
                        ks, unit.multiply_middle(z, factor="left")
                    )
                    right = counit_eps_prime(
                        ks, unit.multiply_middle(z, factor="right")
                    )
                    if left != right:
                        ok_central = False
            dst = presentation(ks.nu_prime)
            for d in range(0, (dst.top_degree or 0) + 1, 2):
                for z in dst.graded_basis(d):
                    left = counit_eps(
                        ks, unit_e.multiply_middle(z, factor="left")
                    )
                    right = counit_eps(
                        ks, unit_e.multiply_middle(z, factor="right")
                    )
                    if left != right:
                        ok_central = False
            # naturality of the hom-space isomorphism under multiplication
            xk = Poly.var(ks.n, ks.k)
            for d in range(0, (base.top_degree or 0) + 1, 2):
                for c in base.graded_basis(d):
                    lhs = delta(ks, xk * c.rep)
                    rhs = ModuleHom(
                        ks,
                        "nu",
                        [
                            base.normal_form(v.rep * c.rep)
                            for v in delta(ks, xk).values
                        ],
                    )
                    if lhs != rhs:
                        ok_linear = False
    report.add("duality_map_is_isomorphism", ok_iso)
    report.add("triangle_identities", ok_tri)
    report.add("middle_multiplication_side_independent", ok_central)
    report.add("duality_map_base_linear", ok_linear)
    return report


def delta_matrix_json(ks: KeySituation) -> dict:
    """Values of the duality map on basis powers, for inspection."""
    xk = Poly.var(ks.n, ks.k)
    rows = []
    for r in range(ks.a + 1):
        hom = delta(ks, xk**r)
        rows.append([v.to_json() for v in hom.values])
    return {
        "nu": ks.nu.to_json(),
        "i": ks.i,
        "a": ks.a,
        "b": ks.b,
        "rows": rows,
    }
