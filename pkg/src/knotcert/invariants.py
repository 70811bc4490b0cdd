"""Closed-form knot invariants and certified inequality bounds.

Torus knot Alexander polynomials and determinants, genus and Rasmussen
invariants of positive diagrams, genus formulas for the two quotient knot
families, and even-width integer intervals that propagate what a single
crossing change or a four-crossing tangle move can do to s and sigma.
"""

from __future__ import annotations

import dataclasses
import math

from .diagram import LinkDiagram, component_count, is_positive, seifert_circle_count

__all__ = [
    "IntInterval",
    "InvariantRecord",
    "torus_alexander",
    "det_from_alexander",
    "torus_det_4x",
    "positive_genus",
    "rasmussen_positive",
    "quotient_knot_genus_odd",
    "quotient_knot_genus_even",
    "torus_genus",
    "crossing_change_sigma_bound",
    "crossing_change_s_bound",
    "sharp_move_sigma_bound",
    "sharp_move_s_delta",
]

from .laurent import LaurentPoly1


@dataclasses.dataclass(frozen=True)
class IntInterval:
    """Closed integer interval [lo, hi] with even endpoints.

    The invariants s and sigma of knots are even, and the moves tracked
    here shift them by even amounts, so certified enclosures stay even.
    """

    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")
        if self.lo % 2 or self.hi % 2:
            raise ValueError(f"interval endpoints must be even: [{self.lo}, {self.hi}]")

    def __contains__(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other: "IntInterval | int") -> "IntInterval":
        if isinstance(other, int):
            return IntInterval(self.lo + other, self.hi + other)
        return IntInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> "IntInterval":
        return IntInterval(-self.hi, -self.lo)

    @staticmethod
    def exact(x: int) -> "IntInterval":
        return IntInterval(x, x)

    @property
    def width(self) -> int:
        return self.hi - self.lo

    def as_list(self) -> list[int]:
        return [self.lo, self.hi]


def torus_alexander(a: int, b: int) -> LaurentPoly1:
    """Alexander polynomial of the (a, b) torus knot,
    (t^(ab) - 1)(t - 1) / ((t^a - 1)(t^b - 1))."""
    if a < 1 or b < 1:
        raise ValueError(f"torus knot parameters must be positive, got ({a}, {b})")
    if math.gcd(a, b) != 1:
        raise ValueError(f"torus knot parameters must be coprime, got ({a}, {b})")
    t = LaurentPoly1.term(1, 1)
    one = LaurentPoly1.one()
    num = (LaurentPoly1.term(1, a * b) - one) * (t - one)
    den = (LaurentPoly1.term(1, a) - one) * (LaurentPoly1.term(1, b) - one)
    return num.divexact(den)


def det_from_alexander(p: LaurentPoly1) -> int:
    """Knot determinant |p(-1)|."""
    return abs(p.evaluate(-1))


def torus_det_4x(x: int) -> int:
    """Determinant of the (4, x) torus knot, evaluated two independent ways.

    The defining quotient (t^(4x)-1)(t-1) / ((t^4-1)(t^x-1)) has numerator
    and denominator both vanishing at t = -1, so the evaluation uses the
    derivative quotient there; the result is cross-checked against the
    explicit polynomial division.  Both paths must give x.
    """
    if x < 1 or x % 2 == 0:
        raise ValueError(f"(4, x) torus knots need odd positive x, got {x}")
    t = LaurentPoly1.term(1, 1)
    one = LaurentPoly1.one()
    num = (LaurentPoly1.term(1, 4 * x) - one) * (t - one)
    den = (LaurentPoly1.term(1, 4) - one) * (LaurentPoly1.term(1, x) - one)
    if num.evaluate(-1) != 0 or den.evaluate(-1) != 0:
        raise AssertionError("expected a 0/0 evaluation at t = -1")
    dn = num.derivative().evaluate(-1)
    dd = den.derivative().evaluate(-1)
    if dd == 0 or dn % dd != 0:
        raise AssertionError("derivative quotient at t = -1 is not an integer")
    via_derivative = abs(dn // dd)
    via_division = det_from_alexander(num.divexact(den))
    if via_derivative != via_division:
        raise AssertionError(
            f"determinant paths disagree for (4, {x}): {via_derivative} vs {via_division}")
    return via_derivative


def positive_genus(d: LinkDiagram) -> int:
    """Genus of a positive knot diagram: Seifert's algorithm gives a surface
    of minimal genus (crossings - circles + 1) / 2."""
    if not is_positive(d):
        raise ValueError("genus formula requires a positive diagram")
    if component_count(d) != 1:
        raise ValueError("genus formula requires a single-component diagram")
    c = len(d.crossings)
    circles = seifert_circle_count(d)
    if (c - circles + 1) % 2:
        raise AssertionError("crossings - circles + 1 must be even for a knot")
    return (c - circles + 1) // 2


def rasmussen_positive(d: LinkDiagram) -> int:
    """Rasmussen invariant of a positive knot diagram: twice the genus."""
    return 2 * positive_genus(d)


def quotient_knot_genus_odd(p: int, q: int, r: int) -> int:
    """Genus of the odd-family quotient knot: 3(p + q) + (r - 3)/2."""
    if p < 3 or p % 2 == 0 or q < 3 or q % 2 == 0:
        raise ValueError(f"odd family needs p, q >= 3 odd, got ({p}, {q})")
    if r % 2 == 0:
        raise ValueError(f"the quotient closes to a knot only for odd r, got {r}")
    return 3 * (p + q) + (r - 3) // 2


def quotient_knot_genus_even(n: int, q: int, r: int) -> int:
    """Genus of the even-family quotient knot at the two admissible slopes:
    6n + 3q - 1 for r = 4q + 1 and 6n + 3q - 2 for r = 4q - 1."""
    if n < 1:
        raise ValueError(f"even family needs n >= 1, got {n}")
    if q < 3 or q % 2 == 0:
        raise ValueError(f"even family needs q >= 3 odd, got {q}")
    if r == 4 * q + 1:
        return 6 * n + 3 * q - 1
    if r == 4 * q - 1:
        return 6 * n + 3 * q - 2
    raise ValueError(f"even family slope must be 4q-1 or 4q+1, got r={r} with q={q}")


def torus_genus(a: int, b: int) -> int:
    """Genus of the (a, b) torus knot, (a-1)(b-1)/2."""
    if a < 1 or b < 1 or math.gcd(a, b) != 1:
        raise ValueError(f"torus knot parameters must be positive and coprime: ({a}, {b})")
    return (a - 1) * (b - 1) // 2


def crossing_change_sigma_bound(sigma_positive: int) -> IntInterval:
    """Enclosure for sigma after changing one positive crossing to negative:
    the signature stays or rises by two."""
    return IntInterval(sigma_positive, sigma_positive + 2)


def crossing_change_s_bound(s_negative: int) -> IntInterval:
    """Enclosure for s after changing one negative crossing to positive:
    s stays or rises by two."""
    return IntInterval(s_negative, s_negative + 2)


def sharp_move_sigma_bound(sigma_before: int, zero_tangle_components: int) -> IntInterval:
    """Enclosure for sigma after a four-crossing tangle move on a knot.

    The width depends on whether replacing the tangle by the trivial one
    yields a two-component link (shift in [2, 4]) or a knot ([2, 6]).
    """
    if zero_tangle_components == 2:
        return IntInterval(sigma_before + 2, sigma_before + 4)
    if zero_tangle_components == 1:
        return IntInterval(sigma_before + 2, sigma_before + 6)
    raise ValueError(
        f"the trivial-tangle replacement has 1 or 2 components, got {zero_tangle_components}")


def sharp_move_s_delta() -> int:
    """Drop in s across a four-crossing tangle move between positive
    diagrams with equal Seifert circle counts and crossing difference 8."""
    return 8


@dataclasses.dataclass(frozen=True)
class InvariantRecord:
    """Bundle of diagram invariants for reporting; None marks an invariant
    that the available certified methods cannot compute for this diagram,
    with the reason in notes."""

    crossings: int
    components: int
    seifert_circles: int
    writhe: int
    positive: bool
    determinant: int
    signature: int | None = None
    rasmussen: int | None = None
    genus: int | None = None
    slice_genus: int | None = None
    notes: tuple[str, ...] = ()
