"""The two-variable link polynomial of braid closures via the Hecke algebra.

A braid word maps into the Hecke algebra H_n spanned by permutation basis
elements g_w, with generators obeying g_i^2 = z*g_i + 1 (so the inverse is
g_i - z).  In this scaling every product of generators and inverses keeps
integer polynomial coefficients in z.  The Markov trace is computed level
by level: each w in S_n factors uniquely as v * (descending cycle through
the last strand), and peeling that cycle multiplies the coefficient by the
trace parameter c.  The closure invariant substitutes c = z/(1 - a^2) and
normalizes by writhe and strand count:

    P(a, z) = a^(e-n+1) * sum_j C_j(z) * z^(j-n+1) * (1 - a^2)^(n-1-j)

where C_j collects the c^j part of the trace and e is the exponent sum.
The result is an exact Laurent polynomial satisfying the skein relation
(1/a) P(L+) - a P(L-) = z P(L0) with P(unknot) = 1; the right trefoil maps
to 2a^2 - a^4 + a^2 z^2.  Specializing a = 1, z^2 = -4 gives the knot
determinant, and (max - min a-exponent)/2 + 1 is the braid index lower
bound of Morton, Franks and Williams.
"""

from __future__ import annotations

import dataclasses

from .braid import BraidWord, PermutationBraid, exponent_sum
from .laurent import LaurentPoly1, LaurentPoly2

__all__ = [
    "MAX_TRACE_STRANDS",
    "HeckeElement",
    "hecke_image",
    "homfly",
    "mfw_bound",
    "det_from_homfly",
]

MAX_TRACE_STRANDS = 6


@dataclasses.dataclass(frozen=True)
class HeckeElement:
    """Element of H_n: permutation basis with Laurent coefficients in z."""

    strands: int
    coeffs: dict[tuple[int, ...], LaurentPoly1]

    def __post_init__(self):
        clean = {w: c for w, c in self.coeffs.items() if not c.is_zero()}
        object.__setattr__(self, "coeffs", clean)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        return self.strands == other.strands and self.coeffs == other.coeffs

    @staticmethod
    def one(n: int) -> "HeckeElement":
        return HeckeElement(n, {tuple(range(n)): LaurentPoly1.one()})

    def times_generator(self, i: int, inverse: bool = False) -> "HeckeElement":
        """Right multiplication by g_{i+1} or its inverse (i is 0-based)."""
        n = self.strands
        z = LaurentPoly1.term(1, 1)
        out: dict[tuple[int, ...], LaurentPoly1] = {}

        def add(w: tuple[int, ...], c: LaurentPoly1):
            if w in out:
                out[w] = out[w] + c
            else:
                out[w] = c

        for w, c in self.coeffs.items():
            ws = _swap_values(w, i)
            if _value_ascent(w, i):
                add(ws, c)
            else:
                add(ws, c)
                add(w, c * z)
        result = HeckeElement(n, out)
        if inverse:
            neg = {w: c * (-z) for w, c in self.coeffs.items()}
            result = HeckeElement(n, _merge(result.coeffs, neg))
        return result

    def times(self, other: "HeckeElement") -> "HeckeElement":
        """Algebra product, decomposing the right factor into generators."""
        if self.strands != other.strands:
            raise ValueError("strand counts differ")
        total: dict[tuple[int, ...], LaurentPoly1] = {}
        for w, c in other.coeffs.items():
            part = self
            for i in PermutationBraid(w).reduced_word():
                part = part.times_generator(i)
            scaled = {v: pc * c for v, pc in part.coeffs.items()}
            total = _merge(total, scaled)
        return HeckeElement(self.strands, total)


def _merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, v in b.items():
        out[k] = out[k] + v if k in out else v
    return out


def _swap_values(w: tuple[int, ...], i: int) -> tuple[int, ...]:
    """One-line tuple of w followed by the transposition of values i, i+1."""
    lst = list(w)
    p, q = lst.index(i), lst.index(i + 1)
    lst[p], lst[q] = lst[q], lst[p]
    return tuple(lst)


def _value_ascent(w: tuple[int, ...], i: int) -> bool:
    """Whether right multiplication by generator i increases word length."""
    return w.index(i) < w.index(i + 1)


def hecke_image(w: BraidWord) -> HeckeElement:
    """Image of a braid word in the Hecke algebra."""
    if w.strands > MAX_TRACE_STRANDS:
        raise ValueError(
            f"Hecke computations are guarded to at most {MAX_TRACE_STRANDS} strands, "
            f"got {w.strands}")
    elem = HeckeElement.one(w.strands)
    for e in w.letters:
        elem = elem.times_generator(abs(e) - 1, inverse=e < 0)
    return elem


_ZC = ("z", "c")


def _trace_polynomial(elem: HeckeElement) -> LaurentPoly2:
    """Markov trace as an integer polynomial in z and the trace parameter c."""
    level: dict[tuple[int, ...], LaurentPoly2] = {
        w: LaurentPoly2({(e, 0): c for e, c in coeff.coeffs.items()}, names=_ZC)
        for w, coeff in elem.coeffs.items()
    }
    n = elem.strands
    while n > 1:
        nxt: dict[tuple[int, ...], LaurentPoly2] = {}

        def add(w: tuple[int, ...], p: LaurentPoly2):
            nxt[w] = nxt[w] + p if w in nxt else p

        for w, poly in level.items():
            j = w[n - 1]
            if j == n - 1:
                add(w[: n - 1], poly)
                continue
            # w = v . (cycle j -> j+1 -> ... -> n-1 -> j); peel one strand.
            v = [x - 1 if x > j else x for x in w[: n - 1]]
            term: dict[tuple[int, ...], LaurentPoly2] = {tuple(v): poly.mul_term(1, 0, 1)}
            for i in range(n - 3, j - 1, -1):
                term = _times_generator_poly2(term, i)
            for key, val in term.items():
                add(key, val)
        level = nxt
        n -= 1
    return level.get((0,), LaurentPoly2.zero(names=_ZC))


def _times_generator_poly2(terms: dict[tuple[int, ...], LaurentPoly2], i: int
                           ) -> dict[tuple[int, ...], LaurentPoly2]:
    out: dict[tuple[int, ...], LaurentPoly2] = {}

    def add(w: tuple[int, ...], p: LaurentPoly2):
        out[w] = out[w] + p if w in out else p

    for w, p in terms.items():
        ws = _swap_values(w, i)
        if _value_ascent(w, i):
            add(ws, p)
        else:
            add(ws, p)
            add(w, p.mul_term(1, 1, 0))
    return {w: p for w, p in out.items() if not p.is_zero()}


def homfly(w: BraidWord) -> LaurentPoly2:
    """Two-variable polynomial of the closure of a braid word."""
    n = w.strands
    trace = _trace_polynomial(hecke_image(w))
    e = exponent_sum(w)
    out = LaurentPoly2.zero()
    for zi, cj, coeff in trace.terms():
        piece = LaurentPoly2({(0, zi + cj - (n - 1)): coeff})
        ring = LaurentPoly2({(0, 0): 1, (2, 0): -1})
        piece = piece * ring ** (n - 1 - cj)
        out = out + piece
    return out.mul_term(1, e - n + 1, 0)


def mfw_bound(p: LaurentPoly2) -> int:
    """Braid index lower bound: half the a-exponent breadth plus one."""
    if p.is_zero():
        raise ValueError("the zero polynomial has no breadth")
    exps = p.exponents_first()
    breadth = exps[-1] - exps[0]
    if breadth % 2:
        raise AssertionError(f"a-breadth should be even, got {breadth}")
    return breadth // 2 + 1


def det_from_homfly(p: LaurentPoly2) -> int:
    """Knot determinant from the polynomial: substitute a = 1, z^2 = -4.

    Through a = 1 the polynomial collapses to the Alexander polynomial at
    z = sqrt(t) - 1/sqrt(t), and t = -1 gives z^2 = -4.
    """
    by_z: dict[int, int] = {}
    for _i, j, coeff in p.terms():
        by_z[j] = by_z.get(j, 0) + coeff
    total = 0
    for j, coeff in by_z.items():
        if coeff == 0:
            continue
        if j < 0 or j % 2:
            raise ValueError(
                "determinant specialization needs a knot polynomial "
                f"(even nonnegative z-exponents); found z^{j}")
        total += coeff * (-4) ** (j // 2)
    return abs(total)
