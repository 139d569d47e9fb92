"""Fuchsian signatures, Riemann-Hurwitz arithmetic and maximality checks.

All measure arithmetic is exact (``fractions.Fraction``); nothing here touches
floating point.  The finitely-maximal signature table is embedded as data with
parametric matchers, following Singerman's classification of Fuchsian groups
admitting a same-dimension extension.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .errors import RiemannHurwitzError, SignatureError


@dataclass(frozen=True)
class Signature:
    """A co-compact Fuchsian signature (h; m_1, ..., m_l).

    Periods are kept in input order (generating vectors are
    position-sensitive); use :meth:`multiset_key` for order-free identity.
    """

    orbit_genus: int
    periods: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.orbit_genus < 0:
            raise SignatureError(f"orbit genus must be >= 0, got {self.orbit_genus}")
        if any(m < 2 for m in self.periods):
            raise SignatureError(f"periods must be >= 2, got {self.periods}")
        if self.measure() <= 0:
            raise SignatureError(f"signature {self} is not hyperbolic")

    @classmethod
    def parse(cls, text: str) -> "Signature":
        """Parse the ``"h;m1,m2,..."`` format; a bare ``"h;"`` is a surface."""
        if ";" not in text:
            raise SignatureError(f"missing ';' in signature string {text!r}")
        head, _, tail = text.partition(";")
        try:
            h = int(head.strip())
            periods = tuple(int(tok) for tok in tail.split(",") if tok.strip())
        except ValueError as exc:
            raise SignatureError(f"malformed signature string {text!r}") from exc
        return cls(h, periods)

    def __str__(self) -> str:
        return f"{self.orbit_genus};" + ",".join(str(m) for m in self.periods)

    def measure(self) -> Fraction:
        """Hyperbolic area measure 2(h-1) + sum(1 - 1/m)."""
        mu = Fraction(2 * (self.orbit_genus - 1))
        for m in self.periods:
            mu += 1 - Fraction(1, m)
        return mu

    def multiset_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.orbit_genus, tuple(sorted(self.periods)))

    def sorted(self) -> "Signature":
        return Signature(self.orbit_genus, tuple(sorted(self.periods)))

    @property
    def num_periods(self) -> int:
        return len(self.periods)


def teich_dimension(s: Signature) -> int:
    """Complex dimension 3h - 3 + l of the Teichmueller space of the signature."""
    return 3 * s.orbit_genus - 3 + s.num_periods


def riemann_hurwitz_genus(group_order: int, s: Signature) -> int:
    """Genus of the covering surface: 2(g-1) = |G| * measure(s)."""
    if group_order < 1:
        raise RiemannHurwitzError(f"group order must be positive, got {group_order}")
    doubled = group_order * s.measure()
    if doubled.denominator != 1 or doubled.numerator % 2 != 0:
        raise RiemannHurwitzError(
            f"no integral genus for order {group_order} and signature {s}"
        )
    g = doubled.numerator // 2 + 1
    if g < 2:
        raise RiemannHurwitzError(
            f"order {group_order} with signature {s} gives genus {g} < 2"
        )
    return g


def solve_orbit_genus(
    group_order: int, surface_genus: int, periods: Iterable[int]
) -> int:
    """Solve 2(g-1) = |H|(2(h-1) + sum(1-1/m)) for the orbit genus h."""
    periods = tuple(periods)
    branch = Fraction(0)
    for m in periods:
        branch += 1 - Fraction(1, m)
    rhs = Fraction(2 * (surface_genus - 1), group_order) - branch + 2
    if rhs.denominator != 1 or rhs.numerator % 2 != 0 or rhs < 0:
        raise RiemannHurwitzError(
            f"no integral orbit genus: |H|={group_order}, g={surface_genus}, "
            f"periods={periods}"
        )
    return rhs.numerator // 2


@dataclass(frozen=True)
class ExtensionCandidate:
    """A same-dimension Fuchsian extension candidate s < s' of a given index."""

    inner: Signature
    outer: Signature
    index: int
    normal: bool
    family: str


def _sig(h: int, *periods: int) -> Optional[Signature]:
    try:
        return Signature(h, tuple(periods))
    except SignatureError:
        return None


# Each row: (orbit genus, inner pattern, outer builder, index, normal?, label).
# Pattern slots are literals ('2'), variables ('t', 'u', 'n') or scaled
# variables ('2n', '4n'), matched against the sorted period multiset.
_EXTENSION_RULES = (
    # normal inclusions
    (2, (), lambda b: _sig(0, 2, 2, 2, 2, 2, 2), 2, True, "(2;-) < (0;2^6)"),
    (1, ("t", "t"), lambda b: _sig(0, 2, 2, 2, 2, b["t"]), 2, True, "(1;t,t) < (0;2^4,t)"),
    (1, ("t",), lambda b: _sig(0, 2, 2, 2, 2 * b["t"]), 2, True, "(1;t) < (0;2^3,2t)"),
    (0, ("t", "t", "t", "t"), lambda b: _sig(0, 2, 2, 2, b["t"]) if b["t"] >= 3 else None,
     4, True, "(0;t^4) < (0;2^3,t)"),
    (0, ("t", "t", "u", "u"), lambda b: _sig(0, 2, 2, b["t"], b["u"]),
     2, True, "(0;t,t,u,u) < (0;2^2,t,u)"),
    (0, ("t", "t", "u"), lambda b: _sig(0, 2, b["t"], 2 * b["u"]),
     2, True, "(0;t,t,u) < (0;2,t,2u)"),
    (0, ("t", "t", "t"), lambda b: _sig(0, 3, 3, b["t"]) if b["t"] >= 4 else None,
     3, True, "(0;t^3) < (0;3,3,t)"),
    (0, ("t", "t", "t"), lambda b: _sig(0, 2, 3, 2 * b["t"]) if b["t"] >= 4 else None,
     6, True, "(0;t^3) < (0;2,3,2t)"),
    # non-normal inclusions
    (0, ("7", "7", "7"), lambda b: _sig(0, 2, 3, 7), 24, False, "(0;7^3) < (0;2,3,7)"),
    (0, ("2", "7", "7"), lambda b: _sig(0, 2, 3, 7), 9, False, "(0;2,7,7) < (0;2,3,7)"),
    (0, ("3", "3", "7"), lambda b: _sig(0, 2, 3, 7), 8, False, "(0;3,3,7) < (0;2,3,7)"),
    (0, ("4", "8", "8"), lambda b: _sig(0, 2, 3, 8), 12, False, "(0;4,8,8) < (0;2,3,8)"),
    (0, ("3", "8", "8"), lambda b: _sig(0, 2, 3, 8), 10, False, "(0;3,8,8) < (0;2,3,8)"),
    (0, ("9", "9", "9"), lambda b: _sig(0, 2, 3, 9), 12, False, "(0;9^3) < (0;2,3,9)"),
    (0, ("4", "4", "5"), lambda b: _sig(0, 2, 4, 5), 6, False, "(0;4,4,5) < (0;2,4,5)"),
    (0, ("n", "4n", "4n"), lambda b: _sig(0, 2, 3, 4 * b["n"]) if b["n"] >= 2 else None,
     6, False, "(0;n,4n,4n) < (0;2,3,4n)"),
    (0, ("n", "2n", "2n"), lambda b: _sig(0, 2, 4, 2 * b["n"]) if b["n"] >= 3 else None,
     4, False, "(0;n,2n,2n) < (0;2,4,2n)"),
    (0, ("3", "n", "3n"), lambda b: _sig(0, 2, 3, 3 * b["n"]) if b["n"] >= 3 else None,
     4, False, "(0;3,n,3n) < (0;2,3,3n)"),
    (0, ("2", "n", "2n"), lambda b: _sig(0, 2, 3, 2 * b["n"]) if b["n"] >= 4 else None,
     3, False, "(0;2,n,2n) < (0;2,3,2n)"),
)


def _pattern_bindings(periods: tuple[int, ...], pattern: tuple[str, ...]):
    """Yield variable bindings matching the pattern to the period multiset."""
    if len(periods) != len(pattern):
        return
    free = sorted({p[-1] for p in pattern if not p.isdigit()})

    def scaled(token: str, bound: dict) -> Optional[int]:
        if token.isdigit():
            return int(token)
        scale = int(token[:-1]) if len(token) > 1 else 1
        base = bound.get(token[-1])
        return None if base is None else scale * base

    from itertools import product as iproduct

    values = sorted(set(periods))
    seen = set()
    for combo in iproduct(values, repeat=len(free)):
        bound = dict(zip(free, combo))
        want = [scaled(tok, bound) for tok in pattern]
        if any(v is None for v in want):
            continue
        if sorted(want) == sorted(periods):
            key = tuple(sorted(bound.items()))
            if key not in seen:
                seen.add(key)
                yield bound


def list_extensions(s: Signature) -> list[ExtensionCandidate]:
    """All same-dimension extension candidates of s from the embedded table."""
    out: list[ExtensionCandidate] = []
    periods = tuple(sorted(s.periods))
    for h, pattern, outer_fn, index, normal, label in _EXTENSION_RULES:
        if s.orbit_genus != h:
            continue
        for bound in _pattern_bindings(periods, pattern):
            outer = outer_fn(bound)
            if outer is None:
                continue
            if teich_dimension(outer) != teich_dimension(s):
                continue
            if s.measure() != index * outer.measure():
                continue
            cand = ExtensionCandidate(
                inner=s.sorted(), outer=outer.sorted(), index=index,
                normal=normal, family=label,
            )
            if all(
                not (c.outer == cand.outer and c.index == cand.index) for c in out
            ):
                out.append(cand)
    out.sort(key=lambda c: (c.index, c.outer.multiset_key()))
    return out


def is_maximal_signature(s: Signature) -> bool:
    """True iff the signature admits no same-dimension extension."""
    return not list_extensions(s)
