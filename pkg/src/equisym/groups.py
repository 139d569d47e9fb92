"""Concrete finite permutation groups with fully enumerated element tables.

Groups are built from a small spec mini-language (``C<n>``, ``D<n>``, direct
products with ``x``, ``SD(C<n>;[e1,...,ek])`` and ``Perm[...]``) and keep all
elements as permutation tuples on ``{0, ..., degree-1}``, sorted
lexicographically so element indices are stable across runs.

Multiplication follows the right-action convention: ``(p * q)(i) = q[p[i]]``
(apply ``p`` first, then ``q``), which makes right-multiplication on cosets a
genuine homomorphism.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Optional, Sequence

from .errors import GroupSpecError, OrderBoundError, SubgroupError

DEFAULT_MAX_ORDER = 512

Perm = tuple  # permutation as tuple[int, ...]


# ---------------------------------------------------------------------------
# permutation primitives


def compose(p: Perm, q: Perm) -> Perm:
    """Product p*q under the right-action convention (p applied first)."""
    return tuple(q[x] for x in p)


def invert(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def identity_perm(degree: int) -> Perm:
    return tuple(range(degree))


def perm_cycles(p: Perm, *, skip_fixed: bool = True) -> list[list[int]]:
    """Disjoint cycles, each starting at its minimal point, sorted by start."""
    seen = [False] * len(p)
    cycles = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cur, cyc = start, []
        while not seen[cur]:
            seen[cur] = True
            cyc.append(cur)
            cur = p[cur]
        if len(cyc) > 1 or not skip_fixed:
            cycles.append(cyc)
    return cycles


def perm_order(p: Perm) -> int:
    order = 1
    for cyc in perm_cycles(p):
        order = _lcm(order, len(cyc))
    return order


def _lcm(a: int, b: int) -> int:
    from math import gcd

    return a // gcd(a, b) * b


def cycles_str(p: Perm) -> str:
    """Disjoint-cycle string on 1-based points; identity prints as ``()``."""
    cycles = perm_cycles(p)
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(x + 1) for x in cyc) + ")" for cyc in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: Optional[int] = None) -> Perm:
    """Parse a 1-based disjoint-cycle string like ``(1,2,3)(4,5)``."""
    text = text.strip()
    if text in ("", "()"):
        return identity_perm(degree or 1)
    body = text.replace(" ", "")
    matched = "".join(m.group(0) for m in _CYCLE_RE.finditer(body))
    if matched != body:
        raise GroupSpecError(f"malformed cycle string {text!r}")
    cycles: list[list[int]] = []
    maxpt = 0
    for m in _CYCLE_RE.finditer(body):
        if not m.group(1):
            continue
        pts = [int(tok) for tok in m.group(1).split(",")]
        if any(pt < 1 for pt in pts):
            raise GroupSpecError(f"cycle points are 1-based, got {pts} in {text!r}")
        maxpt = max(maxpt, *pts)
        cycles.append([pt - 1 for pt in pts])
    deg = degree if degree is not None else maxpt
    if maxpt > deg:
        raise GroupSpecError(f"cycle point {maxpt} exceeds degree {deg} in {text!r}")
    out = list(range(deg))
    touched: set[int] = set()
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if a in touched:
                raise GroupSpecError(f"cycles are not disjoint in {text!r}")
            touched.add(a)
            out[a] = b
    return tuple(out)


def mulclose(generators: Sequence[Perm], max_size: Optional[int] = None) -> set[Perm]:
    """Closure of a generator set under composition."""
    if not generators:
        return set()
    els: set[Perm] = {identity_perm(len(generators[0]))}
    els.update(generators)
    frontier = list(els)
    while frontier:
        new: list[Perm] = []
        for g in generators:
            for h in frontier:
                prod = compose(h, g)
                if prod not in els:
                    els.add(prod)
                    new.append(prod)
                    if max_size is not None and len(els) > max_size:
                        raise OrderBoundError(
                            f"group closure exceeded the order bound {max_size}"
                        )
        frontier = new
    return els


# ---------------------------------------------------------------------------
# fingerprints


@dataclass(frozen=True)
class GroupFingerprint:
    """Cheap isomorphism invariants used to bucket and cross-check groups."""

    order: int
    element_order_histogram: tuple[tuple[int, int], ...]
    conjugacy_class_sizes: tuple[int, ...]
    abelianization_invariants: tuple[int, ...]
    center_order: int

    def key(self) -> tuple:
        return (
            self.order,
            self.element_order_histogram,
            self.conjugacy_class_sizes,
            self.abelianization_invariants,
            self.center_order,
        )


# ---------------------------------------------------------------------------
# the group class


class FiniteGroup:
    """A finite permutation group with an exhaustive, sorted element table.

    Instances are immutable after construction; lazily built tables are pure
    caches and safe to share between threads.
    """

    def __init__(
        self,
        generators: Sequence[Perm],
        degree: Optional[int] = None,
        *,
        spec: Optional[str] = None,
        max_order: int = DEFAULT_MAX_ORDER,
        _elements: Optional[Sequence[Perm]] = None,
    ) -> None:
        if degree is None:
            if not generators:
                raise GroupSpecError("cannot infer degree of an empty generator list")
            degree = len(generators[0])
        for g in generators:
            if len(g) != degree or sorted(g) != list(range(degree)):
                raise GroupSpecError(f"not a permutation of degree {degree}: {g}")
        self.degree = degree
        if _elements is None:
            els = mulclose(list(generators) or [identity_perm(degree)], max_order)
        else:
            els = set(_elements)
        self.elements: tuple[Perm, ...] = tuple(sorted(els))
        self.order = len(self.elements)
        if self.order > max_order:
            raise OrderBoundError(
                f"group of order {self.order} exceeds the bound {max_order}"
            )
        self._index: dict[Perm, int] = {p: i for i, p in enumerate(self.elements)}
        self.generators: tuple[Perm, ...] = tuple(generators) or (identity_perm(degree),)
        self.generator_indices: tuple[int, ...] = tuple(
            self._index[g] for g in self.generators
        )
        self.spec = spec
        self._mul_table: Optional[list[tuple[int, ...]]] = None
        self._inv_table: Optional[tuple[int, ...]] = None
        self._order_table: Optional[tuple[int, ...]] = None
        self._classes: Optional[tuple[tuple[int, ...], ...]] = None
        self._class_of: Optional[tuple[int, ...]] = None
        self._subgroups: Optional[tuple["FiniteGroup", ...]] = None
        self._subgroup_classes: Optional[tuple[tuple["FiniteGroup", int], ...]] = None
        self._automorphisms: Optional[tuple[tuple[int, ...], ...]] = None
        self._fingerprint: Optional[GroupFingerprint] = None
        self._caches: dict = {}

    # -- basics ------------------------------------------------------------

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        label = self.spec or f"degree {self.degree}"
        return f"FiniteGroup({label}, order={self.order})"

    def __contains__(self, perm: Perm) -> bool:
        return perm in self._index

    @property
    def identity(self) -> int:
        return 0  # the identity permutation sorts first

    def index(self, perm: Perm) -> int:
        return self._index[perm]

    def perm(self, i: int) -> Perm:
        return self.elements[i]

    def element(self, i: int) -> "GroupElement":
        return GroupElement(self, i)

    def element_from_cycles(self, text: str) -> "GroupElement":
        perm = parse_cycles(text, self.degree)
        if perm not in self._index:
            raise GroupSpecError(f"{text!r} is not an element of {self!r}")
        return GroupElement(self, self._index[perm])

    @property
    def mul_table(self) -> list[tuple[int, ...]]:
        if self._mul_table is None:
            els, idx = self.elements, self._index
            self._mul_table = [
                tuple(idx[compose(p, q)] for q in els) for p in els
            ]
        return self._mul_table

    @property
    def inv_table(self) -> tuple[int, ...]:
        if self._inv_table is None:
            self._inv_table = tuple(self._index[invert(p)] for p in self.elements)
        return self._inv_table

    def mul(self, i: int, j: int) -> int:
        return self.mul_table[i][j]

    def inv(self, i: int) -> int:
        return self.inv_table[i]

    def conj(self, i: int, j: int) -> int:
        """j^-1 * i * j."""
        t = self.mul_table
        return t[t[self.inv_table[j]][i]][j]

    def order_of(self, i: int) -> int:
        if self._order_table is None:
            self._order_table = tuple(perm_order(p) for p in self.elements)
        return self._order_table[i]

    @property
    def is_abelian(self) -> bool:
        if "abelian" not in self._caches:
            gens = self.generator_indices
            t = self.mul_table
            self._caches["abelian"] = all(
                t[a][b] == t[b][a] for a in gens for b in gens
            )
        return self._caches["abelian"]

    def mulclose_indices(self, seed: Iterable[int]) -> frozenset[int]:
        """Subgroup closure of a set of element indices."""
        t = self.mul_table
        seed = set(seed)
        seed.add(0)
        els = set(seed)
        frontier = list(els)
        gens = list(seed)
        while frontier:
            new = []
            for g in gens:
                row_g = t[g]
                for h in frontier:
                    prod = t[h][g]
                    if prod not in els:
                        els.add(prod)
                        new.append(prod)
            frontier = new
        return frozenset(els)

    # -- conjugacy and structure -------------------------------------------

    def conjugacy_classes(self) -> tuple[tuple[int, ...], ...]:
        """Partition of element indices; identity first, classes sorted by minimum."""
        if self._classes is None:
            n = self.order
            seen = [False] * n
            gens = self.generator_indices
            classes = []
            class_of = [0] * n
            for start in range(n):
                if seen[start]:
                    continue
                orbit = {start}
                frontier = [start]
                seen[start] = True
                while frontier:
                    nxt = []
                    for x in frontier:
                        for g in gens:
                            y = self.conj(x, g)
                            if not seen[y]:
                                seen[y] = True
                                orbit.add(y)
                                nxt.append(y)
                    frontier = nxt
                classes.append(tuple(sorted(orbit)))
            classes.sort(key=lambda c: c[0])
            for ci, cls in enumerate(classes):
                for x in cls:
                    class_of[x] = ci
            self._classes = tuple(classes)
            self._class_of = tuple(class_of)
        return self._classes

    def class_of(self, i: int) -> int:
        self.conjugacy_classes()
        assert self._class_of is not None
        return self._class_of[i]

    def center_indices(self) -> tuple[int, ...]:
        gens = self.generator_indices
        t = self.mul_table
        return tuple(
            i for i in range(self.order) if all(t[i][g] == t[g][i] for g in gens)
        )

    def derived_indices(self) -> frozenset[int]:
        if "derived" not in self._caches:
            t, inv = self.mul_table, self.inv_table
            comms = {
                t[t[inv[a]][inv[b]]][t[a][b]]
                for a in range(self.order)
                for b in self.generator_indices
            }
            self._caches["derived"] = self.mulclose_indices(comms)
        return self._caches["derived"]

    def abelian_invariants(self) -> tuple[int, ...]:
        """Invariant factors of the abelianization, largest first."""
        derived = self.derived_indices()
        # order histogram of the quotient G/[G,G]
        cosets: dict[frozenset[int], int] = {}
        t = self.mul_table
        coset_of = {}
        for i in range(self.order):
            key = frozenset(t[d][i] for d in derived)
            coset_of[i] = cosets.setdefault(key, len(cosets))
        m = len(cosets)
        reps = [None] * m
        for i in range(self.order):
            if reps[coset_of[i]] is None:
                reps[coset_of[i]] = i
        # order of each coset in the quotient
        histogram: dict[int, int] = {}
        for rep in reps:
            k, cur = 1, rep
            while cur not in derived:
                cur = t[cur][rep]
                k += 1
            histogram[k] = histogram.get(k, 0) + 1
        return _invariant_factors_from_histogram(m, histogram)

    def fingerprint(self) -> GroupFingerprint:
        if self._fingerprint is None:
            hist: dict[int, int] = {}
            for i in range(self.order):
                o = self.order_of(i)
                hist[o] = hist.get(o, 0) + 1
            sizes = tuple(sorted(len(c) for c in self.conjugacy_classes()))
            self._fingerprint = GroupFingerprint(
                order=self.order,
                element_order_histogram=tuple(sorted(hist.items())),
                conjugacy_class_sizes=sizes,
                abelianization_invariants=self.abelian_invariants(),
                center_order=len(self.center_indices()),
            )
        return self._fingerprint

    # -- subgroups -----------------------------------------------------------

    def subgroup_from_indices(self, indices: Iterable[int]) -> "FiniteGroup":
        """Subgroup on the same points; indices must already be closed."""
        members = sorted(indices)
        perms = [self.elements[i] for i in members]
        sub = FiniteGroup(
            perms,
            self.degree,
            max_order=self.order,
            _elements=perms,
        )
        sub.ambient = self
        sub.ambient_indices = tuple(members)
        return sub

    def subgroup_generated(self, indices: Iterable[int]) -> "FiniteGroup":
        return self.subgroup_from_indices(self.mulclose_indices(indices))

    def contains_subgroup(self, H: "FiniteGroup") -> bool:
        if H.degree != self.degree:
            return False
        return all(p in self._index for p in H.elements)

    def indices_of_subgroup(self, H: "FiniteGroup") -> tuple[int, ...]:
        if not self.contains_subgroup(H):
            raise SubgroupError("not a subgroup of the ambient group")
        return tuple(self._index[p] for p in H.elements)

    def subgroups(self) -> tuple["FiniteGroup", ...]:
        """All subgroups, found by closing cyclic extensions; deterministic order."""
        if self._subgroups is None:
            n = self.order
            cyclic: dict[frozenset[int], int] = {}
            for i in range(n):
                key = self.mulclose_indices([i])
                cyclic.setdefault(key, i)
            cyclic_sets = sorted(cyclic, key=lambda s: (len(s), sorted(s)))
            found: set[frozenset[int]] = {frozenset([0])}
            found.update(cyclic_sets)
            frontier = list(cyclic_sets)
            full = frozenset(range(n))
            while frontier:
                new = []
                for sub in frontier:
                    if len(sub) * 2 > n:
                        continue
                    for cyc in cyclic_sets:
                        if cyc <= sub:
                            continue
                        ext = self.mulclose_indices(sub | cyc)
                        if ext not in found:
                            found.add(ext)
                            new.append(ext)
                frontier = new
            found.add(full)
            ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
            self._subgroups = tuple(self.subgroup_from_indices(s) for s in ordered)
        return self._subgroups

    def subgroup_conjugacy_classes(self) -> tuple[tuple["FiniteGroup", int], ...]:
        """One representative per conjugacy class of subgroups, with class size."""
        if self._subgroup_classes is None:
            subs = self.subgroups()
            by_set = {frozenset(s.ambient_indices): k for k, s in enumerate(subs)}
            seen = [False] * len(subs)
            out = []
            for k, sub in enumerate(subs):
                if seen[k]:
                    continue
                orbit = {frozenset(sub.ambient_indices)}
                frontier = [frozenset(sub.ambient_indices)]
                while frontier:
                    nxt = []
                    for s in frontier:
                        for g in self.generator_indices:
                            img = frozenset(self.conj(x, g) for x in s)
                            if img not in orbit:
                                orbit.add(img)
                                nxt.append(img)
                    frontier = nxt
                for s in orbit:
                    seen[by_set[s]] = True
                out.append((sub, len(orbit)))
            self._subgroup_classes = tuple(out)
        return self._subgroup_classes

    # -- automorphisms and isomorphisms --------------------------------------

    def minimal_generating_sequence(self) -> tuple[int, ...]:
        chosen: list[int] = []
        closure: frozenset[int] = frozenset([0])
        while len(closure) < self.order:
            candidates = [i for i in range(self.order) if i not in closure]
            candidates.sort(key=lambda i: (-self.order_of(i), i))
            best, best_closure = None, closure
            for i in candidates:
                ext = self.mulclose_indices(set(closure) | {i})
                if best is None or len(ext) > len(best_closure):
                    best, best_closure = i, ext
                if len(ext) == self.order:
                    break
            chosen.append(best)
            closure = best_closure
        return tuple(chosen)

    def _hom_from_images(
        self, gens: Sequence[int], images: Sequence[int], codomain: "FiniteGroup"
    ) -> Optional[tuple[int, ...]]:
        """Extend generator images to a homomorphism, or None on conflict."""
        t_dom, t_cod = self.mul_table, codomain.mul_table
        phi = [-1] * self.order
        phi[0] = 0
        frontier = [0]
        while frontier:
            nxt = []
            for x in frontier:
                fx = phi[x]
                for g, img in zip(gens, images):
                    y = t_dom[x][g]
                    fy = t_cod[fx][img]
                    if phi[y] == -1:
                        phi[y] = fy
                        nxt.append(y)
                    elif phi[y] != fy:
                        return None
            frontier = nxt
        if -1 in phi:
            return None  # gens do not generate
        # verify every edge, which implies multiplicativity on all of G
        for x in range(self.order):
            fx = phi[x]
            for g, img in zip(gens, images):
                if phi[t_dom[x][g]] != t_cod[fx][img]:
                    return None
        return tuple(phi)

    def _image_candidates(self, other: "FiniteGroup", gen: int) -> list[int]:
        o = self.order_of(gen)
        size = len(self.conjugacy_classes()[self.class_of(gen)])
        other.conjugacy_classes()
        return [
            j
            for j in range(other.order)
            if other.order_of(j) == o
            and len(other.conjugacy_classes()[other.class_of(j)]) == size
        ]

    def _search_isomorphisms(
        self, other: "FiniteGroup", *, first_only: bool, budget: int = 20_000_000
    ) -> list[tuple[int, ...]]:
        if self.order != other.order:
            return []
        if self.fingerprint().key() != other.fingerprint().key():
            return []
        gens = self.minimal_generating_sequence()
        cand = [self._image_candidates(other, g) for g in gens]
        total = 1
        for c in cand:
            total *= max(len(c), 1)
        if total * self.order > budget:
            raise OrderBoundError(
                f"isomorphism search space too large ({total} candidate tuples)"
            )
        out = []
        for images in itertools.product(*cand):
            phi = self._hom_from_images(gens, images, other)
            if phi is not None and len(set(phi)) == self.order:
                out.append(phi)
                if first_only:
                    return out
        return out

    def automorphisms(self) -> tuple[tuple[int, ...], ...]:
        """All automorphisms as index maps (identity included)."""
        if self._automorphisms is None:
            self._automorphisms = tuple(
                sorted(self._search_isomorphisms(self, first_only=False))
            )
        return self._automorphisms

    def isomorphism_to(self, other: "FiniteGroup") -> Optional[tuple[int, ...]]:
        found = self._search_isomorphisms(other, first_only=True)
        return found[0] if found else None

    def isomorphisms_to(self, other: "FiniteGroup") -> list[tuple[int, ...]]:
        """Complete list of isomorphisms self -> other (empty iff not isomorphic)."""
        one = self.isomorphism_to(other)
        if one is None:
            return []
        return sorted(
            tuple(one[alpha[x]] for x in range(self.order))
            for alpha in self.automorphisms()
        )

    def is_isomorphic(self, other: "FiniteGroup") -> bool:
        return self.isomorphism_to(other) is not None


@dataclass(frozen=True)
class GroupElement:
    """A group element, identified by its index in the parent's element table."""

    parent: FiniteGroup
    index: int

    @property
    def perm(self) -> Perm:
        return self.parent.elements[self.index]

    def order(self) -> int:
        return self.parent.order_of(self.index)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(self.parent, self.parent.mul(self.index, other.index))

    def inverse(self) -> "GroupElement":
        return GroupElement(self.parent, self.parent.inv(self.index))

    def __pow__(self, k: int) -> "GroupElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = GroupElement(self.parent, 0)
        for _ in range(k):
            out = out * self
        return out

    def __str__(self) -> str:
        return cycles_str(self.perm)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, GroupElement):
            return NotImplemented
        return self.perm == other.perm

    def __hash__(self) -> int:
        return hash(self.perm)


def _invariant_factors_from_histogram(
    order: int, histogram: dict[int, int]
) -> tuple[int, ...]:
    """Invariant factors of a finite abelian group from its order histogram."""
    if order == 1:
        return ()
    primary: dict[int, list[int]] = {}
    rest = order
    p = 2
    primes = []
    while rest > 1:
        if rest % p == 0:
            primes.append(p)
            while rest % p == 0:
                rest //= p
        p += 1 if p == 2 else 2
    for p in primes:
        # f(k) = #elements whose order divides p^k (within the p-part)
        lam: list[int] = []
        prev = 0
        k = 1
        while True:
            count = sum(c for o, c in histogram.items() if _p_part(o, p) <= p**k)
            fk = _int_log(count_p_part(count, p), p)
            height = fk - prev
            if height == 0:
                break
            lam.append(height)
            prev = fk
            k += 1
        # lam is the conjugate partition; transpose it
        exponents = [sum(1 for h in lam if h > j) for j in range(max(lam))] if lam else []
        primary[p] = sorted((p**e for e in exponents), reverse=True)
    width = max(len(v) for v in primary.values())
    factors = []
    for j in range(width):
        f = 1
        for p in primes:
            vals = primary[p]
            if j < len(vals):
                f *= vals[j]
        factors.append(f)
    return tuple(factors)


def _p_part(n: int, p: int) -> int:
    out = 1
    while n % p == 0:
        out *= p
        n //= p
    return out


def count_p_part(n: int, p: int) -> int:
    return _p_part(n, p)


def _int_log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# spec mini-language


def construct(spec: str, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Build a group from the spec mini-language.

    Grammar: ``C<n>``, ``D<n>`` (dihedral of order 2n), ``<spec>x<spec>``
    (direct product), ``SD(C<n>;[e1,...,ek])`` (cyclic normal factor extended
    by commuting involutions acting as a -> a^ei) and
    ``Perm[<cycles>;<cycles>;...]`` (explicit generators, 1-based points).
    """
    spec = spec.strip().replace(" ", "")
    if not spec:
        raise GroupSpecError("empty group spec")
    parts = _split_product(spec)
    groups = [_construct_atom(part, max_order) for part in parts]
    expected = 1
    for g in groups:
        expected *= g.order
    if expected > max_order:
        raise OrderBoundError(
            f"spec {spec!r} has order {expected}, above the bound {max_order}"
        )
    group = groups[0]
    for other in groups[1:]:
        group = _direct_product(group, other, max_order)
    group.spec = spec
    return group


def _split_product(spec: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(spec):
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        elif ch == "x" and depth == 0:
            parts.append(spec[start:i])
            start = i + 1
    parts.append(spec[start:])
    if any(not p for p in parts):
        raise GroupSpecError(f"malformed product spec {spec!r}")
    return parts


_CYCLIC_RE = re.compile(r"C(\d+)$")
_DIHEDRAL_RE = re.compile(r"D(\d+)$")
_SD_RE = re.compile(r"SD\(C(\d+);\[([\d,]+)\]\)$")
_PERM_RE = re.compile(r"Perm\[(.*)\]$", re.DOTALL)


def _construct_atom(spec: str, max_order: int) -> FiniteGroup:
    m = _CYCLIC_RE.fullmatch(spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise GroupSpecError(f"bad cyclic order in {spec!r}")
        if n > max_order:
            raise OrderBoundError(f"C{n} exceeds the order bound {max_order}")
        if n == 1:
            return FiniteGroup([identity_perm(1)], 1, spec=spec, max_order=max_order)
        gen = tuple((i + 1) % n for i in range(n))
        return FiniteGroup([gen], n, spec=spec, max_order=max_order)
    m = _DIHEDRAL_RE.fullmatch(spec)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise GroupSpecError(f"bad dihedral index in {spec!r}")
        if 2 * n > max_order:
            raise OrderBoundError(f"D{n} exceeds the order bound {max_order}")
        if n == 1:
            return FiniteGroup([(1, 0)], 2, spec=spec, max_order=max_order)
        if n == 2:
            return FiniteGroup([(1, 0, 2, 3), (0, 1, 3, 2)], 4, spec=spec, max_order=max_order)
        r = tuple((i + 1) % n for i in range(n))
        s = tuple((-i) % n for i in range(n))
        return FiniteGroup([r, s], n, spec=spec, max_order=max_order)
    m = _SD_RE.fullmatch(spec)
    if m:
        return _construct_sd(spec, int(m.group(1)), m.group(2), max_order)
    m = _PERM_RE.fullmatch(spec)
    if m:
        gen_texts = [t for t in m.group(1).split(";") if t]
        if not gen_texts:
            raise GroupSpecError(f"no generators in {spec!r}")
        degree = 0
        for t in gen_texts:
            for tok in re.findall(r"\d+", t):
                degree = max(degree, int(tok))
        degree = max(degree, 1)
        gens = [parse_cycles(t, degree) for t in gen_texts]
        return FiniteGroup(gens, degree, spec=spec, max_order=max_order)
    raise GroupSpecError(f"unrecognized group spec {spec!r}")


def _construct_sd(spec: str, n: int, exps_text: str, max_order: int) -> FiniteGroup:
    from math import gcd

    if n < 2:
        raise GroupSpecError(f"SD normal factor must have order >= 2 in {spec!r}")
    exps = [int(tok) % n for tok in exps_text.split(",")]
    for e in exps:
        if e == 0 or gcd(e, n) != 1:
            raise GroupSpecError(
                f"exponent {e} is not a unit mod {n} in {spec!r}"
            )
        if (e * e) % n != 1:
            raise GroupSpecError(
                f"exponent {e} does not define an involution mod {n} in {spec!r}"
            )
    k = len(exps)
    order = n * 2**k
    if order > max_order:
        raise OrderBoundError(f"{spec!r} has order {order}, above the bound {max_order}")
    degree = n + 2 * k
    a = list(range(degree))
    for i in range(n):
        a[i] = (i + 1) % n
    gens = [tuple(a)]
    for j, e in enumerate(exps):
        b = list(range(degree))
        for i in range(n):
            b[i] = (e * i) % n
        b[n + 2 * j], b[n + 2 * j + 1] = n + 2 * j + 1, n + 2 * j
        gens.append(tuple(b))
    return FiniteGroup(gens, degree, spec=spec, max_order=max_order)


def _direct_product(a: FiniteGroup, b: FiniteGroup, max_order: int) -> FiniteGroup:
    degree = a.degree + b.degree
    gens = []
    for g in a.generators:
        gens.append(tuple(g) + tuple(range(a.degree, degree)))
    for g in b.generators:
        gens.append(tuple(range(a.degree)) + tuple(x + a.degree for x in g))
    return FiniteGroup(gens, degree, max_order=max_order)
