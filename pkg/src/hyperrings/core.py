"""Finite commutative multiplicative hyperrings over a canonical carrier.

A hyperring here is a finite abelian group ``(R, +)`` with carrier
``0..n-1`` (0 the additive identity) together with a hyperoperation ``o``
mapping each pair of elements to a nonempty subset of the carrier, subject
to associativity, weak distributivity ``a o (b+c) <= a o b + a o c`` and
sign compatibility ``a o (-b) = (-a) o b = -(a o b)``.

Hyperproduct values are stored as bitmasks (see :mod:`hyperrings.bitsets`).
Instances are immutable after validation and safe to share; every operation
in this package is a pure function of its inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .bitsets import bits, full_mask, is_subset, mask_of, singleton

ZERO_MASK = 1  # the subset {0}


class HyperRingError(Exception):
    """Base class for structural errors raised by this package."""


class DimensionMismatch(HyperRingError):
    """Tables are not square, not aligned, or contain out-of-range indices."""


class EmptyHyperproduct(HyperRingError):
    """A hyperproduct cell is empty, which the definition forbids."""

    def __init__(self, a: int, b: int):
        super().__init__(f"hyperproduct cell ({a}, {b}) is empty")
        self.cell = (a, b)


class AxiomViolation(HyperRingError):
    """A structure law failed; carries the axiom id and a witness tuple."""

    def __init__(self, axiom: str, witness: tuple, detail: str = ""):
        msg = f"axiom {axiom!r} violated at witness {witness}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
        self.axiom = axiom
        self.witness = witness


class NoIdentity(HyperRingError):
    """Invertibility was queried on a hyperring without an identity."""


class CapExceeded(HyperRingError):
    """An exhaustive computation was asked for beyond its configured cap."""

    def __init__(self, what: str, value: int, cap: int):
        super().__init__(f"{what} {value} exceeds cap {cap}")
        self.what = what
        self.value = value
        self.cap = cap


@dataclass(frozen=True)
class HyperRing:
    """A validated finite multiplicative hyperring.

    ``add[a][b]`` is the element ``a + b``; ``hmul[a][b]`` is the bitmask of
    the subset ``a o b``.  ``commutative`` is False only for structures
    produced by the matrix construction, which is the single sanctioned
    source of non-commutative carriers.
    """

    name: str
    size: int
    add: tuple[tuple[int, ...], ...]
    hmul: tuple[tuple[int, ...], ...]
    identity: Optional[int]
    scalar_identity: bool
    commutative: bool = True
    provenance: Optional[tuple[tuple[str, str], ...]] = None

    @cached_property
    def neg(self) -> tuple[int, ...]:
        """Additive inverse of each element."""
        out = [0] * self.size
        for a in range(self.size):
            for b in range(self.size):
                if self.add[a][b] == 0:
                    out[a] = b
                    break
        return tuple(out)

    @cached_property
    def sub(self) -> tuple[tuple[int, ...], ...]:
        """Subtraction table: ``sub[a][b] = a - b``."""
        neg = self.neg
        return tuple(
            tuple(self.add[a][neg[b]] for b in range(self.size))
            for a in range(self.size)
        )

    @cached_property
    def carrier_mask(self) -> int:
        return full_mask(self.size)

    def neg_mask(self, mask: int) -> int:
        out = 0
        for x in bits(mask):
            out |= 1 << self.neg[x]
        return out

    def table_key(self) -> tuple:
        """Content identity ignoring the name, used for corpus dedup."""
        return (self.size, self.add, self.hmul)

    def __repr__(self) -> str:  # keep reports compact
        return f"HyperRing({self.name!r}, size={self.size})"


def hprod(ring: HyperRing, a_mask: int, b_mask: int) -> int:
    """Hyperproduct of two subsets: the union of all pairwise ``a o b``."""
    hm = ring.hmul
    out = 0
    for a in bits(a_mask):
        row = hm[a]
        for b in bits(b_mask):
            out |= row[b]
    return out


def set_sum(ring: HyperRing, a_mask: int, b_mask: int) -> int:
    """Elementwise sum of two subsets: ``{x + y : x in A, y in B}``."""
    add = ring.add
    out = 0
    for a in bits(a_mask):
        row = add[a]
        for b in bits(b_mask):
            out |= 1 << row[b]
    return out


def power_orbit(ring: HyperRing, x: int) -> list[int]:
    """The sequence of subsets ``x^1, x^2, ...`` up to its first repeat.

    The map ``m -> m o {x}`` is deterministic, so the power sequence is
    eventually periodic; returning the orbit up to the first repeated mask
    makes "some power satisfies P" questions exact with no exponent bound.
    """
    seen: set[int] = set()
    orbit: list[int] = []
    m = singleton(x)
    while m not in seen:
        seen.add(m)
        orbit.append(m)
        m = hprod(ring, m, singleton(x))
    return orbit


def power_of_element(ring: HyperRing, x: int, n: int) -> int:
    """The subset ``x^n`` for ``n >= 1``; ``x^1 = {x}``."""
    if n < 1:
        raise ValueError("exponent must be >= 1")
    m = singleton(x)
    for _ in range(n - 1):
        m = hprod(ring, m, singleton(x))
    return m


def is_nilpotent(ring: HyperRing, x: int) -> bool:
    """True iff ``x^n = {0}`` for some n (exact via the power orbit)."""
    return any(m == ZERO_MASK for m in power_orbit(ring, x))


def ann_mask(ring: HyperRing, x: int) -> int:
    """Annihilator of an element: all y with ``x o y = {0}``."""
    out = 0
    for y in range(ring.size):
        if ring.hmul[x][y] == ZERO_MASK:
            out |= 1 << y
    return out


def is_nzd(ring: HyperRing, x: int) -> bool:
    """Non-zero-divisor: the annihilator is exactly ``{0}``."""
    return ann_mask(ring, x) == ZERO_MASK


def is_zero_divisor(ring: HyperRing, x: int) -> bool:
    """True iff ``x o y = {0}`` for some nonzero y."""
    for y in range(1, ring.size):
        if ring.hmul[x][y] == ZERO_MASK:
            return True
    return False


def zero_divisor_mask(ring: HyperRing) -> int:
    return mask_of(x for x in range(ring.size) if is_zero_divisor(ring, x))


def nzd_mask(ring: HyperRing) -> int:
    return mask_of(x for x in range(ring.size) if is_nzd(ring, x))


def is_regular_vnr(ring: HyperRing, x: int) -> bool:
    """Von Neumann regular element: ``x in x^2 o y`` for some y."""
    sq = ring.hmul[x][x]
    bit = singleton(x)
    for y in range(ring.size):
        if hprod(ring, sq, singleton(y)) & bit:
            return True
    return False


def vnr_mask(ring: HyperRing) -> int:
    return mask_of(x for x in range(ring.size) if is_regular_vnr(ring, x))


def is_invertible(ring: HyperRing, x: int) -> bool:
    """True iff ``e in x o y`` for some y, with e the detected identity."""
    if ring.identity is None:
        raise NoIdentity(f"{ring.name} has no identity element")
    ebit = singleton(ring.identity)
    return any(ring.hmul[x][y] & ebit for y in range(ring.size))


@dataclass(frozen=True)
class ElementFlags:
    zero_divisor: bool
    nilpotent: bool
    regular_vnr: bool
    nzd: bool
    invertible: Optional[bool]  # None when the ring has no identity
    idempotent: bool  # weak reading: x in x o x
    idempotent_strict: bool  # strict reading: x o x = {x}


def element_predicates(ring: HyperRing, x: int) -> ElementFlags:
    sq = ring.hmul[x][x]
    return ElementFlags(
        zero_divisor=is_zero_divisor(ring, x),
        nilpotent=is_nilpotent(ring, x),
        regular_vnr=is_regular_vnr(ring, x),
        nzd=is_nzd(ring, x),
        invertible=is_invertible(ring, x) if ring.identity is not None else None,
        idempotent=bool(sq & singleton(x)),
        idempotent_strict=sq == singleton(x),
    )


@dataclass(frozen=True)
class RingFlags:
    integral_hyperdomain: bool
    reduced: bool
    regular_ring: bool
    invertible_ring: Optional[bool]  # None when the ring has no identity


def is_integral_hyperdomain(ring: HyperRing) -> bool:
    """``0 in x o y`` forces x = 0 or y = 0."""
    for x in range(1, ring.size):
        row = ring.hmul[x]
        for y in range(1, ring.size):
            if row[y] & ZERO_MASK:
                return False
    return True


def classify_ring(ring: HyperRing) -> RingFlags:
    reduced = not any(is_nilpotent(ring, x) for x in range(1, ring.size))
    regular = all(is_regular_vnr(ring, x) for x in range(ring.size))
    if ring.identity is None:
        invertible = None
    else:
        # Invertibility is only demanded of nonzero elements: requiring it
        # of 0 would make the flag false on every field.
        invertible = all(is_invertible(ring, x) for x in range(1, ring.size))
    return RingFlags(
        integral_hyperdomain=is_integral_hyperdomain(ring),
        reduced=reduced,
        regular_ring=regular,
        invertible_ring=invertible,
    )


def _detect_identity(size: int, hmul: Sequence[Sequence[int]],
                     commutative: bool) -> tuple[Optional[int], bool]:
    """Find an identity: prefer a scalar identity, then the least index."""
    scalar = None
    plain = None
    for e in range(size):
        if all(hmul[a][e] == singleton(a) and hmul[e][a] == singleton(a)
               for a in range(size)):
            scalar = e
            break
    for e in range(size):
        if all(hmul[a][e] & singleton(a) and hmul[e][a] & singleton(a)
               for a in range(size)):
            plain = e
            break
    if scalar is not None:
        return scalar, True
    return plain, False


def validate_hyperring(
    name: str,
    add: Sequence[Sequence[int]],
    hmul: Sequence[Sequence[Iterable[int]]],
    *,
    require_commutative: bool = True,
    provenance: Optional[dict] = None,
) -> HyperRing:
    """Validate raw tables and return an immutable :class:`HyperRing`.

    Checks run in a fixed order and the first failure raises; the axiom ids
    are: add-identity, add-commutative, add-associative, add-inverse,
    hmul-commutative, hmul-associative, distributive, sign-compatible.
    Empty cells raise :class:`EmptyHyperproduct`, shape problems
    :class:`DimensionMismatch`.
    """
    n = len(add)
    if n < 1:
        raise DimensionMismatch("carrier must have at least one element")
    if len(hmul) != n:
        raise DimensionMismatch(f"add is {n}x{n} but hmul has {len(hmul)} rows")
    add_rows: list[tuple[int, ...]] = []
    for a, row in enumerate(add):
        if len(row) != n:
            raise DimensionMismatch(f"add row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not isinstance(v, int) or not 0 <= v < n:
                raise DimensionMismatch(f"add[{a}][{b}] = {v!r} out of range 0..{n - 1}")
        add_rows.append(tuple(row))
    hmul_rows: list[tuple[int, ...]] = []
    for a, row in enumerate(hmul):
        if len(row) != n:
            raise DimensionMismatch(f"hmul row {a} has length {len(row)}, expected {n}")
        masks = []
        for b, cell in enumerate(row):
            elems = list(cell)
            if not elems:
                raise EmptyHyperproduct(a, b)
            for v in elems:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise DimensionMismatch(
                        f"hmul[{a}][{b}] contains {v!r}, out of range 0..{n - 1}")
            masks.append(mask_of(elems))
        hmul_rows.append(tuple(masks))

    addt = tuple(add_rows)
    hmt = tuple(hmul_rows)

    # (carrier, +) is an abelian group with identity 0.
    for a in range(n):
        if addt[a][0] != a or addt[0][a] != a:
            raise AxiomViolation("add-identity", (a,), f"0 + {a} or {a} + 0 != {a}")
    for a in range(n):
        for b in range(a + 1, n):
            if addt[a][b] != addt[b][a]:
                raise AxiomViolation("add-commutative", (a, b))
    for a in range(n):
        for b in range(n):
            ab = addt[a][b]
            for c in range(n):
                if addt[ab][c] != addt[a][addt[b][c]]:
                    raise AxiomViolation("add-associative", (a, b, c))
    neg = [None] * n
    for a in range(n):
        for b in range(n):
            if addt[a][b] == 0:
                neg[a] = b
                break
        if neg[a] is None:
            raise AxiomViolation("add-inverse", (a,), "no additive inverse")

    commutative = all(
        hmt[a][b] == hmt[b][a] for a in range(n) for b in range(a + 1, n)
    )
    if require_commutative and not commutative:
        for a in range(n):
            for b in range(a + 1, n):
                if hmt[a][b] != hmt[b][a]:
                    raise AxiomViolation("hmul-commutative", (a, b))

    # Associativity at subset level: (a o b) o c == a o (b o c).
    for a in range(n):
        for b in range(n):
            ab = hmt[a][b]
            for c in range(n):
                left = 0
                for t in bits(ab):
                    left |= hmt[t][c]
                right = 0
                for u in bits(hmt[b][c]):
                    right |= hmt[a][u]
                if left != right:
                    raise AxiomViolation("hmul-associative", (a, b, c))

    # Weak distributivity: a o (b+c) is contained in a o b + a o c.
    for a in range(n):
        for b in range(n):
            for c in range(n):
                lhs = hmt[a][addt[b][c]]
                rhs = 0
                for x in bits(hmt[a][b]):
                    arow = addt[x]
                    for y in bits(hmt[a][c]):
                        rhs |= 1 << arow[y]
                if not is_subset(lhs, rhs):
                    raise AxiomViolation("distributive", (a, b, c))
                if not commutative:
                    lhs2 = hmt[addt[b][c]][a]
                    rhs2 = 0
                    for x in bits(hmt[b][a]):
                        arow = addt[x]
                        for y in bits(hmt[c][a]):
                            rhs2 |= 1 << arow[y]
                    if not is_subset(lhs2, rhs2):
                        raise AxiomViolation("distributive", (b, c, a))

    # Sign compatibility: a o (-b) = (-a) o b = -(a o b).
    for a in range(n):
        for b in range(n):
            prod = hmt[a][b]
            negprod = 0
            for x in bits(prod):
                negprod |= 1 << neg[x]
            if hmt[a][neg[b]] != negprod or hmt[neg[a]][b] != negprod:
                raise AxiomViolation("sign-compatible", (a, b))

    identity, scalar = _detect_identity(n, hmt, commutative)
    prov = None
    if provenance:
        prov = tuple(sorted((str(k), str(v)) for k, v in provenance.items()))
    return HyperRing(
        name=name,
        size=n,
        add=addt,
        hmul=hmt,
        identity=identity,
        scalar_identity=scalar,
        commutative=commutative,
        provenance=prov,
    )
