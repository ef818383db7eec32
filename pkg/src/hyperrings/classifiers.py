"""Classification of hyperideals and of multiplicatively closed subsets.

Two classification modes exist because the source definitions restrict
prime and primary hyperideals to nonzero proper ones, while the zero ideal
still needs to be classifiable (radicals and the domain criteria depend on
its primality):

* ``relaxed`` (default): properness is required for prime/primary/n, the
  zero ideal is allowed everywhere, and the r-law is evaluated on improper
  ideals too (where it holds vacuously).
* ``strict``: prime/primary additionally exclude the zero ideal, and the
  r-classification requires properness.

Witnesses are always the lexicographically least failing tuple, so
counterexample reports are stable across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .bitsets import bits, is_subset, singleton, subset_key
from .core import (
    HyperRing,
    HyperRingError,
    NoIdentity,
    ZERO_MASK,
    nzd_mask,
    vnr_mask,
)
from .ideals import (
    IdealProfile,
    hyperideal_masks,
    is_C_hyperideal,
    prime_condition_holds,
    profile,
    radical,
    zero_radical,
)

MODE_RELAXED = "relaxed"
MODE_STRICT = "strict"

REGULAR_NZD = "nzd"
REGULAR_VNR = "vnr"


class NotDisjoint(HyperRingError):
    """The seed ideal already meets the closed subset."""


def regular_mask(ring: HyperRing, notion: str = REGULAR_NZD) -> int:
    if notion == REGULAR_NZD:
        return nzd_mask(ring)
    if notion == REGULAR_VNR:
        return vnr_mask(ring)
    raise ValueError(f"unknown regular-element notion {notion!r}")


def prime_witness(ring: HyperRing, members: int) -> Optional[tuple[int, int]]:
    """Least pair (x, y) outside the ideal whose product lies inside it."""
    for x in range(ring.size):
        if members & singleton(x):
            continue
        for y in range(ring.size):
            if members & singleton(y):
                continue
            if is_subset(ring.hmul[x][y], members):
                return (x, y)
    return None


def is_prime(ring: HyperRing, members: int, mode: str = MODE_RELAXED) -> bool:
    if members == ring.carrier_mask:
        return False
    if mode == MODE_STRICT and members == ZERO_MASK:
        return False
    return prime_condition_holds(ring, members)


def primary_witness(ring: HyperRing, members: int) -> Optional[tuple[int, int]]:
    rad = radical(ring, members)
    for x in range(ring.size):
        xin = bool(members & singleton(x))
        for y in range(ring.size):
            if is_subset(ring.hmul[x][y], members):
                if not xin and not rad & singleton(y):
                    return (x, y)
    return None


def is_primary(ring: HyperRing, members: int, mode: str = MODE_RELAXED) -> bool:
    if members == ring.carrier_mask:
        return False
    if mode == MODE_STRICT and members == ZERO_MASK:
        return False
    return primary_witness(ring, members) is None


def r_witness(ring: HyperRing, members: int,
              regular: str = REGULAR_NZD) -> Optional[tuple[int, int]]:
    """Least (x, y) with x regular, ``x o y`` inside the ideal, y outside."""
    reg = regular_mask(ring, regular)
    for x in bits(reg):
        row = ring.hmul[x]
        for y in range(ring.size):
            if members & singleton(y):
                continue
            if is_subset(row[y], members):
                return (x, y)
    return None


def r_closure_holds(ring: HyperRing, members: int,
                    regular: str = REGULAR_NZD) -> bool:
    return r_witness(ring, members, regular) is None


def is_r_hyperideal(ring: HyperRing, members: int, mode: str = MODE_RELAXED,
                    regular: str = REGULAR_NZD) -> bool:
    """r-law: ``x o y`` inside I with x a non-zero-divisor forces y into I.

    The defining law does not mention properness, so the relaxed mode
    classifies the full carrier as (vacuously) r; strict mode requires a
    proper ideal.
    """
    if mode == MODE_STRICT and members == ring.carrier_mask:
        return False
    return r_closure_holds(ring, members, regular)


def n_witness(ring: HyperRing, members: int,
              cap: Optional[int] = None) -> Optional[tuple[int, int]]:
    rad0 = zero_radical(ring, cap)
    for x in range(ring.size):
        if rad0 & singleton(x):
            continue
        row = ring.hmul[x]
        for y in range(ring.size):
            if members & singleton(y):
                continue
            if is_subset(row[y], members):
                return (x, y)
    return None


def is_n_hyperideal(ring: HyperRing, members: int, mode: str = MODE_RELAXED,
                    cap: Optional[int] = None) -> bool:
    """n-law on a proper hyperideal: ``x o y`` inside I with x outside the
    radical of zero forces y into I.  Properness is part of the definition
    in both modes."""
    if members == ring.carrier_mask:
        return False
    return n_witness(ring, members, cap) is None


CLASS_HYPERIDEAL = "hyperideal"
CLASS_PRIME = "prime"
CLASS_R = "r_ideal"
CLASS_N = "n_ideal"


def class_members(ring: HyperRing, which: str, mode: str = MODE_RELAXED,
                  regular: str = REGULAR_NZD,
                  cap: Optional[int] = None) -> list[int]:
    """Proper hyperideals of the requested class, in canonical order."""
    proper = [m for m in hyperideal_masks(ring, cap) if m != ring.carrier_mask]
    if which == CLASS_HYPERIDEAL:
        return proper
    if which == CLASS_PRIME:
        return [m for m in proper if is_prime(ring, m, mode)]
    if which == CLASS_R:
        return [m for m in proper if r_closure_holds(ring, m, regular)]
    if which == CLASS_N:
        return [m for m in proper if is_n_hyperideal(ring, m, mode)]
    raise ValueError(f"unknown ideal class {which!r}")


def is_maximal_in_class(ring: HyperRing, members: int, which: str,
                        mode: str = MODE_RELAXED, regular: str = REGULAR_NZD,
                        cap: Optional[int] = None) -> bool:
    family = class_members(ring, which, mode, regular, cap)
    if members not in family:
        return False
    return not any(m != members and is_subset(members, m) for m in family)


def is_minimal_nonzero(ring: HyperRing, members: int,
                       cap: Optional[int] = None) -> bool:
    """Minimal among hyperideals that contain a nonzero element."""
    if members == ZERO_MASK:
        return False
    for m in hyperideal_masks(ring, cap):
        if m != ZERO_MASK and m != members and is_subset(m, members):
            return False
    return True


def minimal_primes(ring: HyperRing, mode: str = MODE_RELAXED,
                   cap: Optional[int] = None) -> list[int]:
    primes = class_members(ring, CLASS_PRIME, mode, cap=cap)
    return [p for p in primes
            if not any(q != p and is_subset(q, p) for q in primes)]


def is_essential(ring: HyperRing, members: int, cap: Optional[int] = None) -> bool:
    """Nonzero, and meets every nonzero hyperideal beyond {0}."""
    if members == ZERO_MASK:
        return False
    for m in hyperideal_masks(ring, cap):
        if m == ZERO_MASK:
            continue
        if members & m == ZERO_MASK:
            return False
    return True


def is_mult_closed(ring: HyperRing, subset: int) -> bool:
    """Plain multiplicative closure: ``a o b`` stays inside for a, b in S."""
    if subset == 0:
        return False
    for a in bits(subset):
        row = ring.hmul[a]
        for b in bits(subset):
            if not is_subset(row[b], subset):
                return False
    return True


def is_r_mult_closed(ring: HyperRing, subset: int, regular: str = REGULAR_NZD,
                     lenient: bool = False) -> bool:
    """Closed subset dual to r-hyperideals.

    Literal reading: contains the identity but not zero, contains some
    regular element other than the identity, and is closed under
    multiplication by its regular members.  The lenient reading waives the
    extra-regular-element clause when the ring has no regular element
    besides the identity (otherwise no subset of such a ring could qualify
    and complement duality would fail on fields of size two).
    """
    if ring.identity is None:
        raise NoIdentity(f"{ring.name} has no identity element")
    if subset == 0:
        return False
    e = ring.identity
    if not subset & singleton(e):
        return False
    if subset & ZERO_MASK:
        return False
    reg = regular_mask(ring, regular)
    extra = reg & ~singleton(e)
    if not subset & extra and not (lenient and extra == 0):
        return False
    for r in bits(reg & subset):
        row = ring.hmul[r]
        for a in bits(subset):
            if not is_subset(row[a], subset):
                return False
    return True


def is_n_mult_closed(ring: HyperRing, subset: int,
                     cap: Optional[int] = None) -> bool:
    """Contains everything outside the radical of zero and is closed under
    multiplication by such elements."""
    if subset == 0:
        return False
    outside = ring.carrier_mask & ~zero_radical(ring, cap)
    if not is_subset(outside, subset):
        return False
    for a in bits(outside):
        row = ring.hmul[a]
        for b in bits(subset):
            if not is_subset(row[b], subset):
                return False
    return True


def maximal_disjoint_masks(ring: HyperRing, subset: int, seed: int,
                           cap: Optional[int] = None) -> list[int]:
    """All hyperideals containing the seed, disjoint from the subset, and
    maximal under inclusion among such."""
    if seed & subset:
        raise NotDisjoint("seed ideal meets the closed subset")
    family = [m for m in hyperideal_masks(ring, cap)
              if is_subset(seed, m) and not m & subset]
    return [m for m in family
            if not any(o != m and is_subset(m, o) for o in family)]


def maximal_disjoint_ideal(ring: HyperRing, subset: int, seed: int,
                           cap: Optional[int] = None) -> IdealProfile:
    """Deterministic representative (canonical-least) maximal disjoint ideal."""
    options = maximal_disjoint_masks(ring, subset, seed, cap)
    if not options:
        raise NotDisjoint("no hyperideal contains the seed and avoids the subset")
    return profile(ring, min(options, key=subset_key))


@dataclass(frozen=True)
class ClassificationFlags:
    prime: bool
    primary: bool
    maximal: bool
    minimal_nonzero: bool
    essential: bool
    r_ideal: bool
    n_ideal: bool
    is_C: bool
    witnesses: tuple[tuple[str, tuple[int, int]], ...]


def classify_ideal(ring: HyperRing, members: int, mode: str = MODE_RELAXED,
                   regular: str = REGULAR_NZD,
                   cap: Optional[int] = None) -> ClassificationFlags:
    witnesses: list[tuple[str, tuple[int, int]]] = []
    prime = is_prime(ring, members, mode)
    if not prime and members != ring.carrier_mask:
        w = prime_witness(ring, members)
        if w is not None:
            witnesses.append(("prime", w))
    r_flag = is_r_hyperideal(ring, members, mode, regular)
    if not r_flag:
        w = r_witness(ring, members, regular)
        if w is not None:
            witnesses.append(("r_ideal", w))
    n_flag = is_n_hyperideal(ring, members, mode, cap)
    if not n_flag and members != ring.carrier_mask:
        w = n_witness(ring, members, cap)
        if w is not None:
            witnesses.append(("n_ideal", w))
    return ClassificationFlags(
        prime=prime,
        primary=is_primary(ring, members, mode),
        maximal=is_maximal_in_class(ring, members, CLASS_HYPERIDEAL, mode,
                                    regular, cap),
        minimal_nonzero=is_minimal_nonzero(ring, members, cap),
        essential=is_essential(ring, members, cap),
        r_ideal=r_flag,
        n_ideal=n_flag,
        is_C=is_C_hyperideal(ring, members),
        witnesses=tuple(witnesses),
    )
