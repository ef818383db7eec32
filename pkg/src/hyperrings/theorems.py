"""Registry of machine-checkable propositions about r- and n-hyperideals,
with an exhaustive runner over a corpus of finite hyperrings.

Every registry entry instantiates its quantifiers exhaustively over the
ring under test (ideals, elements, bounded families of subsets, covers by
up to three ideals, and good homomorphisms between corpus members within a
size cap) and returns one of three verdicts: ``holds``, ``counterexample``
(with the lexicographically least witness), or ``not-applicable`` with a
reason.

Readings
--------
A handful of notions are genuinely ambiguous in the underlying theory, so
entries are evaluated under explicit reading flags and any divergence from
the default reading is reported as reading-sensitive rather than as a
failure:

* ``regular``: whether "regular element" means non-zero-divisor (default)
  or von Neumann regular.
* ``product``: whether an ideal product means the literal set product
  (default) or its additive/ideal closure.
* ``prime_mode``: whether the zero ideal may be classified prime (default
  ``relaxed``) or primes must be nonzero (``strict``).
* ``idempotent``: ``x in x o x`` (default ``weak``) or ``x o x = {x}``.
* ``closed_subset``: the extra-regular-element clause of r-closed subsets,
  waived when no such element exists in the ring (default ``lenient``) or
  enforced literally (``literal``).
* ``standing``: every entry assumes a commutative carrier with identity in
  which every hyperideal is a C-hyperideal; rings violating the C part are
  skipped by default (``required``) or tested anyway (``waived``).

The default reading of each axis is listed first in ``READING_AXES``.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Optional

from .bitsets import bits, elements_of, is_subset, singleton, subset_key
from .core import (
    CapExceeded,
    HyperRing,
    ZERO_MASK,
    classify_ring,
    hprod,
    is_nilpotent,
    nzd_mask,
    set_sum,
    vnr_mask,
    zero_divisor_mask,
)
from .classifiers import (
    MODE_RELAXED,
    MODE_STRICT,
    is_essential,
    is_minimal_nonzero,
    is_n_hyperideal,
    is_n_mult_closed,
    is_prime,
    is_primary,
    is_r_mult_closed,
    maximal_disjoint_masks,
    r_closure_holds,
    r_witness,
)
from .construct import (
    DEFAULT_GAMMA_CAP,
    FundamentalRingImage,
    GoodHomomorphism,
    IllDefinedQuotient,
    IllFormedQuotient,
    QuotientImage,
    classical_n_ideal,
    enumerate_good_homomorphisms,
    fundamental_ring,
    matrix_hyperring,
    matrix_ideal_mask,
    product_factor_sizes,
    quotient,
    subhyperring_masks,
    subhyperring_restrict,
)
from .ideals import (
    ann,
    ann_of_set,
    colon,
    generated_ideal_mask,
    hyperideal_masks,
    ideal_product,
    is_C_hyperideal,
    is_hyperideal,
    set_product,
    zero_radical,
)

HOM_SIZE_CAP = 36
COVER_MAX = 3

HOLDS = "holds"
COUNTEREXAMPLE = "counterexample"
NOT_APPLICABLE = "not-applicable"

READING_AXES: dict[str, tuple[str, ...]] = {
    "regular": ("nzd", "vnr"),
    "product": ("raw", "closed"),
    "prime_mode": (MODE_RELAXED, MODE_STRICT),
    "idempotent": ("weak", "strict"),
    "closed_subset": ("lenient", "literal"),
    "mult_subset": ("regular", "any"),
    "standing": ("required", "waived"),
}

DEFAULT_READING: dict[str, str] = {axis: options[0]
                                   for axis, options in READING_AXES.items()}


@dataclass(frozen=True)
class Reading:
    regular: str = "nzd"
    product: str = "raw"
    prime_mode: str = MODE_RELAXED
    idempotent: str = "weak"
    closed_subset: str = "lenient"
    mult_subset: str = "regular"
    standing: str = "required"

    def with_flags(self, **kw: str) -> "Reading":
        data = self.__dict__ | kw
        return Reading(**data)

    def label(self, axes: tuple[str, ...]) -> str:
        return ",".join(f"{a}={getattr(self, a)}" for a in sorted(axes))


def reading_from_flags(flags: dict[str, str]) -> Reading:
    for axis, value in flags.items():
        if axis not in READING_AXES:
            raise ValueError(f"unknown reading axis {axis!r}")
        if value not in READING_AXES[axis]:
            raise ValueError(f"axis {axis!r} has no reading {value!r}")
    return Reading(**(DEFAULT_READING | flags))


# ---------------------------------------------------------------------------
# per-ring workspace


class RingContext:
    """Cached per-ring data shared by all registry entries."""

    def __init__(self, ring: HyperRing, enumeration_cap: int = 16,
                 gamma_cap: int = DEFAULT_GAMMA_CAP,
                 matrix_cap: int = 16):
        self.ring = ring
        self.enumeration_cap = enumeration_cap
        self.gamma_cap = gamma_cap
        self.matrix_cap = matrix_cap
        self._cache: dict = {}

    def _memo(self, key, producer):
        if key not in self._cache:
            self._cache[key] = producer()
        return self._cache[key]

    # -- basic families ----------------------------------------------------
    @property
    def size(self) -> int:
        return self.ring.size

    @property
    def e(self) -> Optional[int]:
        return self.ring.identity

    def ideals(self) -> tuple[int, ...]:
        return self._memo("ideals",
                          lambda: hyperideal_masks(self.ring, self.enumeration_cap))

    def proper(self) -> tuple[int, ...]:
        return self._memo("proper", lambda: tuple(
            m for m in self.ideals() if m != self.ring.carrier_mask))

    def genzero(self) -> int:
        return self._memo("genzero",
                          lambda: generated_ideal_mask(self.ring, ZERO_MASK))

    def rad0(self) -> int:
        return self._memo("rad0", lambda: zero_radical(self.ring,
                                                       self.enumeration_cap))

    def is_C(self, members: int) -> bool:
        return is_C_hyperideal(self.ring, members)

    def standing_ok(self) -> bool:
        def compute() -> bool:
            if self.ring.identity is None or not self.ring.commutative:
                return False
            return all(self.is_C(m) for m in self.proper())
        return self._memo("standing", compute)

    # -- element sets -------------------------------------------------------
    def nzd(self) -> int:
        return self._memo("nzd", lambda: nzd_mask(self.ring))

    def vnr(self) -> int:
        return self._memo("vnr", lambda: vnr_mask(self.ring))

    def reg(self, rd: Reading) -> int:
        return self.nzd() if rd.regular == "nzd" else self.vnr()

    def zmask(self) -> int:
        return self._memo("zmask", lambda: zero_divisor_mask(self.ring))

    # -- classifications ----------------------------------------------------
    def is_n(self, members: int) -> bool:
        key = ("is_n", members)
        return self._memo(key, lambda: is_n_hyperideal(
            self.ring, members, cap=self.enumeration_cap))

    def r_ok(self, members: int) -> bool:
        key = ("r_ok", members)
        return self._memo(key, lambda: r_closure_holds(self.ring, members))

    def n_class(self) -> tuple[int, ...]:
        return self._memo("n_class", lambda: tuple(
            m for m in self.proper() if self.is_n(m)))

    def r_class(self) -> tuple[int, ...]:
        return self._memo("r_class", lambda: tuple(
            m for m in self.proper() if self.r_ok(m)))

    def primes(self, rd: Reading) -> tuple[int, ...]:
        key = ("primes", rd.prime_mode)
        return self._memo(key, lambda: tuple(
            m for m in self.proper() if is_prime(self.ring, m, rd.prime_mode)))

    def minimal_primes(self, rd: Reading) -> tuple[int, ...]:
        primes = self.primes(rd)
        return tuple(p for p in primes
                     if not any(q != p and is_subset(q, p) for q in primes))

    def maximal_of(self, family: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(m for m in family
                     if not any(o != m and is_subset(m, o) for o in family))

    # -- arithmetic ----------------------------------------------------------
    def prod(self, rd: Reading, left: int, right: int) -> int:
        if rd.product == "raw":
            return set_product(self.ring, left, right)
        return ideal_product(self.ring, left, right).members

    def colon(self, members: int, against: int) -> int:
        key = ("colon", members, against)
        return self._memo(key, lambda: colon(self.ring, members, against))

    def ann(self, x: int) -> int:
        key = ("ann", x)
        return self._memo(key, lambda: ann(self.ring, x))

    # -- bounded subset families ---------------------------------------------
    def mult_closed_family(self) -> tuple[int, ...]:
        """Closures of single elements (plus the identity) under products."""
        def close(seed: int) -> int:
            m = seed
            while True:
                grown = m | hprod(self.ring, m, m)
                if grown == m:
                    return m
                m = grown

        def compute() -> tuple[int, ...]:
            seeds = [singleton(x) for x in range(self.size)]
            if self.e is not None:
                seeds += [singleton(x) | singleton(self.e)
                          for x in range(self.size)]
            return tuple(sorted({close(s) for s in seeds}, key=subset_key))
        return self._memo("mult_closed_family", compute)

    def candidate_subsets(self) -> tuple[int, ...]:
        """Deterministic family used to instantiate subset quantifiers:
        complements of proper ideals plus multiplicative closures."""
        def compute() -> tuple[int, ...]:
            out = {self.ring.carrier_mask & ~m for m in self.proper()}
            out.update(self.mult_closed_family())
            nonrad = self.ring.carrier_mask & ~self.rad0()
            if nonrad:
                m = nonrad
                while True:
                    grown = m
                    for a in bits(nonrad):
                        grown |= hprod(self.ring, singleton(a), m)
                    if grown == m:
                        break
                    m = grown
                out.add(m)
            out.discard(0)
            return tuple(sorted(out, key=subset_key))
        return self._memo("candidate_subsets", compute)

    def rmc_family(self, rd: Reading) -> tuple[int, ...]:
        key = ("rmc", rd.regular, rd.closed_subset)
        lenient = rd.closed_subset == "lenient"
        return self._memo(key, lambda: tuple(
            s for s in self.candidate_subsets()
            if is_r_mult_closed(self.ring, s, rd.regular, lenient)))

    def nmc_family(self) -> tuple[int, ...]:
        return self._memo("nmc", lambda: tuple(
            s for s in self.candidate_subsets()
            if is_n_mult_closed(self.ring, s, self.enumeration_cap)))

    def colon_subjects(self) -> tuple[int, ...]:
        """Subsets used for colon-style quantifiers: singletons, ideals,
        and the full carrier."""
        def compute() -> tuple[int, ...]:
            out = {singleton(x) for x in range(self.size)}
            out.update(self.ideals())
            out.add(self.ring.carrier_mask)
            return tuple(sorted(out, key=subset_key))
        return self._memo("colon_subjects", compute)

    # -- constructions --------------------------------------------------------
    def quotient_image(self, ideal: int) -> QuotientImage:
        key = ("quotient", ideal)
        return self._memo(key, lambda: quotient(self.ring, ideal))

    def fundamental(self) -> FundamentalRingImage:
        return self._memo("fundamental",
                          lambda: fundamental_ring(self.ring, self.gamma_cap))

    def matrix2(self) -> tuple[HyperRing, "RingContext"]:
        def compute():
            m2 = matrix_hyperring(self.ring, 2, cap=self.matrix_cap)
            return m2, RingContext(m2, enumeration_cap=max(16, m2.size),
                                   gamma_cap=self.gamma_cap,
                                   matrix_cap=self.matrix_cap)
        return self._memo("matrix2", compute)


def _elems(mask: int) -> list[int]:
    return elements_of(mask)


# ---------------------------------------------------------------------------
# registry entries


CheckResult = tuple[str, Optional[dict]]
Checker = Callable[[RingContext, Reading, "Suite"], CheckResult]


@dataclass(frozen=True)
class TheoremEntry:
    tid: str
    statement: str
    axes: tuple[str, ...]
    checker: Checker
    requires_scalar_identity: bool = False
    requires_gamma: bool = False
    requires_matrix: bool = False
    requires_product: bool = False
    notes: str = ""


class Suite:
    """Shared context for a run: the corpus and cross-ring caches."""

    def __init__(self, contexts: list[RingContext]):
        self.contexts = contexts
        self._hom_cache: dict[tuple[int, int], list[GoodHomomorphism]] = {}

    def homs(self, src: RingContext, dst: RingContext) -> list[GoodHomomorphism]:
        key = (id(src.ring), id(dst.ring))
        if key not in self._hom_cache:
            try:
                self._hom_cache[key] = enumerate_good_homomorphisms(
                    src.ring, dst.ring)
            except CapExceeded:
                self._hom_cache[key] = []
        return self._hom_cache[key]


REGISTRY: list[TheoremEntry] = []


def entry(tid: str, statement: str, axes: tuple[str, ...] = (), **kw):
    def wrap(fn: Checker) -> Checker:
        REGISTRY.append(TheoremEntry(tid=tid, statement=statement, axes=axes,
                                     checker=fn, **kw))
        return fn
    return wrap


def _ce(**kw) -> CheckResult:
    witness = {}
    for k, v in kw.items():
        if isinstance(v, int) and k.endswith("_set"):
            witness[k[:-4]] = _elems(v)
        else:
            witness[k] = v
    return COUNTEREXAMPLE, witness


# --- r-hyperideal basics (T01..T08) ----------------------------------------


@entry("T01",
       "For hyperideals: (1) I is r-closed iff every ideal product inside I "
       "whose left factor meets the regular elements forces the right factor "
       "into I; (2) r-ideals can be cancelled across an ideal factor or "
       "intersection that meets the regular elements; (3) if I o J is a "
       "proper r-ideal for some ideal J meeting the regular elements, then "
       "I = I o J and I is r-closed.",
       axes=("regular", "product"))
def _t01(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    reg = ctx.reg(rd)
    all_ideals = ctx.ideals()
    # part 1: the equivalence, for every proper ideal
    for i_mask in ctx.proper():
        lhs = ctx.r_ok(i_mask)
        rhs = True
        wit = None
        for a_mask in all_ideals:
            if not a_mask & reg:
                continue
            for b_mask in all_ideals:
                if is_subset(set_product(ctx.ring, a_mask, b_mask), i_mask) \
                        and not is_subset(b_mask, i_mask):
                    rhs = False
                    wit = (a_mask, b_mask)
                    break
            if not rhs:
                break
        if lhs != rhs:
            return _ce(part=1, ideal_set=i_mask, holds_r=lhs,
                       factor_pair=[_elems(wit[0]), _elems(wit[1])] if wit else None)
    # part 2: cancellation
    r_class = ctx.r_class()
    for i_mask in all_ideals:
        if not i_mask & reg:
            continue
        for a_mask in r_class:
            for b_mask in r_class:
                if a_mask == b_mask:
                    continue
                if ctx.prod(rd, i_mask, a_mask) == ctx.prod(rd, i_mask, b_mask):
                    return _ce(part=2, kind="product", ideal_set=i_mask,
                               left_set=a_mask, right_set=b_mask)
                if (i_mask & a_mask) == (i_mask & b_mask):
                    return _ce(part=2, kind="intersection", ideal_set=i_mask,
                               left_set=a_mask, right_set=b_mask)
    # part 3
    for i_mask in all_ideals:
        for j_mask in all_ideals:
            if not j_mask & reg:
                continue
            pj = ctx.prod(rd, i_mask, j_mask)
            if pj == 0 or not is_hyperideal(ctx.ring, pj):
                continue
            if pj == ctx.ring.carrier_mask or not ctx.r_ok(pj):
                continue
            if i_mask != pj or not ctx.r_ok(i_mask):
                return _ce(part=3, ideal_set=i_mask, factor_set=j_mask,
                           product_set=pj)
    return HOLDS, None


@entry("T02",
       "For a proper hyperideal I the following agree: I is r-closed; the "
       "principal ideal of any regular element meets I exactly in the "
       "element's product with I; I equals the colon of I by any regular "
       "element outside I.",
       axes=("regular",))
def _t02(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    reg = ctx.reg(rd)
    for i_mask in ctx.proper():
        s1 = ctx.r_ok(i_mask)
        s2 = True
        for a in bits(reg):
            gen_a = generated_ideal_mask(ctx.ring, singleton(a))
            if gen_a & i_mask != hprod(ctx.ring, singleton(a), i_mask):
                s2 = False
                break
        s3 = True
        for a in bits(reg & ~i_mask):
            if ctx.colon(i_mask, singleton(a)) != i_mask:
                s3 = False
                break
        if not (s1 == s2 == s3):
            return _ce(ideal_set=i_mask, statements=[s1, s2, s3])
    return HOLDS, None


@entry("T03",
       "The intersection of any nonempty family of r-ideals is an r-ideal.")
def _t03(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    r_class = ctx.r_class()
    for a_mask, b_mask in combinations(r_class, 2):
        if not ctx.r_ok(a_mask & b_mask):
            return _ce(left_set=a_mask, right_set=b_mask,
                       intersection_set=a_mask & b_mask)
    if r_class:
        total = ctx.ring.carrier_mask
        for m in r_class:
            total &= m
        if not ctx.r_ok(total):
            return _ce(family="all", intersection_set=total)
    return HOLDS, None


@entry("T04",
       "Every proper r-ideal consists of zero divisors.")
def _t04(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    z = ctx.zmask()
    for i_mask in ctx.r_class():
        if not is_subset(i_mask, z):
            x = next(iter(bits(i_mask & ~z)))
            return _ce(ideal_set=i_mask, non_zero_divisor=x)
    return HOLDS, None


@entry("T05",
       "The annihilator of any nonzero element is an r-hyperideal.")
def _t05(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for x in range(1, ctx.size):
        a = ctx.ann(x)
        if a == 0 or not is_hyperideal(ctx.ring, a) or not ctx.r_ok(a):
            return _ce(element=x, annihilator_set=a)
    return HOLDS, None


@entry("T06",
       "Equivalent: the ring is an integral hyperdomain; the zero ideal is "
       "the only proper r-ideal; the annihilator of any product is the "
       "union of the factor annihilators.")
def _t06(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    s1 = classify_ring(ctx.ring).integral_hyperdomain
    s2 = ctx.r_class() == (ctx.genzero(),)
    s3 = True
    wit = None
    for x in range(ctx.size):
        for y in range(ctx.size):
            lhs = ann_of_set(ctx.ring, ctx.ring.hmul[x][y])
            if lhs != ctx.ann(x) | ctx.ann(y):
                s3 = False
                wit = (x, y)
                break
        if not s3:
            break
    if not (s1 == s2 == s3):
        return _ce(statements=[s1, s2, s3], witness_pair=wit)
    return HOLDS, None


@entry("T07",
       "If two elements sum to the identity, the sum of their annihilators "
       "is r-closed.")
def _t07(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    e = ctx.e
    for x in range(ctx.size):
        for y in range(ctx.size):
            if ctx.ring.add[x][y] != e:
                continue
            s = set_sum(ctx.ring, ctx.ann(x), ctx.ann(y))
            if not is_hyperideal(ctx.ring, s) or not ctx.r_ok(s):
                return _ce(x=x, y=y, sum_set=s)
    return HOLDS, None


def _idempotents(ctx: RingContext, rd: Reading) -> list[int]:
    out = []
    for s in range(ctx.size):
        sq = ctx.ring.hmul[s][s]
        if rd.idempotent == "weak":
            if sq & singleton(s):
                out.append(s)
        elif sq == singleton(s):
            out.append(s)
    return out


@entry("T08a",
       "In a reduced hyperring, a minimal nonzero hyperideal plus the "
       "annihilator of an idempotent element is r-closed.",
       axes=("idempotent",),
       notes="Minimality admits two readings; this variant takes "
             "minimal-nonzero, its sibling T08b minimal-prime.")
def _t08a(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    if not classify_ring(ctx.ring).reduced:
        return NOT_APPLICABLE, {"reason": "ring is not reduced"}
    minimals = [m for m in ctx.proper()
                if is_minimal_nonzero(ctx.ring, m, ctx.enumeration_cap)]
    for p_mask in minimals:
        for s in _idempotents(ctx, rd):
            total = set_sum(ctx.ring, p_mask, ctx.ann(s))
            if not is_hyperideal(ctx.ring, total) or not ctx.r_ok(total):
                return _ce(minimal_set=p_mask, idempotent=s, sum_set=total)
    return HOLDS, None


@entry("T08b",
       "In a reduced hyperring, a minimal prime hyperideal plus the "
       "annihilator of an idempotent element is r-closed.",
       axes=("idempotent", "prime_mode"),
       notes="Variant of T08a reading minimal as minimal-prime.")
def _t08b(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    if not classify_ring(ctx.ring).reduced:
        return NOT_APPLICABLE, {"reason": "ring is not reduced"}
    for p_mask in ctx.minimal_primes(rd):
        for s in _idempotents(ctx, rd):
            total = set_sum(ctx.ring, p_mask, ctx.ann(s))
            if not is_hyperideal(ctx.ring, total) or not ctx.r_ok(total):
                return _ce(minimal_prime_set=p_mask, idempotent=s,
                           sum_set=total)
    return HOLDS, None


# --- r-hyperideals vs primes (T09..T17) -------------------------------------


@entry("T09",
       "Every maximal r-ideal is a prime hyperideal.",
       axes=("prime_mode",))
def _t09(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for m in ctx.maximal_of(ctx.r_class()):
        if not is_prime(ctx.ring, m, rd.prime_mode):
            return _ce(ideal_set=m)
    return HOLDS, None


@entry("T10",
       "A prime hyperideal is an r-ideal exactly when it consists entirely "
       "of zero divisors.",
       axes=("prime_mode",))
def _t10(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    z = ctx.zmask()
    for p in ctx.primes(rd):
        if ctx.r_ok(p) != is_subset(p, z):
            return _ce(prime_set=p, is_r=ctx.r_ok(p),
                       all_zero_divisors=is_subset(p, z))
    return HOLDS, None


@entry("T11",
       "If the intersection of incomparable primes is an r-ideal, each of "
       "them is an r-ideal.",
       axes=("prime_mode",))
def _t11(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    primes = ctx.primes(rd)
    for k in (2, 3):
        for combo in combinations(primes, k):
            if any(is_subset(a, b) for a in combo for b in combo if a != b):
                continue
            total = ctx.ring.carrier_mask
            for p in combo:
                total &= p
            if ctx.r_ok(total) and not all(ctx.r_ok(p) for p in combo):
                bad = next(p for p in combo if not ctx.r_ok(p))
                return _ce(primes=[_elems(p) for p in combo],
                           intersection_set=total, failing_set=bad)
    return HOLDS, None


@entry("T12",
       "In a reduced hyperring, a non-essential r-ideal lies inside some "
       "minimal prime that is itself a maximal r-ideal.",
       axes=("prime_mode",),
       notes="The usual derivation of this statement mishandles the "
             "essentiality premise at one step; the statement itself is "
             "checked as written.")
def _t12(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    if not classify_ring(ctx.ring).reduced:
        return NOT_APPLICABLE, {"reason": "ring is not reduced"}
    max_r = ctx.maximal_of(ctx.r_class())
    for i_mask in ctx.r_class():
        if is_essential(ctx.ring, i_mask, ctx.enumeration_cap):
            continue
        ok = any(is_subset(i_mask, p) and p in max_r
                 for p in ctx.minimal_primes(rd))
        if not ok:
            return _ce(ideal_set=i_mask,
                       minimal_primes=[_elems(p) for p in ctx.minimal_primes(rd)])
    return HOLDS, None


def _irredundant_covers(ctx: RingContext, i_mask: int,
                        family: tuple[int, ...]):
    """Yield tuples of 2..COVER_MAX distinct ideals covering i_mask with no
    member removable."""
    for k in range(2, COVER_MAX + 1):
        for combo in combinations(family, k):
            union = 0
            for m in combo:
                union |= m
            if not is_subset(i_mask, union):
                continue
            redundant = False
            for skip in range(k):
                rest = 0
                for t, m in enumerate(combo):
                    if t != skip:
                        rest |= m
                if is_subset(i_mask, rest):
                    redundant = True
                    break
            if not redundant:
                yield combo


@entry("T13",
       "If an ideal lies irredundantly in a union of ideals of which one is "
       "an r-ideal and the others contain regular elements, it lies in the "
       "r-ideal.",
       axes=("regular",))
def _t13(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    reg = ctx.reg(rd)
    all_ideals = ctx.ideals()
    for i_mask in all_ideals:
        for combo in _irredundant_covers(ctx, i_mask, all_ideals):
            for t, target in enumerate(combo):
                if target == ctx.ring.carrier_mask or not ctx.r_ok(target):
                    continue
                if any(not (m & reg) for u, m in enumerate(combo) if u != t):
                    continue
                if not is_subset(i_mask, target):
                    return _ce(ideal_set=i_mask,
                               cover=[_elems(m) for m in combo],
                               r_member_set=target)
    return HOLDS, None


@entry("T14",
       "Prime avoidance: if an ideal lies irredundantly in a union of "
       "ideals of which one is a minimal prime and the others contain "
       "regular elements, it lies in the minimal prime.",
       axes=("regular", "prime_mode"))
def _t14(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    reg = ctx.reg(rd)
    minimal = set(ctx.minimal_primes(rd))
    all_ideals = ctx.ideals()
    for i_mask in all_ideals:
        for combo in _irredundant_covers(ctx, i_mask, all_ideals):
            for t, target in enumerate(combo):
                if target not in minimal:
                    continue
                if any(not (m & reg) for u, m in enumerate(combo) if u != t):
                    continue
                if not is_subset(i_mask, target):
                    return _ce(ideal_set=i_mask,
                               cover=[_elems(m) for m in combo],
                               prime_set=target)
    return HOLDS, None


@entry("T15",
       "Extending an r-closed subset by a multiplicatively closed subset of "
       "regular elements (and their pairwise products) is again r-closed.",
       axes=("regular", "closed_subset", "mult_subset"),
       notes="Under the literal reading the extending subset merely contains "
             "a regular element, which admits zero products into the union "
             "and falsifies the statement; the default reading takes it to "
             "consist of regular elements.")
def _t15(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    lenient = rd.closed_subset == "lenient"
    reg = ctx.reg(rd)
    for s_mask in ctx.rmc_family(rd):
        for t_mask in ctx.mult_closed_family():
            if not t_mask & reg:
                continue
            if t_mask & ZERO_MASK:
                # the conclusion is a subset avoiding zero, so the
                # multiplicative extension is implicitly zero-free
                continue
            if rd.mult_subset == "regular" and not is_subset(t_mask, reg):
                continue
            d = s_mask | t_mask | hprod(ctx.ring, s_mask, t_mask)
            if not is_r_mult_closed(ctx.ring, d, rd.regular, lenient):
                return _ce(closed_set=s_mask, mult_set=t_mask, union_set=d)
    return HOLDS, None


@entry("T16",
       "A proper hyperideal is an r-ideal exactly when its complement is an "
       "r-closed subset.",
       axes=("regular", "closed_subset"))
def _t16(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    lenient = rd.closed_subset == "lenient"
    for i_mask in ctx.proper():
        comp = ctx.ring.carrier_mask & ~i_mask
        left = ctx.r_ok(i_mask)
        right = is_r_mult_closed(ctx.ring, comp, rd.regular, lenient)
        if left != right:
            return _ce(ideal_set=i_mask, is_r=left, complement_closed=right)
    return HOLDS, None


@entry("T17",
       "Every ideal maximal among those containing a given seed and "
       "disjoint from an r-closed subset is an r-ideal.",
       axes=("regular", "closed_subset"))
def _t17(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for s_mask in ctx.rmc_family(rd):
        for seed in ctx.ideals():
            if seed & s_mask:
                continue
            for m in maximal_disjoint_masks(ctx.ring, s_mask, seed,
                                            ctx.enumeration_cap):
                if not ctx.r_ok(m):
                    return _ce(closed_set=s_mask, seed_set=seed, maximal_set=m)
    return HOLDS, None


# --- n-hyperideals (T18..T34) ------------------------------------------------


@entry("T18", "Every n-ideal is an r-ideal.")
def _t18(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for m in ctx.n_class():
        if not ctx.r_ok(m):
            return _ce(ideal_set=m, r_witness=r_witness(ctx.ring, m))
    return HOLDS, None


@entry("T19",
       "If the zero ideal is primary, the n-ideals and the r-ideals "
       "coincide.")
def _t19(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    if not is_primary(ctx.ring, ctx.genzero(), MODE_RELAXED):
        return HOLDS, {"note": "zero ideal not primary; nothing to check"}
    if ctx.n_class() != ctx.r_class():
        return _ce(n_class=[_elems(m) for m in ctx.n_class()],
                   r_class=[_elems(m) for m in ctx.r_class()])
    return HOLDS, None


@entry("T20", "Every n-ideal lies inside the radical of zero.")
def _t20(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    for m in ctx.n_class():
        if not is_subset(m, rad):
            return _ce(ideal_set=m, radical_set=rad)
    return HOLDS, None


@entry("T21",
       "The intersection of any nonempty family of n-ideals is an n-ideal.")
def _t21(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    n_class = ctx.n_class()
    for a_mask, b_mask in combinations(n_class, 2):
        if not ctx.is_n(a_mask & b_mask):
            return _ce(left_set=a_mask, right_set=b_mask,
                       intersection_set=a_mask & b_mask)
    if n_class:
        total = ctx.ring.carrier_mask
        for m in n_class:
            total &= m
        if not ctx.is_n(total):
            return _ce(family="all", intersection_set=total)
    return HOLDS, None


@entry("T22",
       "For a proper hyperideal I the following agree: I is an n-ideal; I "
       "equals its colon by any element outside the radical of zero; any "
       "ideal product inside I whose left factor leaves the radical of zero "
       "forces the right factor into I.")
def _t22(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    outside = ctx.ring.carrier_mask & ~rad
    all_ideals = ctx.ideals()
    for i_mask in ctx.proper():
        s1 = ctx.is_n(i_mask)
        s2 = all(ctx.colon(i_mask, singleton(a)) == i_mask
                 for a in bits(outside))
        s3 = True
        for a_mask in all_ideals:
            if not a_mask & outside:
                continue
            for b_mask in all_ideals:
                if is_subset(set_product(ctx.ring, a_mask, b_mask), i_mask) \
                        and not is_subset(b_mask, i_mask):
                    s3 = False
                    break
            if not s3:
                break
        if not (s1 == s2 == s3):
            return _ce(ideal_set=i_mask, statements=[s1, s2, s3])
    return HOLDS, None


@entry("T23",
       "n-ideals can be cancelled across an ideal factor that leaves the "
       "radical of zero.",
       axes=("product",))
def _t23(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    outside = ctx.ring.carrier_mask & ~ctx.rad0()
    n_class = ctx.n_class()
    for l_mask in ctx.ideals():
        if not l_mask & outside:
            continue
        for a_mask in n_class:
            for b_mask in n_class:
                if a_mask == b_mask:
                    continue
                if ctx.prod(rd, a_mask, l_mask) == ctx.prod(rd, b_mask, l_mask):
                    return _ce(factor_set=l_mask, left_set=a_mask,
                               right_set=b_mask)
    return HOLDS, None


@entry("T24",
       "A prime hyperideal is an n-ideal exactly when it equals the radical "
       "of zero.",
       axes=("prime_mode",))
def _t24(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    for p in ctx.primes(rd):
        if ctx.is_n(p) != (p == rad):
            return _ce(prime_set=p, is_n=ctx.is_n(p), radical_set=rad)
    return HOLDS, None


@entry("T25",
       "The radical of zero is prime exactly when it is an n-ideal.",
       axes=("prime_mode",))
def _t25(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    left = rad != ctx.ring.carrier_mask and is_prime(ctx.ring, rad, rd.prime_mode)
    right = rad != ctx.ring.carrier_mask and ctx.is_n(rad)
    if left != right:
        return _ce(radical_set=rad, prime=left, n_ideal=right)
    return HOLDS, None


@entry("T26",
       "The colon of an n-ideal by any nonempty subset not inside it is an "
       "n-ideal.")
def _t26(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for i_mask in ctx.n_class():
        for t_mask in ctx.colon_subjects():
            if is_subset(t_mask, i_mask):
                continue
            c = ctx.colon(i_mask, t_mask)
            if c == 0 or not is_hyperideal(ctx.ring, c) or not ctx.is_n(c):
                return _ce(ideal_set=i_mask, subject_set=t_mask, colon_set=c)
    return HOLDS, None


@entry("T27", "Every maximal n-ideal equals the radical of zero.")
def _t27(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    for m in ctx.maximal_of(ctx.n_class()):
        if m != rad:
            return _ce(ideal_set=m, radical_set=rad)
    return HOLDS, None


@entry("T28",
       "The radical of zero is prime exactly when some n-ideal exists.",
       axes=("prime_mode",))
def _t28(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    left = rad != ctx.ring.carrier_mask and is_prime(ctx.ring, rad, rd.prime_mode)
    right = bool(ctx.n_class())
    if left != right:
        return _ce(radical_set=rad, prime=left, n_ideals_exist=right)
    return HOLDS, None


@entry("T29",
       "A proper hyperideal is an n-ideal exactly when its complement is an "
       "n-closed subset.")
def _t29(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for i_mask in ctx.proper():
        comp = ctx.ring.carrier_mask & ~i_mask
        left = ctx.is_n(i_mask)
        right = comp != 0 and is_n_mult_closed(ctx.ring, comp,
                                               ctx.enumeration_cap)
        if left != right:
            return _ce(ideal_set=i_mask, is_n=left, complement_closed=right)
    return HOLDS, None


@entry("T30",
       "Every ideal maximal among those containing a given seed and "
       "disjoint from an n-closed subset is an n-ideal.")
def _t30(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    for s_mask in ctx.nmc_family():
        for seed in ctx.ideals():
            if seed & s_mask:
                continue
            for m in maximal_disjoint_masks(ctx.ring, s_mask, seed,
                                            ctx.enumeration_cap):
                if not ctx.is_n(m):
                    return _ce(closed_set=s_mask, seed_set=seed, maximal_set=m)
    return HOLDS, None


@entry("T31",
       "If an ideal lies in a union of ideals of which one is an n-ideal "
       "and the others have no nonzero nilpotent members, and the n-member "
       "cannot be dropped, the ideal lies in the n-member.")
def _t31(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    all_ideals = ctx.ideals()
    nil_free = [m for m in all_ideals
                if not any(x != 0 and is_nilpotent(ctx.ring, x)
                           for x in bits(m))]
    for i_mask in all_ideals:
        for k in (2, COVER_MAX):
            for combo in combinations(all_ideals, k):
                union = 0
                for m in combo:
                    union |= m
                if not is_subset(i_mask, union):
                    continue
                for t, target in enumerate(combo):
                    if not ctx.is_n(target):
                        continue
                    if any(m not in nil_free
                           for u, m in enumerate(combo) if u != t):
                        continue
                    rest = 0
                    for u, m in enumerate(combo):
                        if u != t:
                            rest |= m
                    if is_subset(i_mask, rest):
                        continue
                    if not is_subset(i_mask, target):
                        return _ce(ideal_set=i_mask,
                                   cover=[_elems(m) for m in combo],
                                   n_member_set=target)
    return HOLDS, None


@entry("T32",
       "A reduced hyperring that is not an integral hyperdomain has no "
       "n-ideal; in a reduced hyperring the zero ideal is an n-ideal "
       "exactly when the ring is an integral hyperdomain.")
def _t32(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    flags = classify_ring(ctx.ring)
    if not flags.reduced:
        return NOT_APPLICABLE, {"reason": "ring is not reduced"}
    if not flags.integral_hyperdomain and ctx.n_class():
        return _ce(part=1, n_class=[_elems(m) for m in ctx.n_class()])
    zero_is_n = ctx.genzero() in ctx.n_class()
    if zero_is_n != flags.integral_hyperdomain:
        return _ce(part=2, zero_is_n=zero_is_n,
                   integral=flags.integral_hyperdomain)
    return HOLDS, None


@entry("T33",
       "The zero ideal is the only n-ideal exactly when the ring is an "
       "integral hyperdomain.")
def _t33(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    only_zero = ctx.n_class() == (ctx.genzero(),)
    integral = classify_ring(ctx.ring).integral_hyperdomain
    if only_zero != integral:
        return _ce(n_class=[_elems(m) for m in ctx.n_class()],
                   integral=integral)
    return HOLDS, None


@entry("T34",
       "All nonzero elements are invertible exactly when the ring is "
       "von Neumann regular and the zero ideal is an n-ideal.")
def _t34(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    flags = classify_ring(ctx.ring)
    left = bool(flags.invertible_ring)
    right = flags.regular_ring and ctx.genzero() in ctx.n_class()
    if left != right:
        return _ce(invertible=left, regular=flags.regular_ring,
                   zero_is_n=ctx.genzero() in ctx.n_class())
    return HOLDS, None


# --- stability under constructions (T35..T40) --------------------------------


@entry("T35",
       "Along good homomorphisms between corpus members: preimages of "
       "n-ideals under monomorphisms are n-ideals, and images of n-ideals "
       "containing the kernel under epimorphisms are n-ideals.")
def _t35(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    src = ctx
    for dst in suite.contexts:
        if src.size * dst.size > HOM_SIZE_CAP:
            continue
        if dst.ring.identity is None or not dst.ring.commutative:
            continue
        if rd.standing == "required" and not dst.standing_ok():
            continue
        for hom in suite.homs(src, dst):
            if hom.injective:
                for i2 in dst.n_class():
                    pre = hom.preimage_mask(i2)
                    if pre == 0 or not is_hyperideal(src.ring, pre) \
                            or not src.is_n(pre):
                        return _ce(part=1, target=dst.ring.name,
                                   mapping=list(hom.mapping),
                                   target_ideal=_elems(i2), preimage=_elems(pre))
            if hom.surjective:
                ker = hom.kernel
                for i1 in src.n_class():
                    if not is_subset(ker, i1):
                        continue
                    img = hom.image_mask(i1)
                    if not is_hyperideal(dst.ring, img) or not dst.is_n(img):
                        return _ce(part=2, target=dst.ring.name,
                                   mapping=list(hom.mapping),
                                   source_ideal=_elems(i1), image=_elems(img))
    return HOLDS, None


@entry("T36",
       "Across quotients by a proper subideal: n-ideals descend to the "
       "quotient; they lift back when the subideal lies in the radical of "
       "zero; and they lift back when the subideal is itself an n-ideal.")
def _t36(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    rad = ctx.rad0()
    for j_mask in ctx.proper():
        try:
            q = ctx.quotient_image(j_mask)
        except IllFormedQuotient as exc:
            return _ce(part="construction", ideal_set=j_mask, detail=str(exc))
        qctx = RingContext(q.ring, ctx.enumeration_cap, ctx.gamma_cap,
                           ctx.matrix_cap)
        for i_mask in ctx.proper():
            if not is_subset(j_mask, i_mask):
                continue
            img = q.image_mask(i_mask)
            img_is_n = img != q.ring.carrier_mask \
                and is_hyperideal(q.ring, img) and qctx.is_n(img)
            if ctx.is_n(i_mask) and not img_is_n:
                return _ce(part=1, ideal_set=i_mask, by_set=j_mask,
                           image=_elems(img))
            if img_is_n and is_subset(j_mask, rad) and not ctx.is_n(i_mask):
                return _ce(part=2, ideal_set=i_mask, by_set=j_mask)
            if img_is_n and ctx.is_n(j_mask) and not ctx.is_n(i_mask):
                return _ce(part=3, ideal_set=i_mask, by_set=j_mask)
    return HOLDS, None


@entry("T37",
       "If the square-matrix ideal over a hyperideal is an n-ideal of the "
       "square-matrix structure, the hyperideal is an n-ideal of the base "
       "ring (base ring with scalar identity).",
       requires_scalar_identity=True, requires_matrix=True)
def _t37(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    try:
        m2, mctx = ctx.matrix2()
    except CapExceeded as exc:
        return NOT_APPLICABLE, {"reason": f"matrix cap: {exc}"}
    for i_mask in ctx.proper():
        mat = matrix_ideal_mask(ctx.ring, 2, i_mask)
        if not is_hyperideal(m2, mat):
            continue
        if mctx.is_n(mat) and not ctx.is_n(i_mask):
            return _ce(ideal_set=i_mask)
    return HOLDS, None


@entry("T38",
       "For a subring not inside an n-ideal, the trace of the n-ideal on "
       "the subring is an n-ideal of the subring.")
def _t38(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    if not ctx.n_class():
        return HOLDS, None
    for t_mask in subhyperring_masks(ctx.ring):
        sub = subhyperring_restrict(ctx.ring, t_mask)
        subctx = RingContext(sub.ring, ctx.enumeration_cap, ctx.gamma_cap,
                             ctx.matrix_cap)
        for i_mask in ctx.n_class():
            if is_subset(t_mask, i_mask):
                continue
            trace = sub.restrict_mask(i_mask)
            if trace == 0 or not is_hyperideal(sub.ring, trace) \
                    or not subctx.is_n(trace):
                return _ce(subring_set=t_mask, ideal_set=i_mask,
                           trace=_elems(trace))
    return HOLDS, None


@entry("T39",
       "In a direct product, a rectangular ideal (a product of component "
       "ideals) that is an n-ideal must be the whole ring.",
       requires_product=True)
def _t39(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    sizes = product_factor_sizes(ctx.ring)
    if sizes is None:
        return NOT_APPLICABLE, {"reason": "not a product construction"}
    n1, n2 = sizes
    for i_mask in ctx.proper():
        left = 0
        right = 0
        for idx in bits(i_mask):
            left |= singleton(idx // n2)
            right |= singleton(idx % n2)
        rect = 0
        for a in bits(left):
            for b in bits(right):
                rect |= singleton(a * n2 + b)
        if rect != i_mask:
            continue
        if ctx.is_n(i_mask):
            return _ce(ideal_set=i_mask, left=_elems(left), right=_elems(right))
    return HOLDS, None


@entry("T40",
       "Over a scalar-identity hyperring within the fundamental-quotient "
       "cap: a hyperideal is an n-ideal exactly when its class image is an "
       "n-ideal of the fundamental ordinary ring.",
       requires_scalar_identity=True, requires_gamma=True)
def _t40(ctx: RingContext, rd: Reading, suite: Suite) -> CheckResult:
    try:
        fund = ctx.fundamental()
    except CapExceeded as exc:
        return NOT_APPLICABLE, {"reason": f"gamma cap: {exc}"}
    except IllDefinedQuotient as exc:
        return _ce(part="construction", detail=str(exc))
    for i_mask in ctx.proper():
        image = fund.image_mask(i_mask)
        left = ctx.is_n(i_mask)
        right = classical_n_ideal(fund.ring, image)
        if left != right:
            return _ce(ideal_set=i_mask, image=_elems(image), is_n=left,
                       classical_n=right)
    return HOLDS, None


REGISTRY_BY_ID = {e.tid: e for e in REGISTRY}


# ---------------------------------------------------------------------------
# runner


@dataclass
class TheoremVerdict:
    theorem: str
    ring: str
    status: str
    witness: Optional[dict]
    readings: dict[str, str] = field(default_factory=dict)
    reading_results: dict[str, str] = field(default_factory=dict)
    reading_sensitive: bool = False
    reverified: bool = False
    wall_ms: Optional[float] = None

    def to_obj(self, include_timings: bool = False) -> dict:
        obj = {
            "theorem": self.theorem,
            "ring": self.ring,
            "status": self.status,
            "witness": self.witness,
            "readings": self.readings,
            "reading_results": self.reading_results,
            "reading_sensitive": self.reading_sensitive,
            "reverified": self.reverified,
        }
        if include_timings:
            obj["wall_ms"] = self.wall_ms
        return obj


def _applicability(entry_: TheoremEntry, ctx: RingContext,
                   rd: Reading) -> Optional[str]:
    if ctx.ring.identity is None:
        return "no identity"
    if not ctx.ring.commutative:
        return "noncommutative carrier"
    if rd.standing == "required" and not ctx.standing_ok():
        return "standing assumption violated: some hyperideal is not a C-hyperideal"
    if entry_.requires_scalar_identity and not ctx.ring.scalar_identity:
        return "no scalar identity"
    if entry_.requires_gamma and ctx.size > ctx.gamma_cap:
        return f"gamma cap: carrier size {ctx.size} exceeds {ctx.gamma_cap}"
    return None


def _evaluate(entry_: TheoremEntry, ctx: RingContext, rd: Reading,
              suite: Suite) -> CheckResult:
    try:
        reason = _applicability(entry_, ctx, rd)
        if reason is not None:
            return NOT_APPLICABLE, {"reason": reason}
        return entry_.checker(ctx, rd, suite)
    except CapExceeded as exc:
        return NOT_APPLICABLE, {"reason": f"enumeration cap: {exc}"}


def _reading_combos(entry_: TheoremEntry, base: Reading) -> list[Reading]:
    axes = tuple(entry_.axes) + ("standing",)
    combos: list[Reading] = [base]
    for axis in axes:
        extended = []
        for rd in combos:
            for value in READING_AXES[axis]:
                extended.append(rd.with_flags(**{axis: value}))
        combos = extended
    seen = []
    for rd in combos:
        if rd not in seen:
            seen.append(rd)
    return seen


def run_theorem(entry_: TheoremEntry, ring: HyperRing,
                reading: Optional[Reading] = None,
                suite: Optional[Suite] = None,
                context: Optional[RingContext] = None,
                explore_readings: bool = True) -> TheoremVerdict:
    rd = reading or Reading()
    ctx = context or RingContext(ring)
    sweep = suite or Suite([ctx])
    start = time.perf_counter()
    status, witness = _evaluate(entry_, ctx, rd, sweep)
    reverified = False
    if status == COUNTEREXAMPLE:
        # deterministic re-run of the full predicate scan; the least witness
        # must reproduce exactly before it is reported
        again_status, again_witness = _evaluate(entry_, ctx, rd, sweep)
        reverified = again_status == status and again_witness == witness
    reading_results: dict[str, str] = {}
    sensitive = False
    if explore_readings:
        axes = tuple(entry_.axes) + ("standing",)
        for combo in _reading_combos(entry_, rd):
            if combo == rd:
                continue
            alt_status, _ = _evaluate(entry_, ctx, combo, sweep)
            reading_results[combo.label(axes)] = alt_status
            # sensitive: some non-default reading flips between a decided
            # verdict and a counterexample
            if alt_status == COUNTEREXAMPLE and status != COUNTEREXAMPLE:
                sensitive = True
            if status == COUNTEREXAMPLE and alt_status == HOLDS:
                sensitive = True
    elapsed = (time.perf_counter() - start) * 1000.0
    axes = tuple(entry_.axes) + ("standing",)
    return TheoremVerdict(
        theorem=entry_.tid,
        ring=ring.name,
        status=status,
        witness=witness,
        readings={a: getattr(rd, a) for a in sorted(axes)},
        reading_results=reading_results,
        reading_sensitive=sensitive,
        reverified=reverified,
        wall_ms=elapsed,
    )


@dataclass
class SuiteReport:
    readings: dict[str, str]
    rings: list[str]
    verdicts: list[TheoremVerdict]
    discarded: list[tuple[str, str]] = field(default_factory=list)

    @property
    def counterexamples(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.status == COUNTEREXAMPLE]

    @property
    def reading_sensitive(self) -> list[TheoremVerdict]:
        return [v for v in self.verdicts if v.reading_sensitive]

    def summary(self) -> dict[str, int]:
        out = {HOLDS: 0, COUNTEREXAMPLE: 0, NOT_APPLICABLE: 0,
               "reading-sensitive": len(self.reading_sensitive)}
        for v in self.verdicts:
            out[v.status] += 1
        return out

    def to_obj(self, include_timings: bool = False) -> dict:
        return {
            "readings": self.readings,
            "rings": self.rings,
            "summary": self.summary(),
            "verdicts": [v.to_obj(include_timings) for v in self.verdicts],
            "counterexamples": [v.to_obj(include_timings)
                                for v in self.counterexamples],
            "discarded": [list(d) for d in self.discarded],
        }

    def to_json_bytes(self, include_timings: bool = False) -> bytes:
        text = json.dumps(self.to_obj(include_timings), indent=2,
                          sort_keys=True, ensure_ascii=True)
        return (text + "\n").encode("utf-8")

    def exit_status(self) -> int:
        return 1 if self.counterexamples else 0


def run_suite(rings: list[HyperRing], only: Optional[set[str]] = None,
              reading: Optional[Reading] = None,
              enumeration_cap: int = 16,
              gamma_cap: int = DEFAULT_GAMMA_CAP,
              matrix_cap: int = 16,
              explore_readings: bool = True,
              fail_fast: bool = False) -> SuiteReport:
    rd = reading or Reading()
    contexts = [RingContext(r, enumeration_cap, gamma_cap, matrix_cap)
                for r in rings]
    sweep = Suite(contexts)
    entries = [e for e in REGISTRY if only is None or e.tid in only]
    verdicts: list[TheoremVerdict] = []
    for entry_ in entries:
        for ctx in contexts:
            verdict = run_theorem(entry_, ctx.ring, rd, sweep, ctx,
                                  explore_readings)
            verdicts.append(verdict)
            if fail_fast and verdict.status == COUNTEREXAMPLE:
                return SuiteReport(
                    readings={a: getattr(rd, a) for a in READING_AXES},
                    rings=[c.ring.name for c in contexts],
                    verdicts=verdicts,
                )
    return SuiteReport(
        readings={a: getattr(rd, a) for a in READING_AXES},
        rings=[c.ring.name for c in contexts],
        verdicts=verdicts,
    )
