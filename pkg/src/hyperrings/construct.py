"""Derived hyperrings: quotients, direct products, matrix structures,
subring restrictions, good homomorphisms, and the fundamental ordinary-ring
quotient by the transitive closure of the co-membership relation.

Every construction revalidates its output tables; nothing well-definedness
related is assumed.  The matrix construction is the single place allowed to
produce a non-commutative carrier (flagged on the result).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .bitsets import bits, elements_of, is_subset, mask_of, singleton
from .core import (
    AxiomViolation,
    CapExceeded,
    HyperRing,
    HyperRingError,
    hprod,
    set_sum,
    validate_hyperring,
)
from .ideals import (
    DEFAULT_ENUMERATION_CAP,
    is_hyperideal,
    product_family,
)

DEFAULT_GAMMA_CAP = 10


class IllFormedQuotient(HyperRingError):
    """Lifted coset hyperproduct depends on representative choice."""


class IllDefinedQuotient(HyperRingError):
    """The fundamental quotient's lifted operation is not single-valued."""


class NotAdditive(HyperRingError):
    """A candidate map fails to preserve addition; carries a witness pair."""

    def __init__(self, x: int, y: int):
        super().__init__(f"map does not preserve addition at ({x}, {y})")
        self.witness = (x, y)


class NotMultiplicative(HyperRingError):
    """A candidate map fails to preserve hyperproducts; carries a witness pair."""

    def __init__(self, x: int, y: int):
        super().__init__(f"map does not preserve hyperproducts at ({x}, {y})")
        self.witness = (x, y)


class NotClosed(HyperRingError):
    """A subset is not closed under the ring operations; carries a witness."""

    def __init__(self, detail: str, witness: tuple):
        super().__init__(f"subset not closed: {detail} at {witness}")
        self.witness = witness


# ---------------------------------------------------------------------------
# quotient by a hyperideal


@dataclass(frozen=True)
class QuotientImage:
    ring: HyperRing
    projection: tuple[int, ...]  # element of the source -> class index
    source_name: str
    ideal: int

    def image_mask(self, members: int) -> int:
        out = 0
        for x in bits(members):
            out |= singleton(self.projection[x])
        return out

    def preimage_mask(self, members: int) -> int:
        out = 0
        for x, cls in enumerate(self.projection):
            if members & singleton(cls):
                out |= singleton(x)
        return out


def quotient(ring: HyperRing, ideal: int, name: Optional[str] = None) -> QuotientImage:
    """Quotient by the additive cosets of a hyperideal.

    The lifted coset hyperproduct is recomputed from every representative
    pair and must agree; otherwise :class:`IllFormedQuotient` is raised with
    the witnessing representatives.
    """
    if not is_hyperideal(ring, ideal):
        raise ValueError("quotient requires a hyperideal")
    n = ring.size
    coset_of: list[Optional[int]] = [None] * n
    coset_masks: list[int] = []
    for x in range(n):
        if coset_of[x] is not None:
            continue
        cmask = set_sum(ring, singleton(x), ideal)
        idx = len(coset_masks)
        coset_masks.append(cmask)
        for y in bits(cmask):
            coset_of[y] = idx
    # canonical order: sort classes by least member (the zero coset is first)
    order = sorted(range(len(coset_masks)), key=lambda i: coset_masks[i] & -coset_masks[i])
    relabel = {old: new for new, old in enumerate(order)}
    coset_masks = [coset_masks[i] for i in order]
    proj = tuple(relabel[coset_of[x]] for x in range(n))
    k = len(coset_masks)

    add_q = [[0] * k for _ in range(k)]
    for i in range(k):
        ri = next(bits(coset_masks[i]))
        for j in range(k):
            rj = next(bits(coset_masks[j]))
            add_q[i][j] = proj[ring.add[ri][rj]]

    hmul_q = [[None] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            value: Optional[frozenset[int]] = None
            first_pair = None
            for x in bits(coset_masks[i]):
                for y in bits(coset_masks[j]):
                    classes = frozenset(proj[t] for t in bits(ring.hmul[x][y]))
                    if value is None:
                        value = classes
                        first_pair = (x, y)
                    elif classes != value:
                        raise IllFormedQuotient(
                            f"cosets ({i},{j}): representatives {first_pair} "
                            f"and {(x, y)} lift to different class sets")
            hmul_q[i][j] = sorted(value)

    qname = name or f"{ring.name}/{{{','.join(map(str, elements_of(ideal)))}}}"
    out = validate_hyperring(
        qname, add_q, hmul_q,
        require_commutative=ring.commutative,
        provenance={"construction": "quotient", "source": ring.name,
                    "params": ",".join(map(str, elements_of(ideal)))},
    )
    return QuotientImage(ring=out, projection=proj, source_name=ring.name, ideal=ideal)


# ---------------------------------------------------------------------------
# direct product


def product_pair_index(n2: int, a1: int, a2: int) -> int:
    return a1 * n2 + a2


def product_subset_mask(n2: int, mask1: int, mask2: int) -> int:
    out = 0
    for a1 in bits(mask1):
        base = a1 * n2
        for a2 in bits(mask2):
            out |= 1 << (base + a2)
    return out


def direct_product(r1: HyperRing, r2: HyperRing, name: Optional[str] = None) -> HyperRing:
    """Componentwise sum and hyperproduct on the pair carrier."""
    n1, n2 = r1.size, r2.size
    n = n1 * n2
    add = [[0] * n for _ in range(n)]
    hmul = [[None] * n for _ in range(n)]
    for a1 in range(n1):
        for a2 in range(n2):
            i = product_pair_index(n2, a1, a2)
            for b1 in range(n1):
                arow = r1.add[a1]
                hrow = r1.hmul[a1]
                for b2 in range(n2):
                    j = product_pair_index(n2, b1, b2)
                    add[i][j] = product_pair_index(n2, arow[b1], r2.add[a2][b2])
                    hmul[i][j] = elements_of(
                        product_subset_mask(n2, hrow[b1], r2.hmul[a2][b2]))
    pname = name or f"{r1.name}x{r2.name}"
    return validate_hyperring(
        pname, add, hmul,
        require_commutative=r1.commutative and r2.commutative,
        provenance={"construction": "product", "source": f"{r1.name},{r2.name}",
                    "params": f"{n1}x{n2}"},
    )


def product_factor_sizes(ring: HyperRing) -> Optional[tuple[int, int]]:
    """Recover factor sizes from product provenance, if present."""
    if not ring.provenance:
        return None
    prov = dict(ring.provenance)
    if prov.get("construction") != "product":
        return None
    n1, _, n2 = prov["params"].partition("x")
    return int(n1), int(n2)


# ---------------------------------------------------------------------------
# matrix structures


def matrix_hyperring(ring: HyperRing, n: int,
                     cap: int = DEFAULT_ENUMERATION_CAP,
                     name: Optional[str] = None) -> HyperRing:
    """The n-by-n matrix structure over the ring (n at most 2).

    Entry (i, k) of a product is the elementwise sum over j of the entry
    hyperproducts; a product of two matrices is the set of matrices whose
    entries are picked independently from those sums.  For n = 2 the result
    is generally non-commutative and is flagged as such.
    """
    if n < 1 or n > 2:
        raise ValueError("matrix dimension must be 1 or 2")
    if ring.identity is None or not ring.scalar_identity:
        raise ValueError("matrix construction requires a scalar identity")
    cells = n * n
    size = ring.size ** cells
    if size > cap:
        raise CapExceeded("matrix carrier size", size, cap)

    def decode(idx: int) -> tuple[int, ...]:
        out = []
        for _ in range(cells):
            out.append(idx % ring.size)
            idx //= ring.size
        return tuple(out)  # row-major: (e00, e01, e10, e11)

    def encode(entries: Sequence[int]) -> int:
        idx = 0
        for e in reversed(entries):
            idx = idx * ring.size + e
        return idx

    mats = [decode(i) for i in range(size)]
    add = [[0] * size for _ in range(size)]
    hmul = [[None] * size for _ in range(size)]
    for i, A in enumerate(mats):
        for j, B in enumerate(mats):
            add[i][j] = encode([ring.add[A[c]][B[c]] for c in range(cells)])
            entry_sets = []
            for r in range(n):
                for c in range(n):
                    acc = None
                    for t in range(n):
                        term = ring.hmul[A[r * n + t]][B[t * n + c]]
                        acc = term if acc is None else set_sum(ring, acc, term)
                    entry_sets.append(elements_of(acc))
            prod = set()
            for combo in itertools.product(*entry_sets):
                prod.add(encode(combo))
            hmul[i][j] = sorted(prod)
    mname = name or f"M{n}({ring.name})"
    return validate_hyperring(
        mname, add, hmul,
        require_commutative=False,
        provenance={"construction": "matrix", "source": ring.name,
                    "params": f"n={n}"},
    )


def matrix_ideal_mask(ring: HyperRing, n: int, members: int) -> int:
    """Mask of all matrices whose entries all lie in the given subset."""
    cells = n * n
    out = 0
    for combo in itertools.product(elements_of(members), repeat=cells):
        idx = 0
        for e in reversed(combo):
            idx = idx * ring.size + e
        out |= 1 << idx
    return out


# ---------------------------------------------------------------------------
# good homomorphisms


@dataclass(frozen=True)
class GoodHomomorphism:
    source: HyperRing
    target: HyperRing
    mapping: tuple[int, ...]

    @property
    def kernel(self) -> int:
        return mask_of(x for x, v in enumerate(self.mapping) if v == 0)

    @property
    def injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def image_mask(self, members: int) -> int:
        return mask_of(self.mapping[x] for x in bits(members))

    def preimage_mask(self, members: int) -> int:
        return mask_of(x for x, v in enumerate(self.mapping)
                       if members & singleton(v))


def check_good_homomorphism(mapping: Sequence[int], source: HyperRing,
                            target: HyperRing) -> GoodHomomorphism:
    """Validate that a total map preserves addition exactly and
    hyperproducts as set images."""
    if len(mapping) != source.size:
        raise ValueError("map must be total on the source carrier")
    for v in mapping:
        if not 0 <= v < target.size:
            raise ValueError(f"map value {v} outside the target carrier")
    for x in range(source.size):
        for y in range(source.size):
            if mapping[source.add[x][y]] != target.add[mapping[x]][mapping[y]]:
                raise NotAdditive(x, y)
    for x in range(source.size):
        for y in range(source.size):
            image = mask_of(mapping[t] for t in bits(source.hmul[x][y]))
            if image != target.hmul[mapping[x]][mapping[y]]:
                raise NotMultiplicative(x, y)
    return GoodHomomorphism(source=source, target=target, mapping=tuple(mapping))


def _additive_generators(ring: HyperRing) -> list[int]:
    """A small generating set of the additive group, found greedily."""
    gens: list[int] = []
    span = {0}
    while len(span) < ring.size:
        x = min(set(range(ring.size)) - span)
        gens.append(x)
        changed = True
        while changed:
            changed = False
            for a in list(span):
                for g in gens:
                    b = ring.add[a][g]
                    if b not in span:
                        span.add(b)
                        changed = True
    return gens


def enumerate_good_homomorphisms(source: HyperRing, target: HyperRing,
                                 candidate_cap: int = 65536) -> list[GoodHomomorphism]:
    """All good homomorphisms, found by assigning generator images.

    Additive maps are determined by the images of an additive generating
    set; each assignment is extended by additivity and then checked in
    full.  Deterministic output order (lexicographic in the map table).
    """
    gens = _additive_generators(source)
    total = target.size ** len(gens)
    if total > candidate_cap:
        raise CapExceeded("homomorphism candidates", total, candidate_cap)
    found: list[GoodHomomorphism] = []
    for images in itertools.product(range(target.size), repeat=len(gens)):
        mapping: list[Optional[int]] = [None] * source.size
        mapping[0] = 0
        for g, img in zip(gens, images):
            mapping[g] = img
        ok = True
        changed = True
        while changed and ok:
            changed = False
            for a in range(source.size):
                if mapping[a] is None:
                    continue
                for g, img in zip(gens, images):
                    b = source.add[a][g]
                    val = target.add[mapping[a]][img]
                    if mapping[b] is None:
                        mapping[b] = val
                        changed = True
                    elif mapping[b] != val:
                        ok = False
                        break
                if not ok:
                    break
        if not ok or any(v is None for v in mapping):
            continue
        try:
            found.append(check_good_homomorphism(mapping, source, target))
        except (NotAdditive, NotMultiplicative):
            continue
    found.sort(key=lambda h: h.mapping)
    return found


# ---------------------------------------------------------------------------
# subhyperrings


@dataclass(frozen=True)
class SubringImage:
    ring: HyperRing
    embedding: tuple[int, ...]  # subring element index -> source element

    def restrict_mask(self, members: int) -> int:
        out = 0
        for i, x in enumerate(self.embedding):
            if members & singleton(x):
                out |= singleton(i)
        return out


def subhyperring_restrict(ring: HyperRing, subset: int,
                          name: Optional[str] = None) -> SubringImage:
    """Restrict the tables to a subset closed under subtraction and the
    hyperoperation; the inclusion is then a good homomorphism."""
    if subset == 0:
        raise NotClosed("empty subset", ())
    for a in bits(subset):
        for b in bits(subset):
            d = ring.sub[a][b]
            if not subset & singleton(d):
                raise NotClosed("subtraction leaves the subset", (a, b))
            if not is_subset(ring.hmul[a][b], subset):
                raise NotClosed("hyperproduct leaves the subset", (a, b))
    elems = elements_of(subset)
    index = {x: i for i, x in enumerate(elems)}
    k = len(elems)
    add = [[index[ring.add[x][y]] for y in elems] for x in elems]
    hmul = [[sorted(index[t] for t in bits(ring.hmul[x][y])) for y in elems]
            for x in elems]
    sname = name or f"{ring.name}|{{{','.join(map(str, elems))}}}"
    out = validate_hyperring(
        sname, add, hmul,
        require_commutative=ring.commutative,
        provenance={"construction": "subring", "source": ring.name,
                    "params": ",".join(map(str, elems))},
    )
    return SubringImage(ring=out, embedding=tuple(elems))


def subhyperring_masks(ring: HyperRing) -> list[int]:
    """All subsets closed under subtraction and the hyperoperation."""
    def close(seed: int) -> int:
        m = seed
        while True:
            grown = m
            for a in bits(m):
                for b in bits(m):
                    grown |= singleton(ring.sub[a][b])
                    grown |= ring.hmul[a][b]
            if grown == m:
                return m
            m = grown

    found: set[int] = set()
    work = [close(singleton(a)) for a in range(ring.size)]
    while work:
        m = work.pop()
        if m in found:
            continue
        found.add(m)
        if m == ring.carrier_mask:
            continue
        for x in range(ring.size):
            if not m & singleton(x):
                work.append(close(m | singleton(x)))
    return sorted(found, key=lambda m: (m.bit_count(), m))


# ---------------------------------------------------------------------------
# fundamental ordinary-ring quotient


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def union(self, i: int, j: int) -> None:
        ri, rj = self.find(i), self.find(j)
        if ri != rj:
            # deterministic: smaller index wins as representative
            if ri > rj:
                ri, rj = rj, ri
            self.parent[rj] = ri


@dataclass(frozen=True)
class OrdinaryRing:
    """A finite commutative ring given by plain operation tables."""

    name: str
    size: int
    add: tuple[tuple[int, ...], ...]
    mul: tuple[tuple[int, ...], ...]

    def nilradical_mask(self) -> int:
        out = 0
        for x in range(self.size):
            seen = set()
            p = x
            while p not in seen:
                seen.add(p)
                p = self.mul[p][x]
            if 0 in seen:
                out |= singleton(x)
        return out

    def is_ideal(self, members: int) -> bool:
        if members == 0 or not members & 1:
            return False
        neg = [next(b for b in range(self.size) if self.add[a][b] == 0)
               for a in range(self.size)]
        for a in bits(members):
            for b in bits(members):
                if not members & singleton(self.add[a][neg[b]]):
                    return False
        for x in bits(members):
            for r in range(self.size):
                if not members & singleton(self.mul[r][x]):
                    return False
        return True


def verify_ordinary_ring(ring: OrdinaryRing) -> None:
    n = ring.size
    for a in range(n):
        if ring.add[a][0] != a:
            raise AxiomViolation("ring-add-identity", (a,))
        if not any(ring.add[a][b] == 0 for b in range(n)):
            raise AxiomViolation("ring-add-inverse", (a,))
    for a in range(n):
        for b in range(n):
            if ring.add[a][b] != ring.add[b][a]:
                raise AxiomViolation("ring-add-commutative", (a, b))
            if ring.mul[a][b] != ring.mul[b][a]:
                raise AxiomViolation("ring-mul-commutative", (a, b))
            for c in range(n):
                if ring.add[ring.add[a][b]][c] != ring.add[a][ring.add[b][c]]:
                    raise AxiomViolation("ring-add-associative", (a, b, c))
                if ring.mul[ring.mul[a][b]][c] != ring.mul[a][ring.mul[b][c]]:
                    raise AxiomViolation("ring-mul-associative", (a, b, c))
                if ring.mul[a][ring.add[b][c]] != \
                        ring.add[ring.mul[a][b]][ring.mul[a][c]]:
                    raise AxiomViolation("ring-distributive", (a, b, c))


def classical_n_ideal(ring: OrdinaryRing, members: int) -> bool:
    """Ordinary-ring test: a proper ideal where ``xy`` inside and x not
    nilpotent force y inside; the nilradical is computed by powers."""
    if not ring.is_ideal(members):
        return False
    if members == (1 << ring.size) - 1:
        return False
    nil = ring.nilradical_mask()
    for x in range(ring.size):
        if nil & singleton(x):
            continue
        for y in range(ring.size):
            if members & singleton(y):
                continue
            if members & singleton(ring.mul[x][y]):
                return False
    return True


@dataclass(frozen=True)
class FundamentalRingImage:
    source_name: str
    classes: tuple[int, ...]  # class index -> mask of source elements
    projection: tuple[int, ...]  # source element -> class index
    ring: OrdinaryRing

    def image_mask(self, members: int) -> int:
        out = 0
        for x in bits(members):
            out |= singleton(self.projection[x])
        return out


def _sum_closure(ring: HyperRing) -> list[int]:
    """All finite sums of finite products of elements, as subset masks."""
    prods = product_family(ring)
    seen: set[int] = set(prods)
    work = list(prods)
    while work:
        u = work.pop()
        for p in prods:
            s = set_sum(ring, u, p)
            if s not in seen:
                seen.add(s)
                work.append(s)
    return sorted(seen)


def fundamental_ring(ring: HyperRing,
                     gamma_cap: int = DEFAULT_GAMMA_CAP) -> FundamentalRingImage:
    """Quotient by the smallest equivalence relating co-members of any
    finite sum of finite products; the result is an ordinary ring.

    Elements sharing such a set are related; the transitive closure is
    taken with union-find.  Both lifted operations are verified to be
    single-valued on classes, and the resulting tables are checked against
    all ordinary commutative-ring axioms.
    """
    if ring.size > gamma_cap:
        raise CapExceeded("carrier size", ring.size, gamma_cap)
    uf = UnionFind(ring.size)
    for u in _sum_closure(ring):
        members = elements_of(u)
        for other in members[1:]:
            uf.union(members[0], other)
    roots = sorted(set(uf.find(x) for x in range(ring.size)))
    index = {r: i for i, r in enumerate(roots)}
    proj = tuple(index[uf.find(x)] for x in range(ring.size))
    k = len(roots)
    class_masks = [0] * k
    for x in range(ring.size):
        class_masks[proj[x]] |= singleton(x)

    add_t = [[0] * k for _ in range(k)]
    mul_t = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            sums = set_sum(ring, class_masks[i], class_masks[j])
            targets = {proj[t] for t in bits(sums)}
            if len(targets) != 1:
                raise IllDefinedQuotient(
                    f"classes ({i},{j}): sum lands in classes {sorted(targets)}")
            add_t[i][j] = targets.pop()
            prods = hprod(ring, class_masks[i], class_masks[j])
            targets = {proj[t] for t in bits(prods)}
            if len(targets) != 1:
                raise IllDefinedQuotient(
                    f"classes ({i},{j}): product lands in classes {sorted(targets)}")
            mul_t[i][j] = targets.pop()

    out = OrdinaryRing(
        name=f"{ring.name}/fundamental",
        size=k,
        add=tuple(tuple(row) for row in add_t),
        mul=tuple(tuple(row) for row in mul_t),
    )
    verify_ordinary_ring(out)
    return FundamentalRingImage(
        source_name=ring.name,
        classes=tuple(class_masks),
        projection=proj,
        ring=out,
    )
