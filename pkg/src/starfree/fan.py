"""Sign vectors, chains, and antipodal labelings on the barycentric
subdivision of the cross polytope.

A nonzero vector w in {-1,0,+1}^n encodes the disjoint pair
(P(w), N(w)) of positive and negative positions.  Under the order
"u <= v iff u agrees with v on its support", chains of nonzero vectors
are exactly the simplices of the first barycentric subdivision of the
boundary of the cross polytope, a symmetric triangulation of the
(n-1)-sphere; maximal chains have n vertices with supports of sizes
1..n and correspond to (sign pattern, permutation) pairs.

For an antipodal labeling into +-{1..m} with no comparable pair summing
to zero, the Tucker-Ky Fan lemma makes the number of maximal chains
whose labels alternate in sign starting positive (ordered by increasing
absolute value) odd; with labels bounded by n-1 no such labeling exists
at all, and Tucker's lemma promises a comparable pair with labels
summing to zero.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Optional

from .coloring import Coloring
from .errors import InputError, InternalConsistencyError, ResourceLimitError
from .graphs import KneserGraph
from .subsets import subset_order_less

DEFAULT_CHAIN_LIMIT = 8

SignVector = tuple  # entries in {-1, 0, +1}; type alias for documentation


def pos_set(w: SignVector) -> frozenset[int]:
    """P(w): 1-based positions carrying +1."""
    return frozenset(i + 1 for i, x in enumerate(w) if x == 1)


def neg_set(w: SignVector) -> frozenset[int]:
    """N(w): 1-based positions carrying -1."""
    return frozenset(i + 1 for i, x in enumerate(w) if x == -1)


def support_size(w: SignVector) -> int:
    return sum(1 for x in w if x)


def negate(w: SignVector) -> SignVector:
    return tuple(-x for x in w)


def vector_leq(u: SignVector, v: SignVector) -> bool:
    """u <= v: v extends u (equal on the support of u)."""
    return all(x == 0 or x == y for x, y in zip(u, v))


def comparable(u: SignVector, v: SignVector) -> bool:
    if len(u) != len(v):
        raise InputError("sign vectors of different length are not comparable")
    return vector_leq(u, v) or vector_leq(v, u)


def is_chain(vectors) -> bool:
    vs = list(vectors)
    return all(vector_leq(vs[i], vs[i + 1]) and vs[i] != vs[i + 1]
               for i in range(len(vs) - 1))


def _validate_vector(v, n: int) -> SignVector:
    v = tuple(v)
    if len(v) != n or any(x not in (-1, 0, 1) for x in v):
        raise InputError(f"{v!r} is not a sign vector of length {n}")
    if not any(v):
        raise InputError("the zero vector carries no label")
    return v


def all_nonzero_vectors(n: int) -> Iterator[SignVector]:
    for v in product((-1, 0, 1), repeat=n):
        if any(v):
            yield v


def canonical_vectors(n: int) -> list[SignVector]:
    """One representative per antipodal pair: first nonzero entry is +1.

    Sorted by support size, then componentwise, for stable iteration.
    """
    out = []
    for v in all_nonzero_vectors(n):
        for x in v:
            if x:
                if x == 1:
                    out.append(v)
                break
    out.sort(key=lambda v: (support_size(v), v))
    return out


class FanLabeling:
    """Antipodal map from nonzero sign vectors to +-{1..m}.

    The map is stored in full so that deliberately broken (non-antipodal)
    labelings can be represented and then rejected by validate_labeling.
    """

    def __init__(self, n: int, m: int, mapping: dict):
        if n < 1 or m < 1:
            raise InputError(f"need n, m >= 1, got n={n}, m={m}")
        self.n = n
        self.m = m
        self._map = mapping

    @classmethod
    def from_function(cls, n: int, m: int, fn) -> "FanLabeling":
        """Build from a function on canonical vectors; antipodes get -label."""
        mapping = {}
        for v in canonical_vectors(n):
            label = fn(v)
            cls._check_label(label, m, v)
            mapping[v] = label
            mapping[negate(v)] = -label
        return cls(n, m, mapping)

    @classmethod
    def from_map(cls, n: int, m: int, entries: dict) -> "FanLabeling":
        """Build from explicit entries; missing antipodes are filled with -label.

        Entries present for both v and -v are kept as given, so antipodality
        violations survive into validate_labeling.
        """
        mapping = {}
        for v, label in entries.items():
            v = _validate_vector(v, n)
            cls._check_label(label, m, v)
            mapping[v] = label
        for v, label in list(mapping.items()):
            mapping.setdefault(negate(v), -label)
        missing = 3**n - 1 - len(mapping)
        if missing:
            raise InputError(f"labeling is partial: {missing} vectors unlabeled")
        return cls(n, m, mapping)

    @staticmethod
    def _check_label(label, m: int, v) -> None:
        if not isinstance(label, int) or label == 0 or abs(label) > m:
            raise InputError(f"label {label!r} at {v} outside +-{{1..{m}}}")

    def label(self, v: SignVector) -> int:
        try:
            return self._map[tuple(v)]
        except KeyError:
            raise InputError(f"{v!r} is not a labeled vector")

    def canonical_items(self) -> Iterator[tuple[SignVector, int]]:
        for v in canonical_vectors(self.n):
            yield v, self._map[v]

    def to_text(self) -> str:
        """FAN file format: header then one canonical vertex per line."""
        chars = {-1: "-", 0: "0", 1: "+"}
        lines = [f"FAN {self.n} {self.m}"]
        for v, label in self.canonical_items():
            lines.append("".join(chars[x] for x in v) + f" {label}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FanLabeling":
        values = {"-": -1, "0": 0, "+": 1}
        n = m = None
        entries: dict = {}
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split()
            if parts[0] == "FAN":
                if len(parts) != 3:
                    raise InputError(f"line {lineno}: bad header {line!r}")
                n, m = int(parts[1]), int(parts[2])
                continue
            if n is None:
                raise InputError(f"line {lineno}: vertex line before FAN header")
            if len(parts) != 2:
                raise InputError(f"line {lineno}: expected '<signs> <label>'")
            try:
                v = tuple(values[ch] for ch in parts[0])
            except KeyError:
                raise InputError(f"line {lineno}: bad sign string {parts[0]!r}")
            if v in entries:
                raise InputError(f"line {lineno}: vector {parts[0]} listed twice")
            entries[v] = int(parts[1])
        if n is None:
            raise InputError("missing FAN header")
        return cls.from_map(n, m, entries)


@dataclass(frozen=True)
class LabelingViolation:
    kind: str  # "antipodality" | "range" | "sum-zero"
    vertices: tuple[SignVector, ...]
    labels: tuple[int, ...]

    def describe(self) -> str:
        vs = "; ".join(str(v) for v in self.vertices)
        return f"{self.kind} violation at {vs} with labels {self.labels}"


def _submask_vectors(v: SignVector) -> Iterator[SignVector]:
    """Strictly smaller nonzero vectors below v, in increasing submask order."""
    positions = [i for i, x in enumerate(v) if x]
    s = len(positions)
    for sub in range(1, (1 << s) - 1):
        u = [0] * len(v)
        for b in range(s):
            if (sub >> b) & 1:
                u[positions[b]] = v[positions[b]]
        yield tuple(u)


def validate_labeling(lab: FanLabeling) -> Optional[LabelingViolation]:
    """None if antipodal, in range, and no comparable pair sums to zero."""
    for v in canonical_vectors(lab.n):
        lv, lnv = lab._map[v], lab._map[negate(v)]
        if lnv != -lv:
            return LabelingViolation("antipodality", (v, negate(v)), (lv, lnv))
    for v in sorted(lab._map, key=lambda v: (support_size(v), v)):
        lv = lab._map[v]
        if lv == 0 or abs(lv) > lab.m:
            return LabelingViolation("range", (v,), (lv,))
        for u in _submask_vectors(v):
            lu = lab._map[u]
            if lu + lv == 0:
                return LabelingViolation("sum-zero", (u, v), (lu, lv))
    return None


def maximal_chain_count(n: int) -> int:
    out = 2**n
    for i in range(2, n + 1):
        out *= i
    return out


def enumerate_maximal_chains(n: int, *, limit: int = DEFAULT_CHAIN_LIMIT
                             ) -> Iterator[tuple[SignVector, ...]]:
    """All 2^n * n! maximal chains, ordered by sign pattern then permutation."""
    if n > limit:
        raise ResourceLimitError(
            f"n = {n} gives {maximal_chain_count(n)} chains, over the limit (n <= {limit})"
        )
    perms = list(permutations(range(n)))
    for signs in product((1, -1), repeat=n):
        for perm in perms:
            vec = [0] * n
            chain = []
            for p in perm:
                vec[p] = signs[p]
                chain.append(tuple(vec))
            yield tuple(chain)


def _is_alternating(labels, leading: int) -> bool:
    """Sorted by |label| strictly increasing with signs leading, -leading, ..."""
    ordered = sorted(labels, key=abs)
    prev = 0
    want = leading
    for lab in ordered:
        a = abs(lab)
        if a <= prev or (lab > 0) != (want > 0):
            return False
        prev = a
        want = -want
    return True


def count_alternating(lab: FanLabeling, *, leading: int = 1, collect: bool = False):
    """Number of maximal chains with alternating labels (leading sign +1).

    On a labeling passing validate_labeling this count is odd; that parity
    is the Tucker-Ky Fan conclusion, not an assumption, so this routine
    just counts.  With collect=True also returns the qualifying chains.
    """
    n = lab.n
    if n > DEFAULT_CHAIN_LIMIT:
        raise ResourceLimitError(f"census over {maximal_chain_count(n)} chains refused")
    table = [0] * 3**n
    pow3 = [3**i for i in range(n)]
    for v, label in lab._map.items():
        code = 0
        for i, x in enumerate(v):
            code += (x + 1) * pow3[i]
        table[code] = label
    zero_code = (3**n - 1) // 2
    perms = list(permutations(range(n)))
    count = 0
    found = []
    for signs in product((1, -1), repeat=n):
        deltas = [signs[i] * pow3[i] for i in range(n)]
        for perm in perms:
            code = zero_code
            labels = []
            for p in perm:
                code += deltas[p]
                labels.append(table[code])
            if _is_alternating(labels, leading):
                count += 1
                if collect:
                    vec = [0] * n
                    chain = []
                    for p in perm:
                        vec[p] = signs[p]
                        chain.append(tuple(vec))
                    found.append(tuple(chain))
    return (count, found) if collect else count


def find_complementary_edge(lab: FanLabeling) -> Optional[tuple[SignVector, SignVector]]:
    """A comparable pair u < v with labels summing to zero.

    With labels bounded by n-1 such a pair must exist (Tucker), so coming
    up empty is an internal-consistency failure; with larger label bounds
    the hypothesis is not met and None is a legitimate answer.
    """
    for v in sorted(lab._map, key=lambda v: (support_size(v), v)):
        lv = lab._map[v]
        for u in _submask_vectors(v):
            if lab._map[u] + lv == 0:
                return (u, v)
    if lab.m <= lab.n - 1:
        raise InternalConsistencyError(
            f"no complementary pair despite labels within +-{{1..{lab.m}}} on n={lab.n}; "
            "this would falsify Tucker's lemma"
        )
    return None


def build_paper_labeling(g: KneserGraph, c: Coloring) -> FanLabeling:
    """The two-case labeling carried by a star-free coloring of KG(n, k).

    Colors must already occupy {2k-1, ..., m}; Case I labels (supports of
    size at most 2k-2) then stay strictly below every Case II label.

      Case I   |P(w)| + |N(w)| <= 2k-2:  label +-(|P|+|N|), positive iff
               P(w) beats N(w) in the size-then-colex order.
      Case II  support >= 2k-1: from the order-larger side S, the label is
               the largest color carried by two distinct k-subsets of S,
               or failing that by any k-subset of S; positive iff S = P(w).

    Validity (no comparable pair sums to zero) only needs c to be proper:
    a Case II pair at +-t would force two disjoint k-subsets with equal
    color t.
    """
    n, k = g.n, g.k
    if c.n_vertices != g.n_vertices:
        raise InputError("coloring does not match the graph")
    low = min(c.colors, default=0)
    if low < 2 * k - 1:
        raise InputError(
            f"colors must be renumbered to start at 2k-1 = {2 * k - 1}; "
            f"smallest used color is {low} (shift the coloring first)"
        )
    m = c.t

    from itertools import combinations
    side_cache: dict[frozenset, int] = {}

    def side_value(side: frozenset[int]) -> int:
        cached = side_cache.get(side)
        if cached is not None:
            return cached
        best_dup = 0
        best_single = 0
        seen: dict[int, int] = {}
        for comb in combinations(sorted(side), k):
            color = c.colors[g.index_of(comb)]
            if color > best_single:
                best_single = color
            prev = seen.get(color, 0) + 1
            seen[color] = prev
            if prev >= 2 and color > best_dup:
                best_dup = color
        value = best_dup if best_dup else best_single
        side_cache[side] = value
        return value

    def fn(w: SignVector) -> int:
        p, q = pos_set(w), neg_set(w)
        p_beats_n = subset_order_less(q, p)
        size = len(p) + len(q)
        if size <= 2 * k - 2:
            return size if p_beats_n else -size
        side = p if p_beats_n else q
        if len(side) < k:
            raise InternalConsistencyError(
                f"order-larger side {sorted(side)} smaller than k on support {size}"
            )
        value = side_value(side)
        return value if p_beats_n else -value

    return FanLabeling.from_function(n, max(m, 2 * k - 2), fn)


@dataclass(frozen=True)
class AlternatingPair:
    """Chain positions i < j whose labels sum to +-1, with the two sides
    whose k-subsets must be rainbow-colored when both labels are Case II."""

    i: int
    j: int
    labels: tuple[int, int]
    positive_side: frozenset[int]  # P of the positively labeled vertex
    negative_side: frozenset[int]  # N of the negatively labeled vertex
    both_case2: bool


@dataclass(frozen=True)
class AlternatingReport:
    length: int
    case2_count: int
    pairs: tuple[AlternatingPair, ...]


def analyze_alternating(lab: FanLabeling, chain, k: int) -> AlternatingReport:
    """Dissect a leading-positive alternating maximal chain.

    Reports how many of its labels came from Case II (supports >= 2k-1)
    and every position pair whose labels sum to +-1.
    """
    chain = tuple(tuple(v) for v in chain)
    if not is_chain(chain):
        raise InputError("input is not a chain")
    labels = [lab.label(v) for v in chain]
    if not _is_alternating(labels, 1):
        raise InputError("chain is not leading-positive alternating")
    threshold = 2 * k - 1
    case2 = sum(1 for v in chain if support_size(v) >= threshold)
    pairs = []
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            if abs(labels[i] + labels[j]) == 1:
                pos_v, neg_v = (chain[i], chain[j]) if labels[i] > 0 else (chain[j], chain[i])
                pairs.append(AlternatingPair(
                    i, j, (labels[i], labels[j]),
                    pos_set(pos_v), neg_set(neg_v),
                    both_case2=min(abs(labels[i]), abs(labels[j])) >= threshold,
                ))
    return AlternatingReport(len(chain), case2, tuple(pairs))


def random_antipodal_labeling(n: int, m: int, rng: random.Random) -> FanLabeling:
    """Uniform antipodal labeling into +-{1..m}; may contain zero-sum pairs."""
    values = [x for a in range(1, m + 1) for x in (a, -a)]
    return FanLabeling.from_function(n, m, lambda v: rng.choice(values))


def random_valid_labeling(n: int, m: int, rng: random.Random,
                          max_restarts: int = 1000) -> FanLabeling:
    """Random labeling guaranteed to pass validate_labeling.

    Labels are chosen greedily by increasing support size, avoiding the
    negatives of all labels already placed below; the rare dead end
    restarts the whole draw (deterministic for a seeded rng).
    """
    values = [x for a in range(1, m + 1) for x in (a, -a)]
    order = sorted(canonical_vectors(n), key=lambda v: (support_size(v), v))
    for _ in range(max_restarts):
        mapping: dict = {}
        dead = False
        for v in order:
            forbidden = {-mapping[u] for u in _submask_vectors(v)}
            choices = [x for x in values if x not in forbidden]
            if not choices:
                dead = True
                break
            label = rng.choice(choices)
            mapping[v] = label
            mapping[negate(v)] = -label
        if not dead:
            return FanLabeling(n, m, mapping)
    raise InternalConsistencyError(
        f"could not draw a valid labeling for n={n}, m={m} in {max_restarts} attempts"
    )
