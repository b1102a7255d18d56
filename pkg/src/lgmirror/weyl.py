"""The Weyl group of type B_m as signed permutations, words and subwords.

Elements are stored by their images (w(1), ..., w(m)) with w(-k) = -w(k)
implicit.  The generator s_i (i < m) swaps coordinates i, i+1; s_m flips
the sign of the last coordinate.  Lengths are counted root-theoretically:
ell(w) is the number of positive roots of C_m (equivalently B_m) that w
maps to negative roots, which keeps every convention question out of the
length function.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Sequence

from lgmirror.partitions import StrictPartition, from_subset, to_subset


@dataclass(frozen=True)
class SignedPermutation:
    """Images (w(1), ..., w(m)), values in {+-1, ..., +-m} with distinct moduli."""

    images: tuple[int, ...]

    def __post_init__(self) -> None:
        m = len(self.images)
        if sorted(abs(v) for v in self.images) != list(range(1, m + 1)):
            raise ValueError(f"not a signed permutation: {self.images}")

    @property
    def m(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        if k > 0:
            return self.images[k - 1]
        return -self.images[-k - 1]

    def __mul__(self, other: SignedPermutation) -> SignedPermutation:
        # (w v)(k) = w(v(k))
        return SignedPermutation(tuple(self(other(k)) for k in range(1, self.m + 1)))

    def inverse(self) -> SignedPermutation:
        img = [0] * self.m
        for k in range(1, self.m + 1):
            v = self.images[k - 1]
            img[abs(v) - 1] = k if v > 0 else -k
        return SignedPermutation(tuple(img))

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.images) + "]"


def identity(m: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, m + 1)))


def simple_reflection(i: int, m: int) -> SignedPermutation:
    if not 1 <= i <= m:
        raise ValueError(f"simple reflection s_{i} out of range for m={m}")
    img = list(range(1, m + 1))
    if i < m:
        img[i - 1], img[i] = img[i], img[i - 1]
    else:
        img[m - 1] = -m
    return SignedPermutation(tuple(img))


def length(w: SignedPermutation) -> int:
    """Number of positive roots (type C_m) sent to negative roots.

    A root supported on indices p < q is negative exactly when the
    coefficient of e_p is -1; the root 2 e_p is negative when its
    coefficient is.
    """
    m = w.m
    img = w.images
    total = sum(1 for v in img if v < 0)  # roots 2 e_i
    for i in range(1, m + 1):
        vi = img[i - 1]
        for j in range(i + 1, m + 1):
            vj = img[j - 1]
            # w(e_i - e_j) = sgn(vi) e_|vi| - sgn(vj) e_|vj|
            small_coeff = (1 if vi > 0 else -1) if abs(vi) < abs(vj) else (-1 if vj > 0 else 1)
            if small_coeff < 0:
                total += 1
            # w(e_i + e_j)
            small_coeff = (1 if vi > 0 else -1) if abs(vi) < abs(vj) else (1 if vj > 0 else -1)
            if small_coeff < 0:
                total += 1
    return total


def word_product(word: Sequence[int], m: int) -> SignedPermutation:
    out = identity(m)
    for letter in word:
        out = out * simple_reflection(letter, m)
    return out


def is_reduced(word: Sequence[int], m: int) -> bool:
    return length(word_product(word, m)) == len(word)


# -- the parabolic W_P = <s_1, ..., s_{m-1}> and its minimal coset reps ------


def is_min_coset_rep(w: SignedPermutation) -> bool:
    lw = length(w)
    return all(length(w * simple_reflection(i, w.m)) > lw for i in range(1, w.m))


def negative_subset(w: SignedPermutation) -> tuple[int, ...]:
    """The subset I = {|w(j)| : w(j) < 0}, i.e. the spin weight of w."""
    return tuple(sorted(abs(v) for v in w.images if v < 0))


def min_rep_from_subset(subset: Iterable[int], m: int) -> SignedPermutation:
    """The minimal coset representative in W/W_P with negative entries I.

    One-line form: the complement of I ascending, then I descending with
    signs flipped.  Minimality and ell(w) = |lambda(I)| are enforced by the
    test suite rather than assumed.
    """
    idx = sorted(set(subset))
    pos = [k for k in range(1, m + 1) if k not in idx]
    return SignedPermutation(tuple(pos) + tuple(-k for k in reversed(idx)))


def min_coset_rep_of(w: SignedPermutation) -> SignedPermutation:
    """Projection W -> W^P (minimal representative of w W_P)."""
    return min_rep_from_subset(negative_subset(w), w.m)


def coset_min_rep(lam: StrictPartition) -> SignedPermutation:
    """The element of W^P indexed by a strict partition, with ell(w) = |lambda|."""
    return min_rep_from_subset(to_subset(lam), lam.m)


def partition_of(w: SignedPermutation) -> StrictPartition:
    return from_subset(negative_subset(w), w.m)


# -- the canonical reduced word of w^P and subword enumeration ---------------


def canonical_wp_word(m: int) -> tuple[int, ...]:
    """(s_m)(s_{m-1} s_m) ... (s_1 s_2 ... s_m) as a letter sequence."""
    word: list[int] = []
    for k in range(1, m + 1):
        word.extend(range(m + 1 - k, m + 1))
    return tuple(word)


def wp_element(m: int) -> SignedPermutation:
    return word_product(canonical_wp_word(m), m)


@lru_cache(maxsize=None)
def _reduced_subwords_cached(word: tuple[int, ...], target: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    m = target.m
    n = len(word)
    goal_len = length(target)
    refl = [simple_reflection(i, m) for i in range(1, m + 1)]
    out: list[tuple[int, ...]] = []

    def walk(pos: int, cur: SignedPermutation, cur_len: int, taken: tuple[int, ...]) -> None:
        if cur_len == goal_len:
            if cur == target:
                out.append(taken)
            return
        if goal_len - cur_len > n - pos:
            return
        for p in range(pos, n):
            nxt = cur * refl[word[p] - 1]
            if length(nxt) == cur_len + 1:
                walk(p + 1, nxt, cur_len + 1, taken + (p + 1,))

    walk(0, identity(m), 0, ())
    return tuple(sorted(out))


def reduced_subwords(word: Sequence[int], target: SignedPermutation) -> tuple[tuple[int, ...], ...]:
    """All position subsets of `word` spelling a reduced expression of `target`.

    Positions are 1-based and returned sorted; the subword read in
    increasing position order multiplies to `target` using exactly
    ell(target) letters.  Every prefix of a reduced word is reduced, which
    prunes the position walk.
    """
    return _reduced_subwords_cached(tuple(word), target)


@lru_cache(maxsize=None)
def complement_subwords(m: int) -> tuple[tuple[int, ...], ...]:
    """Position subsets S of the canonical word, |S| = N - m, with
    (subword at S) * s_1 s_2 ... s_m a reduced expression of w^P.

    Since |S| + m = ell(w^P), the product equals w^P iff the combined word
    is reduced.
    """
    word = canonical_wp_word(m)
    n = len(word)
    tail = word_product(range(1, m + 1), m)
    target = wp_element(m)
    out = []
    for subset in combinations(range(1, n + 1), n - m):
        prod = word_product([word[p - 1] for p in subset], m)
        if prod * tail == target:
            out.append(subset)
    return tuple(out)
