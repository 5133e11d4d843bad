"""
Graded Core
Degrees, exact rationals, permutations and the Koszul sign rule
"""

import itertools
from fractions import Fraction
from typing import Iterator, List, Sequence, Tuple, TypeVar, Union

from repository.exceptions import ArgumentError

Degree = int
Rat = Fraction
Sign = int

T = TypeVar("T")


def as_rat(value: Union[int, str, Fraction]) -> Fraction:
    """Coerce ints, strings like '1/12' and fractions to an exact Fraction"""
    if isinstance(value, float):
        raise ArgumentError(f"Refusing to build an exact coefficient from float {value!r}")
    return Fraction(value)


class Permutation:
    """A bijection on slots 0..k-1; the factor at position i moves to position images[i]"""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise ArgumentError(f"Not a permutation of 0..{len(images) - 1}: {list(images)}")
        self.images: Tuple[int, ...] = images

    @classmethod
    def identity(cls, k: int) -> "Permutation":
        return cls(range(k))

    @classmethod
    def cycle(cls, k: int) -> "Permutation":
        """The cycle moving every factor one slot to the right (last wraps to first)"""
        return cls([(i + 1) % k for i in range(k)])

    @classmethod
    def transposition(cls, k: int, i: int, j: int) -> "Permutation":
        images = list(range(k))
        images[i], images[j] = images[j], images[i]
        return cls(images)

    @property
    def size(self) -> int:
        return len(self.images)

    def __len__(self) -> int:
        return len(self.images)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)

    def __repr__(self) -> str:
        return f"Permutation({list(self.images)})"

    def compose(self, other: "Permutation") -> "Permutation":
        """self ∘ other: apply other first, then self"""
        if other.size != self.size:
            raise ArgumentError(f"Cannot compose permutations of sizes {self.size} and {other.size}")
        return Permutation([self.images[other.images[i]] for i in range(self.size)])

    def inverse(self) -> "Permutation":
        inv = [0] * self.size
        for i, target in enumerate(self.images):
            inv[target] = i
        return Permutation(inv)

    def apply(self, seq: Sequence[T]) -> Tuple[T, ...]:
        """Reorder a sequence: the item at position i lands at position images[i]"""
        if len(seq) != self.size:
            raise ArgumentError(f"Sequence of length {len(seq)} does not match permutation size {self.size}")
        out: List = [None] * self.size
        for i, item in enumerate(seq):
            out[self.images[i]] = item
        return tuple(out)

    def inversions(self) -> Iterator[Tuple[int, int]]:
        for i in range(self.size):
            for j in range(i + 1, self.size):
                if self.images[i] > self.images[j]:
                    yield i, j

    def sign(self) -> Sign:
        """Sign of the permutation (the character of the sign representation)"""
        return -1 if sum(1 for _ in self.inversions()) % 2 else 1


def koszul_sign(perm: Permutation, degrees: Sequence[Degree]) -> Sign:
    """Sign picked up when factors of the given degrees are reordered by perm"""
    if len(degrees) != perm.size:
        raise ArgumentError(f"koszul_sign got {len(degrees)} degrees for a permutation of size {perm.size}")
    odd_swaps = 0
    for i, j in perm.inversions():
        if degrees[i] % 2 and degrees[j] % 2:
            odd_swaps += 1
    return -1 if odd_swaps % 2 else 1


def all_permutations(k: int) -> Iterator[Permutation]:
    for images in itertools.permutations(range(k)):
        yield Permutation(images)
