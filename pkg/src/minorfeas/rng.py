"""Portable seeded randomness.

All randomized code in the package draws from :class:`Rng`, which wraps the
MT19937 generator of :mod:`random` but only ever consumes its ``random()``
stream.  Python guarantees that ``Random(seed).random()`` produces the same
sequence on every platform and version, whereas the derived helpers
(``randrange``, ``sample``, ``shuffle``) are allowed to change.  Every derived
draw here is defined in terms of ``random()`` so datasets stay reproducible.

Stream semantics:

* ``below(n)`` consumes exactly one float: ``floor(random() * n)``.
* ``sample(seq, k)`` consumes exactly ``k`` floats (partial Fisher-Yates).
* ``shuffle(lst)`` consumes ``len(lst) - 1`` floats, back to front.
* ``sample_indices(n, k)`` consumes exactly ``k`` floats (Floyd's algorithm).

Child seeds are derived with :func:`derive_seed`, a BLAKE2b hash of the parent
seed and a path of labels, so that instance ``i`` of a run seeded with ``s``
always gets the same stream regardless of scheduling.
"""

from __future__ import annotations

import hashlib
import random
from typing import MutableSequence, Sequence, TypeVar

T = TypeVar("T")

SEED_MASK = (1 << 64) - 1


def derive_seed(seed: int, *path: object) -> int:
    """Deterministically derive a 64-bit child seed from ``seed`` and ``path``."""
    text = ":".join([str(int(seed) & SEED_MASK)] + [str(p) for p in path])
    digest = hashlib.blake2b(text.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "little")


class Rng:
    def __init__(self, seed: int = 0):
        self.seed = int(seed) & SEED_MASK
        self._r = random.Random(self.seed)

    def child(self, *path: object) -> "Rng":
        return Rng(derive_seed(self.seed, *path))

    def random(self) -> float:
        return self._r.random()

    def below(self, n: int) -> int:
        if n <= 0:
            raise ValueError("below() needs n >= 1")
        return min(int(self._r.random() * n), n - 1)

    def integers(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def uniform(self, a: float, b: float) -> float:
        return a + (b - a) * self._r.random()

    def bernoulli(self, p: float) -> bool:
        return self._r.random() < p

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def shuffle(self, lst: MutableSequence[T]) -> None:
        for i in range(len(lst) - 1, 0, -1):
            j = self.below(i + 1)
            lst[i], lst[j] = lst[j], lst[i]

    def sample(self, seq: Sequence[T], k: int) -> list[T]:
        pool = list(seq)
        n = len(pool)
        k = min(k, n)
        for i in range(k):
            j = i + self.below(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def sample_indices(self, n: int, k: int) -> set[int]:
        """``k`` distinct indices from ``range(n)`` in exactly ``k`` draws."""
        chosen: set[int] = set()
        for j in range(n - k, n):
            t = self.below(j + 1)
            chosen.add(j if t in chosen else t)
        return chosen

