"""The standard Garside structure on Br_n: simples are permutation braids.

Every permutation of the strands corresponds to exactly one simple element
(n! simples); the Garside element is the half twist, i.e. the order-reversing
permutation, and the letter length of a simple is the inversion count of its
permutation.  An Artin generator sigma_i is a prefix of a simple iff the
one-line notation has a descent at position i.
"""

from __future__ import annotations

import functools

from .core import GarsideStructure, Simple
from .words import StructureId, StructureKind


def inversion_count(s: Simple) -> int:
    return sum(1 for i in range(len(s)) for j in range(i + 1, len(s)) if s[i] > s[j])


class ArtinStructure(GarsideStructure):
    def __init__(self, n: int) -> None:
        super().__init__(StructureId(n, StructureKind.STANDARD))

    def _make_delta(self) -> Simple:
        n = self.ident.strands
        return tuple(range(n - 1, -1, -1))

    def _make_atoms(self) -> tuple[Simple, ...]:
        n = self.ident.strands
        atoms = []
        for i in range(n - 1):
            a = list(range(n))
            a[i], a[i + 1] = a[i + 1], a[i]
            atoms.append(tuple(a))
        return tuple(atoms)

    @functools.lru_cache(maxsize=None)
    def norm(self, s: Simple) -> int:
        return inversion_count(s)

    def is_simple_payload(self, s: Simple) -> bool:
        return True  # every permutation is a permutation braid

    def atom_prefix(self, atom: int, s: Simple) -> bool:
        # Descent criterion, verified against brute-force divisor enumeration.
        return s[atom] > s[atom + 1]

    def atom_prefix_test(self, i: int, s: Simple) -> bool:
        """Whether sigma_i (1-indexed) is a prefix of the simple s."""
        if not 1 <= i <= self.ident.strands - 1:
            raise ValueError(f"no generator sigma_{i} in Br_{self.ident.strands}")
        return self.atom_prefix(i - 1, s)

    def simple_product_if_simple(self, a: Simple, b: Simple) -> Simple | None:
        """a*b when the product is again simple (inversion counts add)."""
        ab = tuple(b[x] for x in a)
        if self.norm(ab) == self.norm(a) + self.norm(b):
            return ab
        return None


@functools.cache
def artin_structure(n: int) -> ArtinStructure:
    return ArtinStructure(n)
