"""The dual (band-generator) Garside structure on Br_n.

Simple elements correspond to non-crossing partitions of the strands: the
simple for a partition is the product of one ascending cycle per block
(each element maps to the next larger one in its block, the largest back to
the smallest).  There are Catalan(n) simples; the Garside element is the
single n-cycle delta = sigma_{n-1} ... sigma_1, and the letter length of a
simple is n minus its number of cycles.  The atoms are the band generators
a_{ts} (transpositions of strands t > s); an atom divides a simple iff its
two strands lie in the same block.
"""

from __future__ import annotations

import bisect
import functools

from .core import GarsideStructure, Simple
from .words import StructureId, StructureKind


def cycles_of(s: Simple) -> list[list[int]]:
    """Cycle decomposition; each cycle is listed from its smallest element."""
    seen = [False] * len(s)
    out = []
    for start in range(len(s)):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        x = s[start]
        while x != start:
            cycle.append(x)
            seen[x] = True
            x = s[x]
        out.append(cycle)
    return out


def is_noncrossing_ascending(s: Simple) -> bool:
    """Whether each cycle ascends through its block and blocks do not cross."""
    cycles = cycles_of(s)
    for cycle in cycles:
        if cycle != sorted(cycle):
            return False
    blocks = [c for c in cycles if len(c) > 1]
    for i, b in enumerate(blocks):
        for c in blocks[i + 1 :]:
            # b and c interleave iff c meets two different gaps of b
            gaps = {bisect.bisect_left(b, x) for x in c}
            if len(gaps) > 1:
                return False
    return True


class DualStructure(GarsideStructure):
    def __init__(self, n: int) -> None:
        super().__init__(StructureId(n, StructureKind.DUAL))

    def _make_delta(self) -> Simple:
        n = self.ident.strands
        return tuple((i + 1) % n for i in range(n))

    def _make_atoms(self) -> tuple[Simple, ...]:
        n = self.ident.strands
        atoms = []
        for t, s in self.ident.atom_pairs():
            a = list(range(n))
            a[t - 1], a[s - 1] = a[s - 1], a[t - 1]
            atoms.append(tuple(a))
        return tuple(atoms)

    def band_atom(self, t: int, s: int) -> Simple:
        """The band generator a_{ts} swapping strands t > s."""
        return self.atoms[self.ident.atom_index_of_band(t, s)]

    def norm(self, s: Simple) -> int:
        return len(s) - len(cycles_of(s))

    @functools.lru_cache(maxsize=None)
    def is_simple_payload(self, s: Simple) -> bool:
        return is_noncrossing_ascending(s)

    def atom_prefix(self, atom: int, s: Simple) -> bool:
        t, u = self.ident.atom_pairs()[atom]
        return self._same_cycle(s, t - 1, u - 1)

    def nc_atom_prefix_test(self, t: int, u: int, s: Simple) -> bool:
        """Whether the band a_{tu} is a prefix of the simple s."""
        return self.atom_prefix(self.ident.atom_index_of_band(t, u), s)

    @staticmethod
    def _same_cycle(s: Simple, i: int, j: int) -> bool:
        x = s[i]
        while x != i:
            if x == j:
                return True
            x = s[x]
        return False


@functools.cache
def dual_structure(n: int) -> DualStructure:
    return DualStructure(n)
