"""The noncrossing partition lattice NCP_W(c) = [1, c] under absolute order."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from .errors import CatalanMismatch, ElementNotInGroup, MeetJoinMissing
from .group import ReflectionGroup


def fuss_catalan(degrees, k: int = 1) -> int:
    """prod (d_i + k*h) / d_i, exact."""
    h = degrees[-1]
    value = Fraction(1)
    for d in degrees:
        value *= Fraction(d + k * h, d)
    assert value.denominator == 1
    return value.numerator


class NcpLattice:
    """Divisors of the Coxeter element, with rank, order table and flats."""

    def __init__(self, group: ReflectionGroup):
        self.group = group
        c = group.coxeter
        self.c = c
        inv = group.inv
        length = group.length
        lc = int(length[c])
        quot = group.mult[inv, c]  # quot[w] = w^{-1} c
        member_mask = length + length[quot] == lc
        # canonical hash order: element indices are already digest-sorted
        self.members = [int(i) for i in np.nonzero(member_mask)[0]]
        expected = fuss_catalan(group.degrees, 1)
        if len(self.members) != expected:
            raise CatalanMismatch(
                f"{group.spec.label}: |NCP| = {len(self.members)}, "
                f"formula gives {expected}")
        self.pos = {w: i for i, w in enumerate(self.members)}
        self.size = len(self.members)
        self.rank = np.array([int(length[w]) for w in self.members],
                             dtype=np.int32)
        self.bottom = self.pos[group.identity]
        self.top = self.pos[c]

        # dense relation table: leq[i, j] iff members[i] divides members[j]
        idx = np.array(self.members, dtype=np.int32)
        quotients = group.mult[np.ix_(inv[idx], idx)]
        self.leq = (self.rank[:, None] + length[quotients]) == self.rank[None, :]

    # -- order structure ---------------------------------------------------

    def member_index(self, w: int) -> int:
        try:
            return self.pos[int(w)]
        except KeyError:
            raise ElementNotInGroup(
                f"element {w} is not a divisor of c") from None

    def leq_elements(self, u: int, v: int) -> bool:
        return bool(self.leq[self.member_index(u), self.member_index(v)])

    def meet(self, u: int, v: int) -> int:
        """Greatest lower bound (element indices in and out)."""
        i, j = self.member_index(u), self.member_index(v)
        below = np.nonzero(self.leq[:, i] & self.leq[:, j])[0]
        return self.members[self._extreme(below, upper=True, what="meet")]

    def join(self, u: int, v: int) -> int:
        i, j = self.member_index(u), self.member_index(v)
        above = np.nonzero(self.leq[i, :] & self.leq[j, :])[0]
        return self.members[self._extreme(above, upper=False, what="join")]

    def _extreme(self, candidates: np.ndarray, upper: bool, what: str) -> int:
        ranks = self.rank[candidates]
        best = candidates[int(np.argmax(ranks) if upper else np.argmin(ranks))]
        if upper:
            ok = self.leq[candidates, best].all()
        else:
            ok = self.leq[best, candidates].all()
        if not ok:
            raise MeetJoinMissing(
                f"{self.group.spec.label}: no {what} for the pair")
        return int(best)

    @lru_cache(maxsize=None)
    def flat(self, w: int):
        """Brady-Watt flat Ker(w - 1) of a member."""
        self.member_index(w)
        return self.group.fixed_space(w)

    # -- counting ----------------------------------------------------------

    def multichain_count(self, chain_length: int) -> int:
        """Number of multichains w_1 <= ... <= w_N <= c, by exact DP."""
        if chain_length < 1:
            raise ValueError("chain length must be >= 1")
        counts = [1] * self.size
        below = [np.nonzero(self.leq[:, j])[0] for j in range(self.size)]
        for _ in range(chain_length - 1):
            counts = [sum(counts[int(i)] for i in below[j])
                      for j in range(self.size)]
        return sum(counts)

    def divisors_of(self, w: int) -> list[int]:
        """Members u with u <= w (element indices)."""
        j = self.member_index(w)
        return [self.members[int(i)] for i in np.nonzero(self.leq[:, j])[0]]

    def reflections_below(self, w: int) -> list[int]:
        j = self.member_index(w)
        return [self.members[int(i)]
                for i in np.nonzero(self.leq[:, j] & (self.rank == 1))[0]]

    def __repr__(self):
        return f"NcpLattice({self.group.spec.label}, size={self.size})"


@lru_cache(maxsize=None)
def build_ncp(group: ReflectionGroup) -> NcpLattice:
    return NcpLattice(group)
