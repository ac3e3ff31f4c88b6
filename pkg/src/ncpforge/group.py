"""Catalog-built reflection groups.

A group is enumerated once by breadth-first closure over its generator
matrices, with canonical-hash deduplication.  Elements are then re-indexed
in canonical digest order, so the indexing is identical across runs.  All
downstream computation works on integer indices against a full
multiplication table; exact matrices are kept around for fixed spaces,
flats and the regularity check.
"""

from __future__ import annotations

from functools import lru_cache
from math import lcm

import numpy as np

from .catalog import (
    GroupSpec,
    conductor_of,
    coxeter_matrix_of,
    degrees_of,
    generators_of,
    order_of,
    perm_to_element_matrix,
)
from .cyclo import CycNum, Matrix, Subspace, kernel
from .errors import (
    CoxeterValidationFailed,
    ElementNotInGroup,
    OrderCapExceeded,
)

DEFAULT_ORDER_CAP = 50_000


class ReflectionGroup:
    """Fully enumerated well-generated irreducible reflection group."""

    def __init__(self, spec: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP,
                 check_regularity: bool = True):
        self.spec = spec
        self.conductor = conductor_of(spec)
        self.degrees = degrees_of(spec)
        self.n = spec.n
        self.h = self.degrees[-1]
        expected_order = order_of(spec)
        if expected_order > order_cap:
            raise OrderCapExceeded(
                f"{spec.label}: order {expected_order} exceeds cap {order_cap}")

        gens = generators_of(spec)
        matrices = self._closure(gens, expected_order * 2)
        matrices.sort(key=lambda mat: mat.digest())
        self.matrices: list[Matrix] = matrices
        self.size = len(matrices)
        self._index = {mat.key(): i for i, mat in enumerate(matrices)}
        if self.size != expected_order:
            raise CoxeterValidationFailed(
                f"{spec.label}: closure has {self.size} elements, "
                f"product of degrees is {expected_order}")
        self.identity = self._index[Matrix.identity(self.n, self.conductor).key()]
        self.generators = [self._index[g.key()] for g in gens]

        self.mult = self._build_mult_table(gens)
        self.inv = np.empty(self.size, dtype=np.int32)
        rows, cols = np.nonzero(self.mult == self.identity)
        self.inv[rows] = cols

        self.fixed_dim = np.array(
            [kernel(mat.minus_identity()).dim for mat in matrices],
            dtype=np.int32)
        self.reflections = [
            i for i in range(self.size)
            if i != self.identity and self.fixed_dim[i] == self.n - 1
        ]
        if len(self.reflections) != sum(d - 1 for d in self.degrees):
            raise CoxeterValidationFailed(
                f"{spec.label}: found {len(self.reflections)} reflections, "
                f"expected {sum(d - 1 for d in self.degrees)}")

        self.length = self._length_table()
        self.class_id, self.classes = self._conjugacy_classes()

        cox = coxeter_matrix_of(spec)
        key = cox.key()
        if key not in self._index:
            raise CoxeterValidationFailed(
                f"{spec.label}: catalog Coxeter matrix not in the group")
        self.coxeter = self._index[key]
        self._validate_coxeter(check_regularity)

    # -- construction ----------------------------------------------------

    def _closure(self, gens: list[Matrix], hard_cap: int) -> list[Matrix]:
        ident = Matrix.identity(self.n, self.conductor)
        seen = {ident.key(): ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for mat in frontier:
                for g in gens:
                    prod = g @ mat
                    k = prod.key()
                    if k not in seen:
                        seen[k] = prod
                        nxt.append(prod)
            frontier = nxt
            if len(seen) > hard_cap:
                raise OrderCapExceeded("closure blew past the expected order")
        return list(seen.values())

    def _build_mult_table(self, gen_mats: list[Matrix]) -> np.ndarray:
        size = self.size
        # left-multiplication permutation of each generator
        gen_perm = {}
        for gi, g in zip(self.generators, gen_mats):
            perm = np.empty(size, dtype=np.int32)
            for j, mat in enumerate(self.matrices):
                perm[j] = self._index[(g @ mat).key()]
            gen_perm[gi] = perm
        mult = np.empty((size, size), dtype=np.int32)
        mult[self.identity] = np.arange(size, dtype=np.int32)
        done = np.zeros(size, dtype=bool)
        done[self.identity] = True
        frontier = [self.identity]
        while frontier:
            nxt = []
            for w in frontier:
                for gi, perm in gen_perm.items():
                    target = perm[w]
                    if not done[target]:
                        mult[target] = perm[mult[w]]
                        done[target] = True
                        nxt.append(int(target))
            frontier = nxt
        assert done.all()
        return mult

    def _length_table(self) -> np.ndarray:
        dist = np.full(self.size, -1, dtype=np.int32)
        dist[self.identity] = 0
        frontier = np.array([self.identity], dtype=np.int32)
        d = 0
        refl = np.array(self.reflections, dtype=np.int32)
        while frontier.size:
            d += 1
            reached = np.unique(self.mult[np.ix_(refl, frontier)])
            new = reached[dist[reached] < 0]
            dist[new] = d
            frontier = new
        assert (dist >= 0).all()
        return dist

    def _conjugacy_classes(self) -> tuple[np.ndarray, list[list[int]]]:
        class_id = np.full(self.size, -1, dtype=np.int32)
        classes: list[list[int]] = []
        gen_and_inv = list(self.generators) + [
            int(self.inv[g]) for g in self.generators
        ]
        for start in range(self.size):
            if class_id[start] >= 0:
                continue
            cid = len(classes)
            orbit = [start]
            class_id[start] = cid
            queue = [start]
            while queue:
                w = queue.pop()
                for g in gen_and_inv:
                    conj = int(self.mult[g, self.mult[w, self.inv[g]]])
                    if class_id[conj] < 0:
                        class_id[conj] = cid
                        orbit.append(conj)
                        queue.append(conj)
            classes.append(sorted(orbit))
        return class_id, classes

    def _validate_coxeter(self, check_regularity: bool) -> None:
        c = self.coxeter
        if self.element_order(c) != self.h:
            raise CoxeterValidationFailed(
                f"{self.spec.label}: Coxeter element has order "
                f"{self.element_order(c)}, expected h = {self.h}")
        if self.fixed_dim[c] != 0:
            raise CoxeterValidationFailed(
                f"{self.spec.label}: Coxeter element has a nontrivial fixed space")
        if int(self.length[c]) != self.n:
            raise CoxeterValidationFailed(
                f"{self.spec.label}: reflection length of c is "
                f"{int(self.length[c])}, expected {self.n}")
        if check_regularity and not self.coxeter_regularity_check():
            raise CoxeterValidationFailed(
                f"{self.spec.label}: catalog Coxeter element is not "
                f"zeta_h-regular")

    # -- queries ----------------------------------------------------------

    def index_of(self, mat: Matrix) -> int:
        try:
            return self._index[mat.key()]
        except KeyError:
            raise ElementNotInGroup(f"matrix not in {self.spec.label}") from None

    def element_from_permutation(self, perm: tuple[int, ...]) -> int:
        """Type A only: one-line permutation of 1..n+1 to element index."""
        return self.index_of(perm_to_element_matrix(self.spec, perm))

    def product(self, *elements: int) -> int:
        acc = self.identity
        for w in elements:
            acc = int(self.mult[acc, w])
        return acc

    def inverse(self, w: int) -> int:
        return int(self.inv[w])

    def conjugate(self, w: int, by: int) -> int:
        """by^{-1} * w * by."""
        return int(self.mult[self.inv[by], self.mult[w, by]])

    def element_order(self, w: int) -> int:
        self._check_member(w)
        k, acc = 1, w
        while acc != self.identity:
            acc = int(self.mult[acc, w])
            k += 1
        return k

    def reflection_length(self, w: int) -> int:
        self._check_member(w)
        return int(self.length[w])

    def divides(self, u: int, v: int) -> bool:
        """Absolute order: l(u) + l(u^{-1} v) = l(v)."""
        self._check_member(u)
        self._check_member(v)
        quotient = self.mult[self.inv[u], v]
        return int(self.length[u]) + int(self.length[quotient]) == int(self.length[v])

    def conjugacy_class(self, w: int) -> list[int]:
        self._check_member(w)
        return self.classes[int(self.class_id[w])]

    def _check_member(self, w) -> None:
        if not 0 <= int(w) < self.size:
            raise ElementNotInGroup(f"index {w} outside 0..{self.size - 1}")

    @lru_cache(maxsize=None)
    def fixed_space(self, w: int) -> Subspace:
        """Ker(w - 1), exact."""
        return kernel(self.matrices[w].minus_identity())

    def reflection_hyperplanes(self) -> list[Subspace]:
        return [self.fixed_space(r) for r in self.reflections]

    def coxeter_regularity_check(self, w: int | None = None) -> bool:
        """True iff w (default: the catalog c) has a zeta_h-eigenvector
        avoiding every reflecting hyperplane.  Arithmetic is lifted to the
        conductor lcm(m, h)."""
        if w is None:
            w = self.coxeter
        big_m = lcm(self.conductor, self.h)
        mat = self.matrices[w].embed(big_m)
        zeta_h = CycNum.zeta(big_m, big_m // self.h)
        eigenspace = kernel(mat.minus_scalar(zeta_h))
        if eigenspace.dim == 0:
            return False
        # a regular eigenvector exists iff no hyperplane contains the
        # whole eigenspace (the field is infinite)
        for r in self.reflections:
            hyper = self.fixed_space(r)
            lifted = Subspace(
                hyper.n, big_m,
                [[e.embed(big_m) for e in v] for v in hyper.basis])
            if lifted.contains_subspace(eigenspace):
                return False
        return True

    def __repr__(self):
        return f"ReflectionGroup({self.spec.label}, |W|={self.size})"


@lru_cache(maxsize=None)
def build_group(spec: GroupSpec, order_cap: int = DEFAULT_ORDER_CAP) -> ReflectionGroup:
    """Build (and cache) the catalog group for a spec."""
    return ReflectionGroup(spec, order_cap=order_cap)
