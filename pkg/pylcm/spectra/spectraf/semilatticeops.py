"""!
\file semilatticeops.py Finite sub-semilattices of E(S_P), of the ideal
semilattices P_l and P_r, and their products
"""
import logging
from itertools import product
from typing import Any, Callable, Hashable, List, Optional, Tuple

from pylcm.errors import NotIdempotent, ResourceLimitError
from pylcm.isg.isgf.tripleops import TripleBoolOps, TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Element, Side
from pylcm.propertyresult import PropertyResult
from pylcm.spectra.stype.semilattice import FiniteSemilattice, IdealPair

logger = logging.getLogger(__name__)

DEFAULT_CEILING = 10 ** 6


class SemilatticeOps:
    """"""

    @staticmethod
    def close_under_meet(
        generators: List[Any],
        meet: Callable[[Any, Any], Any],
        label: Callable[[Any], Hashable],
        zero: Any,
        top: Any,
        name: str = "",
        ceiling: int = DEFAULT_CEILING,
    ) -> FiniteSemilattice:
        """!
        \brief the semilattice generated by generators, zero and top

        \throws ResourceLimitError if the closure grows past the ceiling
        """
        labels: List[Hashable] = []
        objects: List[Any] = []
        index = {}

        def add(obj) -> bool:
            lab = label(obj)
            if lab in index:
                return False
            index[lab] = len(labels)
            labels.append(lab)
            objects.append(obj)
            if len(labels) > ceiling:
                raise ResourceLimitError(
                    limit=ceiling, requested=len(labels), what=name or "meets"
                )
            return True

        add(top)
        add(zero)
        for g in generators:
            add(g)
        frontier = list(range(len(objects)))
        while frontier:
            nxt = []
            count = len(objects)
            for i in frontier:
                for j in range(count):
                    if add(meet(objects[i], objects[j])):
                        nxt.append(len(objects) - 1)
            frontier = nxt
        n = len(objects)
        table = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                k = index[label(meet(objects[i], objects[j]))]
                table[i][j] = table[j][i] = k
        logger.debug("closed %s under meets: %d elements", name, n)
        return FiniteSemilattice(
            labels, objects, table, zero=index[label(zero)], top=0, name=name
        )

    @staticmethod
    def build_semilattice(M: AbstractLcmMonoid, depth: int) -> FiniteSemilattice:
        """!
        \brief the sub-semilattice of E(S_P) generated by the [p, qp, q]
        with length(p), length(q) <= depth, plus zero

        \code{.py}

        >>> L = SemilatticeOps.build_semilattice(FreeMonoid(2), 1)
        >>> len(L)
        >>> 10

        \endcode
        """
        elements = M.enumerate_up_to(depth)
        gens = [TripleOps.idempotent(M, p, q) for p, q in product(elements, repeat=2)]
        ceiling = getattr(M, "settings", None)
        return SemilatticeOps.close_under_meet(
            gens,
            TripleOps.idempotent_meet,
            TripleOps.canonical_key,
            zero=Triple.zero(M),
            top=TripleOps.top(M),
            name="E(S_P) depth " + str(depth),
            ceiling=ceiling.enumeration_ceiling if ceiling else DEFAULT_CEILING,
        )

    @staticmethod
    def build_ideal_semilattice(
        M: AbstractLcmMonoid, depth: int, side: Side
    ) -> FiniteSemilattice:
        """!
        \brief principal right ideals pP (side RIGHT) or left ideals Pq
        (side LEFT) of generators of length <= depth, closed under
        intersection, plus ∅ stored as None
        """
        if side is Side.RIGHT:
            normalize = M.right_normalize
            lcm = M.right_lcm
        else:
            normalize = M.left_normalize
            lcm = M.left_lcm

        def meet(x: Optional[Element], y: Optional[Element]):
            if x is None or y is None:
                return None
            w = lcm(x, y)
            return None if w is None else normalize(w.r)[0]

        def label(x: Optional[Element]) -> Hashable:
            return None if x is None else M.key(x)

        gens = [normalize(p)[0] for p in M.enumerate_up_to(depth)]
        ceiling = getattr(M, "settings", None)
        return SemilatticeOps.close_under_meet(
            gens,
            meet,
            label,
            zero=None,
            top=M.identity(),
            name=("P_r" if side is Side.RIGHT else "P_l") + " depth " + str(depth),
            ceiling=ceiling.enumeration_ceiling if ceiling else DEFAULT_CEILING,
        )

    @staticmethod
    def phi_ideal_pairs(e: Triple) -> IdealPair:
        """!
        \brief [p, qp, q] ↦ (Pq, pP)

        \throws NotIdempotent for the zero and for non idempotents
        """
        if e.is_zero() or not TripleBoolOps.is_idempotent(e):
            raise NotIdempotent(str(e) + " is not a nonzero idempotent")
        M = e.monoid
        return IdealPair(
            left=M.left_normalize(e.r)[0], right=M.right_normalize(e.p)[0]
        )

    @staticmethod
    def product_semilattice(
        E: FiniteSemilattice, F: FiniteSemilattice
    ) -> FiniteSemilattice:
        """!
        \brief E ×₀ F: pairs of nonzero elements with every pair containing a
        zero glued into a single zero

        Objects are index pairs (i, j); the zero has object None.
        """
        pairs = [(i, j) for i in E.nonzero() for j in F.nonzero()]
        labels: List[Hashable] = [None] + pairs
        objects: List[Any] = [None] + pairs
        index = {lab: k for k, lab in enumerate(labels)}

        def meet(a: int, b: int) -> int:
            if a == 0 or b == 0:
                return 0
            i, j = pairs[a - 1]
            k, l = pairs[b - 1]
            m, n = E.meet(i, k), F.meet(j, l)
            if m == E.zero or n == F.zero:
                return 0
            return index[(m, n)]

        size = len(labels)
        table = [[meet(a, b) for b in range(size)] for a in range(size)]
        return FiniteSemilattice(
            labels,
            objects,
            table,
            zero=0,
            top=index[(E.top, F.top)],
            name=E.name + " x0 " + F.name,
        )

    @staticmethod
    def is_dense(L: FiniteSemilattice, e: int, f: int) -> bool:
        """!
        \brief e <= f and e meets every nonzero g <= f
        """
        if not L.leq(e, f):
            return False
        return all(L.meet(e, g) != L.zero for g in L.below(f))

    @staticmethod
    def check_axioms(L: FiniteSemilattice) -> PropertyResult:
        """!
        \brief commutativity, associativity, idempotence, zero and top
        """
        res = PropertyResult("semilattice_axioms")
        n = len(L)
        for i in range(n):
            res.record(
                L.meet(i, i) == i
                and L.meet(i, L.zero) == L.zero
                and L.meet(i, L.top) == i,
                lambda: "element " + str(i),
            )
        for i, j in product(range(n), repeat=2):
            res.record(L.meet(i, j) == L.meet(j, i), lambda: str((i, j)))
        for i, j, k in product(range(n), repeat=3):
            res.record(
                L.meet(L.meet(i, j), k) == L.meet(i, L.meet(j, k)),
                lambda: str((i, j, k)),
            )
        return res

    @staticmethod
    def check_phi_isomorphism(
        M: AbstractLcmMonoid, depth: int
    ) -> PropertyResult:
        """!
        \brief φ is a bijection from the nonzero part of E(S_P) onto the
        nonzero part of P_l ×₀ P_r that preserves meets
        """
        res = PropertyResult("phi_isomorphism")
        E = SemilatticeOps.build_semilattice(M, depth)
        left = SemilatticeOps.build_ideal_semilattice(M, depth, Side.LEFT)
        right = SemilatticeOps.build_ideal_semilattice(M, depth, Side.RIGHT)
        prod = SemilatticeOps.product_semilattice(left, right)
        image = {}
        for i in E.nonzero():
            pair = SemilatticeOps.phi_ideal_pairs(E.object(i))
            a = left.index_of(M.key(pair.left))
            b = right.index_of(M.key(pair.right))
            k = prod.index_of((a, b))
            res.record(k is not None, lambda: "φ leaves the product at " + str(E.object(i)))
            image[i] = k
        res.record(
            len(set(image.values())) == len(image) == len(prod) - 1,
            lambda: "φ is not a bijection: "
            + str(len(image))
            + " idempotents, "
            + str(len(prod) - 1)
            + " ideal pairs",
        )
        image[E.zero] = prod.zero
        for i, j in product(range(len(E)), repeat=2):
            res.record(
                image[E.meet(i, j)] == prod.meet(image[i], image[j]),
                lambda: str(E.object(i)) + " ∧ " + str(E.object(j)),
            )
        return res
