"""!
\file operatorops.py The operators J_p, J_p*, e_Y and the matrices of triples
on a truncation of Δ
"""
import logging
from itertools import product
from typing import Dict, Hashable, List

from pylcm.constructible.constructiblef.constructibleops import ConstructibleOps
from pylcm.constructible.ctype.constructibleset import ConstructibleSet
from pylcm.isg.isgf.tripleops import TripleBoolOps, TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mtype.abstractmonoid import Element, Side
from pylcm.operator.otype.deltatruncation import DeltaTruncation
from pylcm.operator.otype.sparseop import SparseOp
from pylcm.propertyresult import PropertyResult

logger = logging.getLogger(__name__)


class OperatorOps:
    """"""

    @staticmethod
    def build_delta(M, n: int) -> DeltaTruncation:
        """!
        \throws ResourceLimitError through the pair enumeration
        """
        return DeltaTruncation(M, n)

    @staticmethod
    def j_matrix(p: Element, T: DeltaTruncation, adjoint: bool = False) -> SparseOp:
        """!
        \brief J_p δ_x^a = δ_{px}^a when px ∈ I_a and 0 otherwise;
        J_p* δ_y^a = δ_x^a when y = px and 0 otherwise

        \code{.py}

        >>> T = DeltaTruncation(FreeMonoid(2), 1)
        >>> OperatorOps.j_matrix("0", T).triplets()
        >>> [(2, 1, 1)]

        \endcode
        """
        M = T.monoid
        triplets = []
        boundary = []
        for col, (a, x) in enumerate(T.basis):
            if adjoint:
                y = M.divide(Side.LEFT, p, x)
            else:
                y = M.mul(p, x)
                if M.divide(Side.RIGHT, y, a) is None:
                    continue
            if y is None:
                continue
            row = T.lookup(a, y)
            if row is None:
                boundary.append(col)
                continue
            triplets.append((row, col, 1))
        if boundary:
            logger.debug(
                "J_%s%s has %d boundary columns",
                M.format_element(p),
                "*" if adjoint else "",
                len(boundary),
            )
        return SparseOp.from_triplets(len(T), triplets, boundary)

    @staticmethod
    def e_matrix(Y: ConstructibleSet, T: DeltaTruncation) -> SparseOp:
        """!
        \brief the diagonal projection onto the basis vectors in Y
        """
        triplets = [
            (i, i, 1)
            for i, pair in enumerate(T.basis)
            if ConstructibleOps.member(pair, Y)
        ]
        return SparseOp.from_triplets(len(T), triplets)

    @staticmethod
    def represent_triple(s: Triple, T: DeltaTruncation) -> SparseOp:
        """!
        \brief J_p J_q* J_r, the zero matrix for the zero
        """
        if s.is_zero():
            return SparseOp.zero(len(T))
        jp = OperatorOps.j_matrix(s.p, T)
        jq = OperatorOps.j_matrix(s.q, T, adjoint=True)
        jr = OperatorOps.j_matrix(s.r, T)
        return jp @ jq @ jr

    @staticmethod
    def expectation(s: Triple, T: DeltaTruncation) -> SparseOp:
        """!
        \brief E_Δ(J_p J_q* J_r) is J_p J_q* J_r when q = rp and 0 otherwise
        """
        if s.is_zero() or not TripleBoolOps.is_idempotent(s):
            return SparseOp.zero(len(T))
        return OperatorOps.represent_triple(s, T)

    @staticmethod
    def blocks(T: DeltaTruncation) -> Dict[Hashable, List[int]]:
        """!
        \brief basis indices grouped by the first coordinate a; every J_p,
        J_p* and e_Y preserves the blocks
        """
        out: Dict[Hashable, List[int]] = {}
        for i, pair in enumerate(T.basis):
            out.setdefault(T.monoid.key(pair.a), []).append(i)
        return out


class OperatorAnalyzer:
    """!
    \brief entrywise checks of the operator relations on a truncation
    """

    @staticmethod
    def check_homomorphism(
        triples: List[Triple], T: DeltaTruncation
    ) -> PropertyResult:
        """!
        \brief represent(s) represent(t) = represent(st)
        """
        res = PropertyResult("represent_homomorphism")
        reps = {s: OperatorOps.represent_triple(s, T) for s in triples}
        for s, t in product(triples, repeat=2):
            st = OperatorOps.represent_triple(TripleOps.product(s, t), T)
            res.record(
                (reps[s] @ reps[t]).equals_on(st),
                lambda: str(s) + " " + str(t),
            )
        return res

    @staticmethod
    def check_adjoint(triples: List[Triple], T: DeltaTruncation) -> PropertyResult:
        """!
        \brief represent(s*) is the transpose of represent(s); operators
        with boundary columns are skipped
        """
        res = PropertyResult("represent_adjoint")
        for s in triples:
            m = OperatorOps.represent_triple(s, T)
            ms = OperatorOps.represent_triple(TripleOps.star(s), T)
            if m.boundary or ms.boundary:
                res.skip()
                continue
            res.record(ms.equals(m.transpose()), lambda: str(s))
        return res

    @staticmethod
    def check_generators(elements: List[Element], T: DeltaTruncation) -> PropertyResult:
        """!
        \brief J_p J_q = J_pq, J_1 = 1 and J_p J_p* J_p = J_p
        """
        res = PropertyResult("generator_relations")
        M = T.monoid
        j = {M.key(p): OperatorOps.j_matrix(p, T) for p in elements}
        js = {M.key(p): OperatorOps.j_matrix(p, T, adjoint=True) for p in elements}
        res.record(
            OperatorOps.j_matrix(M.identity(), T).equals(SparseOp.identity(len(T))),
            "J_1 is not the identity",
        )
        for p in elements:
            jp = j[M.key(p)]
            res.record(
                (jp @ js[M.key(p)] @ jp).equals_on(jp),
                lambda: "J_" + M.format_element(p) + " is not a partial isometry",
            )
        for p, q in product(elements, repeat=2):
            pq = OperatorOps.j_matrix(M.mul(p, q), T)
            res.record(
                (j[M.key(p)] @ j[M.key(q)]).equals_on(pq),
                lambda: "J_" + M.format_element(p) + " J_" + M.format_element(q),
            )
        return res

    @staticmethod
    def check_projections(
        sets: List[ConstructibleSet], elements: List[Element], T: DeltaTruncation
    ) -> PropertyResult:
        """!
        \brief e_Δ = 1, e_∅ = 0, e_Y e_Z = e_{Y∩Z},
        J_r e_Y J_r* = e_{Y_r}, J_r* e_Y J_r = e_{Y^r}, and
        e_{Δ_p ∩ Δ^q} = represent([p, qp, q])
        """
        res = PropertyResult("projection_relations")
        M = T.monoid
        dim = len(T)
        res.record(
            OperatorOps.e_matrix(ConstructibleSet.full(M), T).equals(SparseOp.identity(dim)),
            "e_Δ is not the identity",
        )
        res.record(
            OperatorOps.e_matrix(ConstructibleSet.empty(M), T).equals(SparseOp.zero(dim)),
            "e_∅ is not zero",
        )
        e = {Y: OperatorOps.e_matrix(Y, T) for Y in sets}
        for Y, Z in product(sets, repeat=2):
            meet = OperatorOps.e_matrix(ConstructibleOps.intersect(Y, Z), T)
            res.record((e[Y] @ e[Z]).equals(meet), lambda: str(Y) + " ∩ " + str(Z))
        for Y in sets:
            idem = OperatorOps.represent_triple(TripleOps.from_constructible(Y), T)
            res.record(idem.equals_on(e[Y]), lambda: str(Y) + " as an idempotent")
        for Y, r in product(sets, elements):
            jr = OperatorOps.j_matrix(r, T)
            jrs = OperatorOps.j_matrix(r, T, adjoint=True)
            pushed = OperatorOps.e_matrix(ConstructibleOps.push(Y, r), T)
            pulled = OperatorOps.e_matrix(ConstructibleOps.pull(Y, r), T)
            res.record(
                (jr @ e[Y] @ jrs).equals_on(pushed),
                lambda: "push " + str(Y) + " by " + M.format_element(r),
            )
            res.record(
                (jrs @ e[Y] @ jr).equals_on(pulled),
                lambda: "pull " + str(Y) + " by " + M.format_element(r),
            )
        return res

    @staticmethod
    def check_expectation(triples: List[Triple], T: DeltaTruncation) -> PropertyResult:
        """!
        \brief the q = rp rule agrees with diagonal extraction
        """
        res = PropertyResult("expectation")
        for s in triples:
            m = OperatorOps.represent_triple(s, T)
            res.record(
                m.diagonal_part().equals_on(OperatorOps.expectation(s, T)),
                lambda: str(s),
            )
        return res
