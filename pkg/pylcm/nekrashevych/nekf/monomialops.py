"""!
\file monomialops.py Products of monomials and the representation π of
S_{X*⋈G}
"""
import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Hashable, List, Sequence, Tuple

import numpy as np

from pylcm.action.atype.abstractaction import AbstractSelfSimilarAction
from pylcm.errors import UnsupportedInstance
from pylcm.isg.isgf.tripleops import TripleBoolOps, TripleOps
from pylcm.isg.isgtype.triple import Triple
from pylcm.monoid.mmodel.zappaszep import ZappaSzepMonoid
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid
from pylcm.nekrashevych.nekf.ssrewriter import SSRewriter
from pylcm.nekrashevych.ntype.monomial import Monomial
from pylcm.propertyresult import PropertyResult
from pylcm.spectra.spectraf.filterops import FilterBoolOps, FilterOps
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps

logger = logging.getLogger(__name__)


def require_zappa_szep(M: AbstractLcmMonoid) -> ZappaSzepMonoid:
    """!
    \throws UnsupportedInstance unless M is a Zappa–Szép product
    """
    if not isinstance(M, ZappaSzepMonoid):
        raise UnsupportedInstance(
            "monomials need a self-similar action, " + M.name() + " has none"
        )
    return M


class MonomialOps:
    """"""

    @staticmethod
    def mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
        """!
        \brief (α, g, β)(γ, h, δ)

        - γ = βω gives (α(g·ω), g|_ω h, δ)
        - β = γμ gives (α, g (h⁻¹|_μ)⁻¹, δ(h⁻¹·μ))
        - otherwise 0

        \code{.py}

        >>> A = Odometer()
        >>> MonomialOps.mono_mul(Monomial(A, "", 1, "1"), Monomial(A, "1", 0, ""))
        >>> (ε,1,ε)

        \endcode
        """
        A = m1.action
        if m1.is_zero() or m2.is_zero():
            return Monomial.zero(A)
        alpha, g, beta = m1.alpha, m1.g, m1.beta
        gamma, h, delta = m2.alpha, m2.g, m2.beta
        if gamma.startswith(beta):
            omega = gamma[len(beta) :]
            moved, restriction = A.act_restrict(g, omega)
            return Monomial(A, alpha + moved, A.compose(restriction, h), delta)
        if beta.startswith(gamma):
            mu = beta[len(gamma) :]
            moved, restriction = A.act_restrict(A.inverse(h), mu)
            return Monomial(A, alpha, A.compose(g, A.inverse(restriction)), delta + moved)
        return Monomial.zero(A)

    @staticmethod
    def mono_star(m: Monomial) -> Monomial:
        """!
        \brief (α, g, β)* = (β, g⁻¹, α)
        """
        if m.is_zero():
            return m
        return Monomial(m.action, m.beta, m.action.inverse(m.g), m.alpha)

    @staticmethod
    def pi_represent(s: Triple) -> Monomial:
        """!
        \brief π[(α,g), (β,h), (γ,k)] = s_α u_g u_h* s_β* s_γ u_k

        \throws UnsupportedInstance outside Zappa–Szép products
        """
        M = require_zappa_szep(s.monoid)
        A = M.action
        if s.is_zero():
            return Monomial.zero(A)
        p, q, r = s.p, s.q, s.r
        left = Monomial(A, p.word, A.compose(p.g, A.inverse(q.g)), q.word)
        right = Monomial(A, r.word, r.g, "")
        return MonomialOps.mono_mul(left, right)

    @staticmethod
    def enumerate_monomials(
        A: AbstractSelfSimilarAction, depth: int, bound: int
    ) -> List[Monomial]:
        """!
        \brief (α, g, β) with |α|, |β| <= depth and g in the group ball of
        radius bound
        """
        words = [""]
        for n in range(1, depth + 1):
            words += ["".join(w) for w in product(A.alphabet(), repeat=n)]
        group = A.enumerate_group(bound)
        return [Monomial(A, a, g, b) for a in words for g in group for b in words]


class MonomialTable:
    """!
    \brief monomials interned as integer ids with a memoized product

    Two ids are equal iff the monomials are, so product tables can be
    compared as integer arrays.
    """

    def __init__(self, monos: List[Monomial]):
        self.items: List[Monomial] = []
        self.ids: Dict[Hashable, int] = {}
        self.cache: Dict[Tuple[int, int], int] = {}
        self.base = [self.intern(m) for m in monos]

    def intern(self, m: Monomial) -> int:
        k = m.key()
        i = self.ids.get(k)
        if i is None:
            i = len(self.items)
            self.ids[k] = i
            self.items.append(m)
        return i

    def mul(self, i: int, j: int) -> int:
        """"""
        k = (i, j)
        if k not in self.cache:
            self.cache[k] = self.intern(
                MonomialOps.mono_mul(self.items[i], self.items[j])
            )
        return self.cache[k]

    def table(self, rows: Sequence[int], cols: Sequence[int]) -> np.ndarray:
        """!
        \brief the ids of rows[i]·cols[j]
        """
        return np.array(
            [[self.mul(i, j) for j in cols] for i in rows], dtype=np.int64
        ).reshape(len(rows), len(cols))


class MonomialAnalyzer:
    """"""

    @staticmethod
    def check_associativity(monos: List[Monomial]) -> PropertyResult:
        """!
        \brief (ab)c = a(bc) for all a, b, c in monos

        Products are tabulated once; for each a the two sides are compared
        as arrays indexed by (b, c).
        """
        res = PropertyResult("monomial_associativity")
        if not monos:
            return res
        T = MonomialTable(monos)
        base = T.base
        AB = T.table(base, base)
        inner = np.unique(AB)
        position = np.searchsorted(inner, AB)
        # R[k, c] = inner[k]·c and Lt[a, k] = a·inner[k]
        R = T.table(inner.tolist(), base)
        Lt = T.table(base, inner.tolist())
        for ia in range(len(base)):
            lhs = R[position[ia]]
            rhs = Lt[ia][position]
            bad = np.argwhere(lhs != rhs)
            res.tally(lhs.size - len(bad))
            for ib, ic in bad:
                a, b, c = monos[ia], monos[ib], monos[ic]
                res.record(False, str(a) + " " + str(b) + " " + str(c))
        return res

    @staticmethod
    def check_rewriter(monos: List[Monomial]) -> PropertyResult:
        """!
        \brief mono_mul and mono_star agree with letter by letter rewriting
        """
        res = PropertyResult("monomial_rewriting")
        if not monos:
            return res
        rw = SSRewriter(monos[0].action)
        star = MonomialOps.mono_star
        for a, b in product(monos, repeat=2):
            ab = MonomialOps.mono_mul(a, b)
            res.record(ab == rw.multiply(a, b), lambda: str(a) + " " + str(b))
            res.record(
                star(ab) == MonomialOps.mono_mul(star(b), star(a)),
                lambda: "(" + str(a) + " " + str(b) + ")*",
            )
        for a in monos:
            res.record(star(star(a)) == a, lambda: str(a))
        return res

    @staticmethod
    def check_pi(triples: List[Triple]) -> PropertyResult:
        """!
        \brief π(st) = π(s)π(t), π(s*) = π(s)*, π is constant on classes,
        and π[p, qp, q] = (α, e, α) for p = (α, g)
        """
        res = PropertyResult("pi_representation")
        pi = {s: MonomialOps.pi_represent(s) for s in triples}
        for s, t in product(triples, repeat=2):
            res.record(
                MonomialOps.pi_represent(TripleOps.product(s, t))
                == MonomialOps.mono_mul(pi[s], pi[t]),
                lambda: str(s) + " " + str(t),
            )
        for s in triples:
            res.record(
                MonomialOps.pi_represent(TripleOps.star(s))
                == MonomialOps.mono_star(pi[s]),
                lambda: str(s) + "*",
            )
            c = TripleOps.canonical_form(s)
            res.record(
                TripleBoolOps.triple_eq(s, c) and MonomialOps.pi_represent(c) == pi[s],
                lambda: str(s) + " against " + str(c),
            )
            if TripleBoolOps.is_idempotent(s):
                A = pi[s].action
                res.record(
                    pi[s] == Monomial(A, s.p.word, A.identity(), s.p.word),
                    lambda: "idempotent " + str(s),
                )
        return res


@dataclass
class TightnessReport:
    """!
    \brief π(f_β) = 1 for short β and the letter cover of the top

    certified is only set for recurrent actions with both parts passing.
    """

    instance: str
    depth: int
    f_identity: PropertyResult
    cover: bool
    cover_certified: bool
    recurrent: bool
    certified: bool = False
    notes: List[str] = field(default_factory=list)

    def to_dict(self) -> Dict:
        return {
            "instance": self.instance,
            "depth": self.depth,
            "f_identity": self.f_identity.to_dict(),
            "cover": self.cover,
            "cover_certified": self.cover_certified,
            "recurrent": self.recurrent,
            "certified": self.certified,
            "notes": list(self.notes),
        }


def tightness_report(M: AbstractLcmMonoid, depth: int) -> TightnessReport:
    """!
    \brief check π(f_β) = 1 for f_β = [1, (β,e), (β,e)], |β| <= depth,
    and that {e_x : x ∈ X} covers the top of E(S_P) at depth 1
    """
    Z = require_zappa_szep(M)
    A = Z.action
    f_res = PropertyResult("f_beta_identity")
    one = Monomial.identity(A)
    words = [""]
    for n in range(1, depth + 1):
        words += ["".join(w) for w in product(A.alphabet(), repeat=n)]
    for beta in words:
        b = Z.element(beta)
        f = Triple(Z, Z.identity(), b, b)
        f_res.record(MonomialOps.pi_represent(f) == one, lambda: "f_" + beta)
    L = SemilatticeOps.build_semilattice(Z, 1)
    letters = FilterOps.letter_cover(Z, L)
    cover = FilterBoolOps.is_cover(letters.elements, L.top, L)
    report = TightnessReport(
        instance=Z.name(),
        depth=depth,
        f_identity=f_res,
        cover=cover,
        cover_certified=letters.certified,
        recurrent=A.is_recurrent(),
    )
    if not report.recurrent:
        report.notes.append("action is not recurrent; tightness is not certified")
    elif not letters.certified:
        report.notes.append("equality is decided up to a depth; cover is not certified")
    report.certified = (
        report.recurrent and f_res.ok and cover and letters.certified
    )
    logger.info("tightness of %s: certified=%s", Z.name(), report.certified)
    return report
