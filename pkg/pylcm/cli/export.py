"""!
\file export.py JSON and CSV payloads of the matrix, spectra and groupoid
commands
"""
import csv
import json
import logging
import sys
from typing import Dict, List, Optional, TextIO

from pylcm.cli.expression import Value
from pylcm.constructible.ctype.constructibleset import ConstructibleSet
from pylcm.monoid.mtype.abstractmonoid import AbstractLcmMonoid, Side
from pylcm.operator.operatorf.operatorops import OperatorOps
from pylcm.operator.otype.deltatruncation import DeltaTruncation
from pylcm.operator.otype.sparseop import SparseOp
from pylcm.shift.shiftf.shiftops import ShiftOps, require_free
from pylcm.spectra.spectraf.filterops import FilterOps
from pylcm.spectra.spectraf.semilatticeops import SemilatticeOps
from pylcm.spectra.stype.semilattice import FiniteSemilattice

logger = logging.getLogger(__name__)


def value_matrix(value: Value, T: DeltaTruncation) -> SparseOp:
    """!
    \brief represent(s) for a triple, e_Y for a constructible set
    """
    if isinstance(value, ConstructibleSet):
        return OperatorOps.e_matrix(value, T)
    return OperatorOps.represent_triple(value, T)


def matrix_payload(op: SparseOp, T: DeltaTruncation) -> Dict:
    """!
    \brief {"dim", "basis", "triplets", "boundary"} with triplets as
    [row, column, value]
    """
    return {
        "dim": op.dim,
        "basis": T.labels(),
        "triplets": [list(t) for t in op.triplets()],
        "boundary": sorted(op.boundary),
    }


def write_matrix_csv(op: SparseOp, T: DeltaTruncation, fh: TextIO):
    """!
    \brief dense rows under a header of basis labels
    """
    writer = csv.writer(fh, lineterminator="\n")
    writer.writerow([""] + T.labels())
    dense = op.to_dense()
    for label, row in zip(T.labels(), dense):
        writer.writerow([label] + [int(v) for v in row])


def _ideal_name(M: AbstractLcmMonoid, x, side: Side) -> str:
    if x is None:
        return "∅"
    if side is Side.RIGHT:
        return M.format_element(x) + "P"
    return "P" + M.format_element(x)


def _summary(L: FiniteSemilattice, names: List[str]) -> Dict:
    spectrum = FilterOps.enumerate_filters(L)
    return {
        "elements": [names[i] for i in L.nonzero()],
        "filters": len(spectrum.filters),
        "ultrafilters": len(spectrum.ultrafilters),
        "ultrafilter_generators": sorted(
            names[F.generator()] for F in spectrum.ultrafilters
        ),
    }


def spectra_payload(M: AbstractLcmMonoid, depth: int) -> Dict:
    """!
    \brief filter counts of the right ideal semilattice at the top level,
    with the left ideals, their product and E(S_P) alongside

    \code{.py}

    >>> p = spectra_payload(FreeMonoid(2), 1)
    >>> p["filters"], p["ultrafilters"], p["product"]["filters"]
    >>> (3, 2, 9)

    \endcode
    """
    right = SemilatticeOps.build_ideal_semilattice(M, depth, Side.RIGHT)
    left = SemilatticeOps.build_ideal_semilattice(M, depth, Side.LEFT)
    prod = SemilatticeOps.product_semilattice(left, right)
    E = SemilatticeOps.build_semilattice(M, depth)
    right_names = [_ideal_name(M, right.object(i), Side.RIGHT) for i in range(len(right))]
    left_names = [_ideal_name(M, left.object(i), Side.LEFT) for i in range(len(left))]
    prod_names = []
    for i in range(len(prod)):
        pair = prod.object(i)
        if pair is None:
            prod_names.append("0")
        else:
            prod_names.append("(" + left_names[pair[0]] + ", " + right_names[pair[1]] + ")")
    top = _summary(right, right_names)
    return {
        "instance": M.name(),
        "depth": depth,
        "filters": top["filters"],
        "ultrafilters": top["ultrafilters"],
        "right": top,
        "left": _summary(left, left_names),
        "product": _summary(prod, prod_names),
        "isg": _summary(E, [str(E.object(i)) for i in range(len(E))]),
    }


def germs_payload(
    M: AbstractLcmMonoid, window: int, max_pre: int = 1, max_period: int = 2
) -> Dict:
    """!
    \brief germs [s, x] for slots of length <= window over the enumerated
    points, their Φ-images and the counts on both sides

    \throws UnsupportedInstance unless M is free
    """
    require_free(M)
    points = ShiftOps.enumerate_points(M.alphabet, max_pre, max_period)
    germs = ShiftOps.enumerate_germs(M, window, points)
    images = sorted({ShiftOps.phi_map(g) for g in germs}, key=lambda hp: (hp[1], hp[0]))
    logger.debug("%d germs, %d classes", len(germs), len(images))
    return {
        "instance": M.name(),
        "window": window,
        "germs": [
            {"triple": str(g.s), "point": str(g.point), "h": ShiftOps.cocycle_h(g.s)}
            for g in germs
        ],
        "phi": [{"h": h, "point": str(pt)} for h, pt in images],
        "counts": {
            "points": len(points),
            "germs": len(germs),
            "classes": len(images),
            "pairs": len(points) * (2 * window + 1),
        },
    }


def write_json(payload: Dict, out: Optional[str] = None):
    """!
    \brief stable JSON with sorted keys to out, or stdout
    """
    text = json.dumps(payload, indent=2, sort_keys=True, ensure_ascii=False)
    if out is None:
        sys.stdout.write(text + "\n")
        return
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(text + "\n")
    logger.info("wrote %s", out)
