"""!
\file sparseop.py Exact integer operators on a Δ truncation
"""
from typing import FrozenSet, Iterable, List, Optional, Tuple

import numpy as np
import scipy.sparse as sp


class SparseOp:
    """!
    \brief square int64 csr matrix together with its boundary columns

    A column is boundary when the operator it shadows sends the basis
    vector outside the truncation, so the column is not the restriction of
    the true operator. Products propagate boundary columns; comparisons
    that must hold exactly skip them.
    """

    def __init__(self, matrix: sp.spmatrix, boundary: Iterable[int] = ()):
        rows, cols = matrix.shape
        if rows != cols:
            raise ValueError("operators are square, got " + str(matrix.shape))
        self.matrix: sp.csr_matrix = sp.csr_matrix(matrix, dtype=np.int64)
        self.matrix.eliminate_zeros()
        self.boundary: FrozenSet[int] = frozenset(boundary)

    @classmethod
    def from_triplets(
        cls,
        dim: int,
        triplets: Iterable[Tuple[int, int, int]],
        boundary: Iterable[int] = (),
    ) -> "SparseOp":
        """"""
        entries = list(triplets)
        rows = [t[0] for t in entries]
        cols = [t[1] for t in entries]
        vals = [t[2] for t in entries]
        m = sp.coo_matrix((vals, (rows, cols)), shape=(dim, dim), dtype=np.int64)
        return cls(m, boundary)

    @classmethod
    def identity(cls, dim: int) -> "SparseOp":
        return cls(sp.identity(dim, dtype=np.int64, format="csr"))

    @classmethod
    def zero(cls, dim: int) -> "SparseOp":
        return cls(sp.csr_matrix((dim, dim), dtype=np.int64))

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    def nnz(self) -> int:
        return self.matrix.nnz

    def triplets(self) -> List[Tuple[int, int, int]]:
        """!
        \brief nonzero entries as (row, col, value) sorted by row then col
        """
        coo = self.matrix.tocoo()
        out = [
            (int(r), int(c), int(v))
            for r, c, v in zip(coo.row, coo.col, coo.data)
            if v != 0
        ]
        return sorted(out)

    def to_dense(self) -> np.ndarray:
        return self.matrix.toarray()

    def transpose(self) -> "SparseOp":
        """!
        \brief the adjoint of a 0/1 matrix

        The boundary is carried over unchanged, so the result is only the
        adjoint of the shadowed operator when there is no boundary.
        """
        return SparseOp(self.matrix.transpose(), self.boundary)

    def diagonal_part(self) -> "SparseOp":
        """!
        \brief the entrywise diagonal extraction
        """
        diag = self.matrix.diagonal()
        return SparseOp(sp.diags(diag, format="csr", dtype=np.int64), self.boundary)

    def __matmul__(self, other: "SparseOp") -> "SparseOp":
        """!
        \brief self · other; a column of the product is boundary when it is
        boundary for other or other maps it into a boundary column of self
        """
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        boundary = set(other.boundary)
        if self.boundary:
            coo = other.matrix.tocoo()
            for r, c in zip(coo.row, coo.col):
                if int(r) in self.boundary:
                    boundary.add(int(c))
        return SparseOp(self.matrix @ other.matrix, boundary)

    def equals(self, other: "SparseOp") -> bool:
        """!
        \brief entrywise equality of the matrices, ignoring boundaries
        """
        if self.dim != other.dim:
            return False
        return (self.matrix != other.matrix).nnz == 0

    def equals_on(
        self, other: "SparseOp", columns: Optional[Iterable[int]] = None
    ) -> bool:
        """!
        \brief equality of the given columns, by default every column that
        is boundary for neither operator
        """
        if self.dim != other.dim:
            return False
        if columns is None:
            skip = self.boundary | other.boundary
            columns = [c for c in range(self.dim) if c not in skip]
        cols = list(columns)
        if not cols:
            return True
        a = self.matrix[:, cols]
        b = other.matrix[:, cols]
        return (a != b).nnz == 0

    def __str__(self) -> str:
        return (
            "SparseOp(dim="
            + str(self.dim)
            + ", nnz="
            + str(self.nnz())
            + ", boundary="
            + str(len(self.boundary))
            + ")"
        )

    def __repr__(self) -> str:
        return str(self)
