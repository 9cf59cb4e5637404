"""Dense matrices of polynomials with optional row and column labels."""

from __future__ import annotations

from .polynomial import evaluate
from .ring import GradedPolyRing, Polynomial


class PolyMatrix:
    """Immutable ``nrows x ncols`` matrix over a polynomial ring."""

    __slots__ = ("ring", "rows", "nrows", "ncols", "row_labels", "col_labels")

    def __init__(self, ring: GradedPolyRing, rows, ncols: int | None = None, row_labels=None, col_labels=None):
        rows = tuple(tuple(ring(e) if not isinstance(e, Polynomial) else e for e in r) for r in rows)
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix rows")
        self.ring = ring
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols
        self.row_labels = tuple(row_labels) if row_labels is not None else None
        self.col_labels = tuple(col_labels) if col_labels is not None else None
        if self.row_labels is not None and len(self.row_labels) != self.nrows:
            raise ValueError("row label count does not match")
        if self.col_labels is not None and len(self.col_labels) != self.ncols:
            raise ValueError("column label count does not match")

    @classmethod
    def zeros(cls, ring, nrows, ncols):
        return cls(ring, [[ring.zero] * ncols for _ in range(nrows)], ncols)

    @classmethod
    def identity(cls, ring, n):
        return cls(ring, [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)], n)

    @classmethod
    def parse(cls, ring, rows):
        return cls(ring, [[ring.parse(e) if isinstance(e, str) else e for e in r] for r in rows])

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def column(self, j):
        return [r[j] for r in self.rows]

    def columns(self):
        return [self.column(j) for j in range(self.ncols)]

    def with_labels(self, row_labels=None, col_labels=None):
        return PolyMatrix(self.ring, self.rows, self.ncols, row_labels, col_labels)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.shape == other.shape and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def is_zero(self) -> bool:
        return all(e.is_zero for r in self.rows for e in r)

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        ring = self.ring
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = ring.zero
                for k, a in enumerate(r):
                    if a:
                        b = other.rows[k][j]
                        if b:
                            acc = acc + a * b
                row.append(acc)
            out.append(row)
        return PolyMatrix(ring, out, other.ncols, self.row_labels, other.col_labels)

    def __neg__(self):
        return PolyMatrix(self.ring, [[-e for e in r] for r in self.rows], self.ncols, self.row_labels, self.col_labels)

    def __add__(self, other):
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.ring, [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)], self.ncols)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "PolyMatrix":
        return PolyMatrix(self.ring, [[e * c for e in r] for r in self.rows], self.ncols, self.row_labels, self.col_labels)

    def transpose(self) -> "PolyMatrix":
        cols = [[self.rows[i][j] for i in range(self.nrows)] for j in range(self.ncols)]
        return PolyMatrix(self.ring, cols, self.nrows, self.col_labels, self.row_labels)

    T = property(transpose)

    def submatrix(self, rows, cols) -> "PolyMatrix":
        rows, cols = list(rows), list(cols)
        rl = [self.row_labels[i] for i in rows] if self.row_labels else None
        cl = [self.col_labels[j] for j in cols] if self.col_labels else None
        return PolyMatrix(self.ring, [[self.rows[i][j] for j in cols] for i in rows], len(cols), rl, cl)

    def map(self, fn) -> "PolyMatrix":
        rows = [[fn(e) for e in r] for r in self.rows]
        ring = rows[0][0].ring if rows and rows[0] else self.ring
        return PolyMatrix(ring, rows, self.ncols, self.row_labels, self.col_labels)

    def to_ring(self, ring) -> "PolyMatrix":
        return PolyMatrix(ring, [[e.to_ring(ring) for e in r] for r in self.rows], self.ncols, self.row_labels, self.col_labels)

    def evaluate(self, point: dict) -> list[list]:
        return [[evaluate(e, point) for e in r] for r in self.rows]

    def rank_at(self, point: dict) -> int:
        return field_rank(self.evaluate(point), self.ring.field)

    def to_strings(self) -> list[list[str]]:
        return [[str(e) for e in r] for r in self.rows]

    def __str__(self):
        cells = self.to_strings()
        if not cells:
            return f"[{self.nrows} x {self.ncols} matrix]"
        width = max((len(c) for r in cells for c in r), default=1)
        return "\n".join("[ " + "  ".join(c.rjust(width) for c in r) + " ]" for r in cells)

    def __repr__(self):
        return f"PolyMatrix({self.to_strings()!r})"


def hstack(*blocks: PolyMatrix) -> PolyMatrix:
    blocks = [b for b in blocks if b.ncols]
    if not blocks:
        raise ValueError("nothing to stack")
    n = blocks[0].nrows
    if any(b.nrows != n for b in blocks):
        raise ValueError("row counts differ")
    rows = [sum((list(b.rows[i]) for b in blocks), []) for i in range(n)]
    return PolyMatrix(blocks[0].ring, rows, sum(b.ncols for b in blocks))


def vstack(*blocks: PolyMatrix) -> PolyMatrix:
    blocks = [b for b in blocks if b.nrows]
    if not blocks:
        raise ValueError("nothing to stack")
    m = blocks[0].ncols
    if any(b.ncols != m for b in blocks):
        raise ValueError("column counts differ")
    return PolyMatrix(blocks[0].ring, [r for b in blocks for r in b.rows], m)


def block(grid) -> PolyMatrix:
    """Assemble a matrix from a 2D list of blocks with compatible shapes."""
    ring = grid[0][0].ring
    heights = [row[0].nrows for row in grid]
    widths = [b.ncols for b in grid[0]]
    rows = []
    for bi, brow in enumerate(grid):
        for k in range(heights[bi]):
            r = []
            for bj, b in enumerate(brow):
                if b.nrows != heights[bi] or b.ncols != widths[bj]:
                    raise ValueError("incompatible block shapes")
                r.extend(b.rows[k])
            rows.append(r)
    return PolyMatrix(ring, rows, sum(widths))


def field_rank(rows: list[list], field) -> int:
    """Rank of a matrix with entries in ``field`` by Gaussian elimination."""
    m = [list(r) for r in rows]
    p = field.characteristic
    rank = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.inv(m[rank][c])
        for i in range(len(m)):
            if i != rank and m[i][c]:
                f = m[i][c] * inv
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
                if p:
                    m[i] = [a % p for a in m[i]]
        rank += 1
    return rank
