"""Free finitely generated algebras, built as closures of truth vectors.

An element of the free ``n``-generated algebra is represented by its truth
vector: the tuple of values the corresponding term takes at every point of
the assignment grid ``C^n``, where ``C`` is a finite chain large enough to
be generic for ``n`` generators (size ``2n+3`` with a negation fixpoint,
``2n+2`` without).  Two terms are logically equivalent exactly when their
truth vectors coincide, so deduplicating vectors yields one canonical
element per equivalence class.

The build is a breadth-first fixed-point closure of the seed set
{bottom, top, projections} under the four binary operations.  Element ids
are assigned in discovery order, which is deterministic: rounds combine
the elements known at the start of the round, pairs are scanned in
lexicographic id order, and for each pair the operations are tried as
meet, join, fusion, implication.  Every element records the pair and
operation that first produced it, so a defining formula can be
reconstructed for any id.
"""

from __future__ import annotations

import itertools
from enum import Enum
from typing import Mapping, Sequence

import numpy as np

from . import formula as fm
from .chain import ChainValue, NMChain, eval_chain, residuum_block, tnorm_block

DEFAULT_ELEMENT_CAP = 500_000

_SLAB = 2048

_OP_TAGS = ("meet", "join", "tnorm", "imp")


class Variant(str, Enum):
    """Which equational class the free algebra lives in."""

    NM = "nm"
    NM_MINUS = "nm-"


def generic_chain_size(n: int, variant: Variant) -> int:
    """Size of the evaluation chain that is generic for ``n`` generators.

    ``2n+3`` leaves room for n generic values, their negations, both
    constants and the fixpoint; dropping the fixpoint gives ``2n+2``.
    """
    if n < 0:
        raise ValueError(f"generator count must be >= 0, got {n}")
    return 2 * n + 3 if variant is Variant.NM else 2 * n + 2


class ElementCapExceeded(RuntimeError):
    """The closure grew past the configured element cap."""

    def __init__(self, attained: int, cap: int):
        self.attained = attained
        self.cap = cap
        super().__init__(
            f"closure reached {attained} elements with more pending (cap {cap})"
        )


def truth_vector(n: int, variant: Variant, f: fm.Formula) -> tuple[int, ...]:
    """Evaluate ``f`` at every point of the generic grid for ``n`` generators.

    This is the canonical representative of the equivalence class of ``f``
    and needs no closure, so it stays cheap even where the full free
    algebra is far too large to build.
    """
    out_of_range = sorted(v for v in fm.variables(f) if v > n)
    if out_of_range:
        raise ValueError(
            f"variable x{out_of_range[0]} out of range for {n} generator(s)"
        )
    k = generic_chain_size(n, variant)
    chain = NMChain(k)
    values = []
    for point in itertools.product(range(k), repeat=n):
        env = {i + 1: ChainValue(point[i], k) for i in range(n)}
        values.append(eval_chain(f, chain, env).index)
    return tuple(values)


def is_tautology(n: int, variant: Variant, f: fm.Formula) -> bool:
    """True iff ``f`` evaluates to top under every generic grid assignment."""
    top = generic_chain_size(n, variant) - 1
    return all(v == top for v in truth_vector(n, variant, f))


def proves(n: int, variant: Variant, phi: fm.Formula, psi: fm.Formula) -> bool:
    """Local deduction: phi proves psi iff phi^2 -> psi is a tautology."""
    return is_tautology(n, variant, fm.Implies(fm.Square(phi), psi))


class FreeAlgebra:
    """A closed, deduplicated and annotated algebra of truth vectors.

    Elements are referred to by their integer id (position in discovery
    order).  The bottom element always has id 0 and the top id 1; the
    projections follow, then everything the closure discovered.  All
    structure (order, covers, irreducibility and idempotency flags) is
    derived from the vectors and cached lazily; instances are immutable
    after construction and safe to share.
    """

    def __init__(
        self,
        n: int,
        variant: Variant,
        vectors: np.ndarray,
        provenance: tuple[tuple, ...] | None,
    ):
        self.n = n
        self.variant = variant
        self.chain = NMChain(generic_chain_size(n, variant))
        self.grid: tuple[tuple[int, ...], ...] = tuple(
            itertools.product(range(self.chain.size), repeat=n)
        )
        vectors = np.ascontiguousarray(vectors, dtype=np.uint8)
        vectors.flags.writeable = False
        self.vectors = vectors
        self.provenance = provenance
        self.bottom_id = 0
        self.top_id = 1
        self._index = {vectors[i].tobytes(): i for i in range(len(vectors))}
        if len(self._index) != len(vectors):
            raise ValueError("duplicate truth vectors")
        self._top_index = self.chain.size - 1
        self._leq: np.ndarray | None = None
        self._cover: np.ndarray | None = None
        self._heights: tuple[int, ...] | None = None
        self._ji: tuple[int, ...] | None = None
        self._idempotent: tuple[int, ...] | None = None
        self._min_idem_ji: tuple[int, ...] | None = None
        self._formulas: list[fm.Formula | None] | None = None

    # -- size and raw vectors ------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.vectors)

    def __len__(self) -> int:
        return self.size

    def element_ids(self) -> range:
        return range(self.size)

    def vector(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) for v in self.vectors[x])

    def id_of_vector(self, vector: Sequence[int]) -> int:
        key = np.asarray(vector, dtype=np.uint8).tobytes()
        try:
            return self._index[key]
        except KeyError:
            raise KeyError(f"vector {tuple(vector)} is not an element") from None

    # -- operations ----------------------------------------------------------

    def _lookup(self, row: np.ndarray) -> int:
        return self._index[row.astype(np.uint8).tobytes()]

    def meet(self, x: int, y: int) -> int:
        return self._lookup(np.minimum(self.vectors[x], self.vectors[y]))

    def join(self, x: int, y: int) -> int:
        return self._lookup(np.maximum(self.vectors[x], self.vectors[y]))

    def tnorm(self, x: int, y: int) -> int:
        return self._lookup(tnorm_block(self._top_index, self.vectors[x], self.vectors[y]))

    def residuum(self, x: int, y: int) -> int:
        return self._lookup(
            residuum_block(self._top_index, self.vectors[x], self.vectors[y])
        )

    def neg(self, x: int) -> int:
        return self._lookup(self._top_index - self.vectors[x])

    def iff(self, x: int, y: int) -> int:
        return self.tnorm(self.residuum(x, y), self.residuum(y, x))

    # -- order structure -----------------------------------------------------

    @property
    def leq_matrix(self) -> np.ndarray:
        """Boolean matrix of the pointwise order: leq[x, y] iff x <= y."""
        if self._leq is None:
            v = self.vectors
            leq = (v[:, None, :] <= v[None, :, :]).all(axis=2)
            leq.flags.writeable = False
            self._leq = leq
        return self._leq

    def leq(self, x: int, y: int) -> bool:
        return bool(self.leq_matrix[x, y])

    @property
    def cover_matrix(self) -> np.ndarray:
        """cover[x, y] iff y covers x: x < y with nothing strictly between."""
        if self._cover is None:
            lt = self.leq_matrix & ~np.eye(self.size, dtype=bool)
            between = (lt.astype(np.uint32) @ lt.astype(np.uint32)) > 0
            cover = lt & ~between
            cover.flags.writeable = False
            self._cover = cover
        return self._cover

    def covers(self) -> list[tuple[int, int]]:
        """All cover pairs (child, parent), sorted."""
        xs, ys = np.nonzero(self.cover_matrix)
        return sorted((int(x), int(y)) for x, y in zip(xs, ys))

    def lower_covers(self, x: int) -> list[int]:
        return [int(c) for c in np.nonzero(self.cover_matrix[:, x])[0]]

    @property
    def heights(self) -> tuple[int, ...]:
        """Length of the longest chain from bottom up to each element."""
        if self._heights is None:
            below_counts = self.leq_matrix.sum(axis=0)
            heights = [0] * self.size
            for x in sorted(self.element_ids(), key=lambda i: int(below_counts[i])):
                lower = self.lower_covers(x)
                heights[x] = 1 + max((heights[c] for c in lower), default=-1)
            self._heights = tuple(heights)
        return self._heights

    # -- annotations ---------------------------------------------------------

    @property
    def join_irreducible_ids(self) -> tuple[int, ...]:
        """Elements with exactly one lower cover (bottom excluded)."""
        if self._ji is None:
            counts = self.cover_matrix.sum(axis=0)
            self._ji = tuple(
                x for x in self.element_ids()
                if x != self.bottom_id and counts[x] == 1
            )
        return self._ji

    def join_irreducibles(self) -> list[int]:
        return list(self.join_irreducible_ids)

    def is_idempotent(self, x: int) -> bool:
        return self._idem_row(x)

    def _idem_row(self, x: int) -> bool:
        row = self.vectors[x]
        return bool(np.array_equal(tnorm_block(self._top_index, row, row), row))

    @property
    def idempotent_ids(self) -> tuple[int, ...]:
        """Elements fixed by fusion with themselves."""
        if self._idempotent is None:
            v = self.vectors
            fused = tnorm_block(self._top_index, v, v)
            flags = (fused == v).all(axis=1)
            self._idempotent = tuple(int(x) for x in np.nonzero(flags)[0])
        return self._idempotent

    @property
    def idempotent_flags(self) -> tuple[bool, ...]:
        idem = set(self.idempotent_ids)
        return tuple(x in idem for x in self.element_ids())

    @property
    def minimal_idempotent_ji_ids(self) -> tuple[int, ...]:
        """Idempotent join-irreducibles with no smaller idempotent join-irreducible."""
        if self._min_idem_ji is None:
            idem_ji = [x for x in self.join_irreducible_ids if self._idem_row(x)]
            leq = self.leq_matrix
            self._min_idem_ji = tuple(
                g for g in idem_ji
                if not any(h != g and leq[h, g] for h in idem_ji)
            )
        return self._min_idem_ji

    def minimal_idempotent_jis(self) -> list[int]:
        return list(self.minimal_idempotent_ji_ids)

    # -- formulas ------------------------------------------------------------

    def element_of(self, f: fm.Formula) -> int:
        """The id of the equivalence class of ``f``.

        The formula is evaluated pointwise over the assignment grid; the
        resulting vector is always present because the algebra is closed.
        """
        return self.id_of_vector(truth_vector(self.n, self.variant, f))

    def representative_formula(self, x: int) -> fm.Formula:
        """A formula whose equivalence class is ``x``.

        Reconstructed from the closure provenance; subterms are shared, so
        the result is DAG-shaped and linear in the number of ancestors.
        Unavailable on imported algebras, which carry no provenance.
        """
        if self.provenance is None:
            raise ValueError("algebra was imported without provenance")
        if self._formulas is None:
            self._formulas = [None] * self.size
        cache = self._formulas
        for i in range(x + 1):
            if cache[i] is not None:
                continue
            record = self.provenance[i]
            tag = record[0]
            if tag == "bot":
                cache[i] = fm.BOT
            elif tag == "top":
                cache[i] = fm.TOP
            elif tag == "var":
                cache[i] = fm.Var(record[1])
            else:
                a, b = cache[record[1]], cache[record[2]]
                node = {
                    "meet": fm.And, "join": fm.Or,
                    "tnorm": fm.Strong, "imp": fm.Implies,
                }[tag]
                cache[i] = node(a, b)
        result = cache[x]
        assert result is not None
        return result

    def is_tautology(self, f: fm.Formula) -> bool:
        """True iff the class of ``f`` is the top element."""
        return self.element_of(f) == self.top_id

    def proves(self, phi: fm.Formula, psi: fm.Formula) -> bool:
        """Local deduction: phi proves psi iff phi^2 -> psi is a tautology."""
        return self.is_tautology(fm.Implies(fm.Square(phi), psi))

    # -- export / import -----------------------------------------------------

    def export(self) -> dict:
        """A JSON-ready description of the algebra and its annotations."""
        return {
            "n": self.n,
            "variant": self.variant.value,
            "chain_size": self.chain.size,
            "grid_order": "lex-by-index",
            "elements": [
                {"id": x, "vector": list(self.vector(x))} for x in self.element_ids()
            ],
            "bottom": self.bottom_id,
            "top": self.top_id,
            "covers": [list(pair) for pair in self.covers()],
            "join_irreducible": sorted(self.join_irreducible_ids),
            "idempotent": sorted(self.idempotent_ids),
        }

    @classmethod
    def from_export(cls, data: Mapping, validate: bool = True) -> "FreeAlgebra":
        """Rebuild an algebra from :meth:`export` output.

        With ``validate`` the stored annotations are recomputed and
        compared; a mismatch raises ``ValueError``.
        """
        variant = Variant(data["variant"])
        n = int(data["n"])
        elements = sorted(data["elements"], key=lambda e: e["id"])
        if [e["id"] for e in elements] != list(range(len(elements))):
            raise ValueError("element ids must be 0..N-1")
        vectors = np.array([e["vector"] for e in elements], dtype=np.uint8)
        algebra = cls(n, variant, vectors, provenance=None)
        if data["chain_size"] != algebra.chain.size:
            raise ValueError("chain size does not match generator count and variant")
        if vectors.shape[1] != len(algebra.grid):
            raise ValueError("vector length does not match the grid")
        if validate:
            if (int(data["bottom"]), int(data["top"])) != (0, 1):
                raise ValueError("bottom and top ids must be 0 and 1")
            if [list(p) for p in algebra.covers()] != [list(p) for p in data["covers"]]:
                raise ValueError("stored covers disagree with the order")
            if sorted(algebra.join_irreducible_ids) != list(data["join_irreducible"]):
                raise ValueError("stored join-irreducible flags disagree")
            if sorted(algebra.idempotent_ids) != list(data["idempotent"]):
                raise ValueError("stored idempotency flags disagree")
        return algebra

    def check_closed(self) -> None:
        """Verify closure: every operation on every pair lands in the algebra."""
        for x in self.element_ids():
            for y in self.element_ids():
                self.meet(x, y)
                self.join(x, y)
                self.tnorm(x, y)
                self.residuum(x, y)


def build(
    n: int, variant: Variant, element_cap: int = DEFAULT_ELEMENT_CAP
) -> FreeAlgebra:
    """Construct the free ``n``-generated algebra of the given variant.

    Runs the breadth-first closure described in the module docstring.  The
    result is identical across runs.  If the closure would exceed
    ``element_cap`` elements, :class:`ElementCapExceeded` is raised naming
    the size attained; growth for three or more generators is explosive,
    so the cap is the intended way to probe it safely.
    """
    if n < 0:
        raise ValueError(f"generator count must be >= 0, got {n}")
    if element_cap <= 0:
        raise ValueError(f"element cap must be positive, got {element_cap}")
    k = generic_chain_size(n, variant)
    top = k - 1
    grid = tuple(itertools.product(range(k), repeat=n))
    width = len(grid)

    rows: list[np.ndarray] = []
    index: dict[bytes, int] = {}
    provenance: list[tuple] = []

    def commit(row: np.ndarray, record: tuple) -> None:
        key = row.tobytes()
        if key in index:
            return
        if len(rows) >= element_cap:
            raise ElementCapExceeded(len(rows) + 1, element_cap)
        index[key] = len(rows)
        rows.append(row.copy())
        provenance.append(record)

    commit(np.zeros(width, dtype=np.uint8), ("bot",))
    commit(np.full(width, top, dtype=np.uint8), ("top",))
    for v in range(1, n + 1):
        projection = np.fromiter((g[v - 1] for g in grid), dtype=np.uint8, count=width)
        commit(projection, ("var", v))

    previous = 0
    while True:
        current = len(rows)
        snapshot = np.vstack(rows)
        for i in range(current):
            a = snapshot[i]
            start = previous if i < previous else 0
            for lo in range(start, current, _SLAB):
                hi = min(lo + _SLAB, current)
                block = snapshot[lo:hi]
                results = (
                    np.minimum(a, block),
                    np.maximum(a, block),
                    tnorm_block(top, a, block),
                    residuum_block(top, a, block),
                )
                for j in range(hi - lo):
                    for op in range(4):
                        commit(results[op][j], (_OP_TAGS[op], i, lo + j))
        if len(rows) == current:
            break
        previous = current

    return FreeAlgebra(n, variant, np.vstack(rows), tuple(provenance))
