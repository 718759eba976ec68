"""
Incidence configurations.

Covers the abstract (16_6) Kummer configuration, Rosenhain and Göpel tetrads
on the sixteen lines of a quartic del Pezzo surface and in the symplectic
space F_2^4, the Cremona-Richmond (15_3) and the (8_4) diagram of a
Rosenhain pair.

Isomorphism of incidence structures is decided by colour refinement on the
bipartite incidence graph followed by individualisation and backtracking.
The search returns an explicit bijection, which is then checked entry by entry.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import numpy as np

from .errors import VerificationFailure

logger = logging.getLogger(__name__)

POINTS6 = (1, 2, 3, 4, 5, 6)
DUADS = tuple(combinations(POINTS6, 2))
# a partition {ijk|lmn} of {1..6} is named by its triple that avoids 6
TRIPLES = tuple(combinations((1, 2, 3, 4, 5), 3))


def duad_label(duad: Sequence[int]) -> str:
    return "E" + "".join(str(i) for i in sorted(duad))


def triple_label(triple: Sequence[int]) -> str:
    return "E" + "".join(str(i) for i in sorted(triple))


def complement(triple: Sequence[int]) -> Tuple[int, ...]:
    return tuple(i for i in POINTS6 if i not in triple)


KUMMER_A_LABELS = ("E0",) + tuple(duad_label(d) for d in DUADS)
KUMMER_B_LABELS = tuple(f"E{i}" for i in POINTS6) + tuple(triple_label(t) for t in TRIPLES)


@dataclass(frozen=True, eq=False)
class IncidenceStructure:
    """Labelled 0/1 incidence matrix; rows are the A side, columns the B side."""
    a_labels: Tuple[str, ...]
    b_labels: Tuple[str, ...]
    matrix: np.ndarray

    def __post_init__(self):
        matrix = np.array(self.matrix, dtype=np.uint8)
        if matrix.shape != (len(self.a_labels), len(self.b_labels)):
            raise ValueError(f"matrix shape {matrix.shape} does not match labels")
        if np.any(matrix > 1):
            raise ValueError("incidence entries must be 0 or 1")
        matrix.setflags(write=False)
        object.__setattr__(self, "a_labels", tuple(self.a_labels))
        object.__setattr__(self, "b_labels", tuple(self.b_labels))
        object.__setattr__(self, "matrix", matrix)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IncidenceStructure):
            return NotImplemented
        return (self.a_labels == other.a_labels and self.b_labels == other.b_labels
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self) -> int:
        return hash((self.a_labels, self.b_labels, self.matrix.tobytes()))

    @classmethod
    def from_relation(cls, a_labels: Sequence[str], b_labels: Sequence[str], incident) -> "IncidenceStructure":
        matrix = [[1 if incident(a, b) else 0 for b in b_labels] for a in a_labels]
        return cls(tuple(a_labels), tuple(b_labels), np.array(matrix, dtype=np.uint8))

    @property
    def shape(self) -> Tuple[int, int]:
        return self.matrix.shape

    def transpose(self) -> "IncidenceStructure":
        return IncidenceStructure(self.b_labels, self.a_labels, self.matrix.T)

    def row_sums(self) -> np.ndarray:
        return self.matrix.sum(axis=1)

    def col_sums(self) -> np.ndarray:
        return self.matrix.sum(axis=0)

    def incident(self, a: str, b: str) -> bool:
        return bool(self.matrix[self.a_labels.index(a), self.b_labels.index(b)])

    def neighbours_of_a(self, a: str) -> List[str]:
        row = self.matrix[self.a_labels.index(a)]
        return [b for b, bit in zip(self.b_labels, row) if bit]

    def to_text(self) -> str:
        lines = ["A: " + " ".join(self.a_labels), "B: " + " ".join(self.b_labels)]
        lines.extend("".join(str(int(v)) for v in row) for row in self.matrix)
        return "\n".join(lines)

    def signature(self) -> str:
        """Isomorphism invariant: colour-class sizes after refinement, per side."""
        m, n = self.shape
        adj = _adjacency(self.matrix)
        colors = _refine(adj, [0] * m + [1] * n)
        rows = sorted(np.bincount(colors[:m]).tolist())
        cols = sorted(np.bincount(colors[m:]).tolist())
        rows = [c for c in rows if c]
        cols = [c for c in cols if c]
        degrees = f"{sorted(set(self.row_sums().tolist()))}/{sorted(set(self.col_sums().tolist()))}"
        return f"{m}x{n} deg {degrees} cells {rows}|{cols}"


# -- isomorphism search --

def _adjacency(matrix: np.ndarray) -> List[List[int]]:
    m, n = matrix.shape
    adj: List[List[int]] = [[] for _ in range(m + n)]
    for i, j in zip(*np.nonzero(matrix)):
        adj[int(i)].append(m + int(j))
        adj[m + int(j)].append(int(i))
    return adj


def _refine(adj: List[List[int]], colors: List[int]) -> List[int]:
    """Colour refinement until the number of colours is stable."""
    count = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(len(adj))]
        palette = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [palette[s] for s in sigs]
        if len(palette) == count:
            return new
        count = len(palette)
        colors = new


def isomorphism(inc1: IncidenceStructure, inc2: IncidenceStructure) -> Optional[Tuple[List[int], List[int]]]:
    """
    Row and column bijections carrying inc1 onto inc2, or None.

    - Both graphs are refined together as one disjoint union so colour ids are shared.
    - A colour whose class sizes differ between the two halves kills the branch.
    - The first non-singleton class of inc1 is split by pinning one of its
      vertices against each candidate of inc2 in turn.
    """
    if inc1.shape != inc2.shape:
        return None
    m, n = inc1.shape
    size = m + n
    adj1 = _adjacency(inc1.matrix)
    adj2 = _adjacency(inc2.matrix)
    union = adj1 + [[u + size for u in nbrs] for nbrs in adj2]
    start = [0] * m + [1] * n + [0] * m + [1] * n

    def search(colors: List[int]) -> Optional[List[int]]:
        colors = _refine(union, colors)
        cells: Dict[int, Tuple[List[int], List[int]]] = {}
        for v, c in enumerate(colors):
            left, right = cells.setdefault(c, ([], []))
            (left if v < size else right).append(v)
        if any(len(left) != len(right) for left, right in cells.values()):
            return None
        open_cells = [(len(left), c) for c, (left, right) in cells.items() if len(left) > 1]
        if not open_cells:
            mapping = [0] * size
            for left, right in cells.values():
                mapping[left[0]] = right[0] - size
            return mapping
        _, c = min(open_cells)
        left, right = cells[c]
        v = left[0]
        fresh = max(colors) + 1
        for w in right:
            pinned = list(colors)
            pinned[v] = fresh
            pinned[w] = fresh
            found = search(pinned)
            if found is not None:
                return found
        return None

    mapping = search(start)
    if mapping is None:
        return None
    rows = mapping[:m]
    cols = [c - m for c in mapping[m:]]
    if not np.array_equal(inc1.matrix, inc2.matrix[np.ix_(rows, cols)]):
        raise VerificationFailure("isomorphism search produced an invalid bijection")
    return rows, cols


def is_isomorphic(inc1: IncidenceStructure, inc2: IncidenceStructure) -> bool:
    return isomorphism(inc1, inc2) is not None


# -- symmetric configurations --

def is_symmetric_config(inc: IncidenceStructure, n: int) -> bool:
    """Square, with every row and column sum equal to n."""
    m, k = inc.shape
    return m == k and bool(np.all(inc.row_sums() == n)) and bool(np.all(inc.col_sums() == n))


def nondegenerate_16_6(inc: IncidenceStructure) -> bool:
    """Every two B columns share exactly two A rows."""
    cols = inc.matrix.astype(np.int64)
    shared = cols.T @ cols
    off = shared[~np.eye(shared.shape[0], dtype=bool)]
    return bool(np.all(off == 2))


def kummer_incident(a: str, b: str) -> bool:
    """
    Incidence rule of the (16_6) Kummer configuration on 6-point labels.

    - E0 meets every singleton.
    - A duad meets its two singletons.
    - A duad meets a partition when both of its points lie in one triple.
    """
    if a == "E0":
        return len(b) == 2
    duad = set(int(ch) for ch in a[1:])
    if len(b) == 2:
        return int(b[1]) in duad
    triple = set(int(ch) for ch in b[1:])
    return duad <= triple or not duad & triple


def abstract_kummer() -> IncidenceStructure:
    inc = IncidenceStructure.from_relation(KUMMER_A_LABELS, KUMMER_B_LABELS, kummer_incident)
    if not is_symmetric_config(inc, 6) or not nondegenerate_16_6(inc):
        raise VerificationFailure("abstract Kummer configuration is not a non-degenerate (16_6)")
    return inc


def degenerate_16_6() -> IncidenceStructure:
    """
    A (16_6) that is not a Kummer configuration: two disjoint copies of
    K_{8,8} with two perfect matchings removed.
    """
    block = np.ones((8, 8), dtype=np.uint8)
    for i in range(8):
        block[i, i] = 0
        block[i, (i + 1) % 8] = 0
    matrix = np.zeros((16, 16), dtype=np.uint8)
    matrix[:8, :8] = block
    matrix[8:, 8:] = block
    return IncidenceStructure(tuple(f"a{i}" for i in range(16)), tuple(f"b{i}" for i in range(16)), matrix)


# -- lines on the quartic del Pezzo surface --

@dataclass(frozen=True, eq=False)
class DP4LineGraph:
    """The sixteen lines of the blow-up of P^2 in five points and their intersection numbers."""
    labels: Tuple[str, ...]
    classes: np.ndarray
    gram: np.ndarray

    def dot(self, a: str, b: str) -> int:
        return int(self.gram[self.labels.index(a), self.labels.index(b)])

    def independent(self, labels: Sequence[str]) -> bool:
        """Pairwise intersection 0."""
        return all(self.dot(a, b) == 0 for a, b in combinations(labels, 2))


def dp4_line_graph() -> DP4LineGraph:
    """Classes in the basis H, E1..E5 with H^2 = 1 and E_i^2 = -1."""
    form = np.diag([1, -1, -1, -1, -1, -1])
    labels = ["L0"] + [f"L{i}" for i in range(1, 6)] + [f"L{i}{j}" for i, j in combinations(range(1, 6), 2)]
    # L0 = 2H - sum E, L_i = E_i, L_ij = H - E_i - E_j
    classes = [[2, -1, -1, -1, -1, -1]]
    for i in range(1, 6):
        row = [0] * 6
        row[i] = 1
        classes.append(row)
    for i, j in combinations(range(1, 6), 2):
        row = [1, 0, 0, 0, 0, 0]
        row[i] = -1
        row[j] = -1
        classes.append(row)
    classes = np.array(classes, dtype=np.int64)
    gram = classes @ form @ classes.T
    diag = np.diag(gram)
    off = gram[~np.eye(16, dtype=bool)]
    if not np.all(diag == -1) or not np.all((off == 0) | (off == 1)):
        raise VerificationFailure("dP4 line classes have unexpected intersection numbers")
    return DP4LineGraph(tuple(labels), classes, gram)


TetradPair = Tuple[FrozenSet[str], FrozenSet[str]]


def _pair_key(pair: TetradPair) -> Tuple[Tuple[str, ...], Tuple[str, ...]]:
    return tuple(sorted(tuple(sorted(t)) for t in pair))


def rosenhain_enumerate(g: DP4LineGraph) -> List[TetradPair]:
    """
    All unordered pairs of disjoint independent tetrads where every line of
    one tetrad meets exactly three lines of the other.
    """
    tetrads = [frozenset(t) for t in combinations(g.labels, 4) if g.independent(t)]
    found = {}
    for t1, t2 in combinations(tetrads, 2):
        if t1 & t2:
            continue
        if all(sum(g.dot(a, b) for b in t2) == 3 for a in t1) and \
                all(sum(g.dot(a, b) for a in t1) == 3 for b in t2):
            pair = (t1, t2)
            found[_pair_key(pair)] = pair
    pairs = [found[key] for key in sorted(found)]
    logger.debug(f"{len(tetrads)} independent tetrads, {len(pairs)} Rosenhain pairs")
    return pairs


def _L(*idx: int) -> str:
    return "L" + "".join(str(i) for i in sorted(idx))


def rosenhain_printed_families() -> Dict[str, List[TetradPair]]:
    """
    The two printed families of pairs plus the reading of the second one that
    consists of independent tetrads.
    """
    five = (1, 2, 3, 4, 5)
    first = []
    for i, j, k in combinations(five, 3):
        l, m = [x for x in five if x not in (i, j, k)]
        first.append((frozenset({"L0", _L(i, j), _L(i, k), _L(j, k)}),
                      frozenset({_L(i), _L(j), _L(k), _L(l, m)})))
    second_printed = {}
    second_corrected = {}
    for i in five:
        for m in five:
            if m == i:
                continue
            j, k, l = [x for x in five if x not in (i, m)]
            printed = (frozenset({_L(i), _L(i, j), _L(i, k), _L(i, l)}),
                       frozenset({_L(m), _L(j, m), _L(k, m), _L(l, m)}))
            corrected = (frozenset({_L(m), _L(i, j), _L(i, k), _L(i, l)}),
                         frozenset({_L(i), _L(j, m), _L(k, m), _L(l, m)}))
            second_printed[_pair_key(printed)] = printed
            second_corrected[_pair_key(corrected)] = corrected
    return {
        "first": first,
        "second_printed": [second_printed[k] for k in sorted(second_printed)],
        "second_corrected": [second_corrected[k] for k in sorted(second_corrected)],
    }


def rosenhain_family_report(g: DP4LineGraph, pairs: Sequence[TetradPair]) -> Dict[str, Dict[str, int]]:
    """Per printed family: how many pairs it lists and how many of them are among `pairs`."""
    found = {_pair_key(p) for p in pairs}
    report = {}
    for name, family in rosenhain_printed_families().items():
        report[name] = {
            "listed": len(family),
            "found": sum(1 for p in family if _pair_key(p) in found),
            "independent": sum(1 for t1, t2 in family if g.independent(t1) and g.independent(t2)),
        }
    return report


def rosenhain_union(g: DP4LineGraph, pair: TetradPair) -> IncidenceStructure:
    """Node of line L lies on the trope of line L' iff L != L' and L.L' = 0."""
    labels = sorted(pair[0]) + sorted(pair[1])
    return IncidenceStructure.from_relation(
        labels, labels, lambda a, b: a != b and g.dot(a, b) == 0)


def goepel_enumerate(g: DP4LineGraph) -> List[FrozenSet[str]]:
    """Tetrads {L_i, L_j, L_kl, L_km} with {i, j} disjoint from {k, l, m}."""
    five = (1, 2, 3, 4, 5)
    tetrads = set()
    for i, j in combinations(five, 2):
        rest = [x for x in five if x not in (i, j)]
        for k in rest:
            l, m = [x for x in rest if x != k]
            tetrad = frozenset({_L(i), _L(j), _L(k, l), _L(k, m)})
            if not g.independent(tetrad):
                raise VerificationFailure(f"Göpel tetrad {sorted(tetrad)} has meeting lines")
            tetrads.add(tetrad)
    return sorted(tetrads, key=sorted)


# -- symplectic F_2^4 --

@dataclass(frozen=True, eq=False)
class SymplecticF2_4:
    """F_2^4 with <u, v> = u1 v3 + u3 v1 + u2 v4 + u4 v2."""
    vectors: np.ndarray
    form: np.ndarray

    def pairing(self, u: np.ndarray, v: np.ndarray) -> int:
        return int(u @ self.form @ v) % 2


def symplectic_f2_4() -> SymplecticF2_4:
    vectors = np.array([[(x >> b) & 1 for b in range(4)] for x in range(16)], dtype=np.int64)
    form = np.zeros((4, 4), dtype=np.int64)
    form[0, 2] = form[2, 0] = form[1, 3] = form[3, 1] = 1
    return SymplecticF2_4(vectors, form)


@dataclass
class SymplecticCounts:
    planes: int
    isotropic: int
    non_isotropic: int
    isotropic_cosets: int
    non_isotropic_cosets: int


def symplectic_counts(s: SymplecticF2_4) -> SymplecticCounts:
    """Classify 2-dimensional subspaces and count their translates."""
    vecs = [tuple(v) for v in s.vectors]
    zero = (0, 0, 0, 0)

    def add(u, v):
        return tuple((a + b) % 2 for a, b in zip(u, v))

    planes = set()
    for u, v in combinations([v for v in vecs if v != zero], 2):
        planes.add(frozenset({zero, u, v, add(u, v)}))
    isotropic = []
    non_isotropic = []
    for plane in planes:
        u, v = [w for w in sorted(plane) if w != zero][:2]
        if s.pairing(np.array(u), np.array(v)) == 0:
            isotropic.append(plane)
        else:
            non_isotropic.append(plane)

    def cosets(group):
        return {frozenset(add(x, p) for p in plane) for plane in group for x in vecs}

    return SymplecticCounts(
        planes=len(planes),
        isotropic=len(isotropic),
        non_isotropic=len(non_isotropic),
        isotropic_cosets=len(cosets(isotropic)),
        non_isotropic_cosets=len(cosets(non_isotropic)),
    )


# -- Cremona-Richmond and the (8_4) diagram --

def synthemes() -> List[Tuple[Tuple[int, int], ...]]:
    """Partitions of {1..6} into three duads."""
    result = []
    for d1 in (d for d in DUADS if 1 in d):
        rest = [x for x in POINTS6 if x not in d1]
        first = rest[0]
        for partner in rest[1:]:
            d2 = (first, partner)
            d3 = tuple(x for x in rest if x not in d2)
            result.append((d1, d2, d3))
    return result


def cremona_richmond() -> IncidenceStructure:
    duads = ["".join(map(str, d)) for d in DUADS]
    lines = synthemes()
    labels = ["|".join("".join(map(str, d)) for d in s) for s in lines]
    members = [{"".join(map(str, d)) for d in s} for s in lines]
    inc = IncidenceStructure.from_relation(duads, labels, lambda a, b: a in members[labels.index(b)])
    if not is_symmetric_config(inc, 3):
        raise VerificationFailure("duads versus synthemes is not a (15_3)")
    shared = inc.matrix.astype(np.int64) @ inc.matrix.T.astype(np.int64)
    if np.any(shared[~np.eye(15, dtype=bool)] > 1):
        raise VerificationFailure("two duads share two synthemes")
    return inc


def diagram_8_4() -> IncidenceStructure:
    """
    Nodes and tropes in two columns of four rows each.

    A node in row i lies on the trope in row i of the other side and on the
    three tropes of its own side in the other rows.
    """
    nodes = [f"n{side}{row}" for side in (0, 1) for row in range(4)]
    tropes = [f"t{side}{row}" for side in (0, 1) for row in range(4)]

    def incident(a: str, b: str) -> bool:
        sa, ra = int(a[1]), int(a[2])
        sb, rb = int(b[1]), int(b[2])
        if sa == sb:
            return ra != rb
        return ra == rb

    inc = IncidenceStructure.from_relation(nodes, tropes, incident)
    if not is_symmetric_config(inc, 4):
        raise VerificationFailure("diagram is not an (8_4)")
    return inc
