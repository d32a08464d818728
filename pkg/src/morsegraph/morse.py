"""The Morse predicate for induced subgraphs and cycles.

A vertex set S is Morse when every induced 4-cycle that meets S in a pair
of non-adjacent vertices lies entirely inside S.  Two non-adjacent vertices
of an induced square are always one of its diagonals, and conversely any
non-adjacent pair u, w together with a non-adjacent pair x, y of common
neighbors spans an induced square with diagonals {u, w} and {x, y}.  The
production check therefore never materializes squares: it scans
non-adjacent pairs inside S and inspects their common neighborhoods
directly.  ``morse_oracle`` is a deliberately literal re-implementation
from the enumerated square list, kept as an independent cross-check.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .cycles import (
    CycleWitness,
    as_witness,
    count_morse_cycles_pruned,
    enumerate_induced_squares,
)
from .errors import InvalidParameter
from .graph import Graph, is_clique_mask, iter_bits, vertex_mask


def is_morse_subgraph(g: Graph, s: Iterable[int]) -> bool:
    """True iff the induced subgraph on ``s`` is Morse in ``g``.

    Pairwise form of the definition: for every non-adjacent pair
    ``u, w`` in ``s`` and every non-adjacent pair ``x, y`` of their common
    neighbors, both ``x`` and ``y`` must lie in ``s``.  Sets with no
    non-adjacent pair (cliques, singletons, the empty set) are vacuously
    Morse.  Scans pairs in lexicographic order and exits on the first
    violation.
    """
    smask = vertex_mask(g, s)
    rows = g.rows
    for u in iter_bits(smask):
        others = (smask >> (u + 1)) << (u + 1)
        for w in iter_bits(others & ~rows[u]):
            m = rows[u] & rows[w]
            # Any member outside s must be adjacent to every other member,
            # otherwise it forms a non-adjacent common pair leaving s.
            for x in iter_bits(m & ~smask):
                if m & ~rows[x] != 1 << x:
                    return False
    return True


def is_morse_cycle(g: Graph, c: "CycleWitness | Sequence[int]") -> bool:
    """True iff the induced cycle ``c`` is a Morse subgraph of ``g``.

    For k >= 5 this reduces to: every non-adjacent pair of cycle vertices
    has a common neighborhood that is a clique.  For k = 4 the cycle's own
    diagonals are exempt from each other: the square is Morse iff the only
    non-adjacent pair inside the common neighborhood of either diagonal is
    the other diagonal (equivalently, the square is an isolated vertex of
    the square graph).

    Raises ``InvalidWitness`` when ``c`` is not an induced cycle of ``g``.
    """
    witness = as_witness(g, c)
    v = witness.vertices
    rows = g.rows
    if witness.k == 4:
        (u, w), (x, y) = witness.diagonals()
        for (d0, d1), (e0, e1) in (((u, w), (x, y)), ((x, y), (u, w))):
            m = rows[d0] & rows[d1]
            for a in iter_bits(m):
                non_adjacent = m & ~rows[a] & ~(1 << a)
                if a == e0:
                    expected = 1 << e1
                elif a == e1:
                    expected = 1 << e0
                else:
                    expected = 0
                if non_adjacent != expected:
                    return False
        return True
    k = witness.k
    for i in range(k):
        ri = rows[v[i]]
        for j in range(i + 1, k):
            if (ri >> v[j]) & 1:
                continue
            if not is_clique_mask(g, ri & rows[v[j]]):
                return False
    return True


def morse_oracle(g: Graph, s: Iterable[int]) -> bool:
    """Literal restatement of the Morse condition over all induced squares.

    Enumerates every induced 4-cycle of ``g`` and demands that each one
    whose intersection with ``s`` contains a non-adjacent pair is entirely
    contained in ``s``.  Shares no logic with :func:`is_morse_subgraph`
    beyond the graph primitives; exists to cross-validate it.
    """
    sset = frozenset(s)
    for x in sset:
        g.check_vertex(x)
    rows = g.rows
    for witness, _ in enumerate_induced_squares(g):
        inside = [x for x in witness.vertices if x in sset]
        has_non_adjacent = any(
            not (rows[a] >> b) & 1
            for i, a in enumerate(inside)
            for b in inside[i + 1 :]
        )
        if has_non_adjacent and len(inside) != 4:
            return False
    return True


def count_morse_cycles(g: Graph, k: int, *, budget: int | None = None) -> int:
    """Number of induced k-cycles of ``g`` that are Morse.

    k = 4 filters the enumerated squares; k >= 5 counts through the pruned
    DFS, which visits exactly the cycles all of whose non-adjacent pairs
    survive the clique test -- the same set the definition selects.
    """
    if k < 4:
        raise InvalidParameter(f"Morse cycles have k >= 4, got k={k}")
    if k == 4:
        return sum(
            1 for witness, _ in enumerate_induced_squares(g) if is_morse_cycle(g, witness)
        )
    return count_morse_cycles_pruned(g, k, budget)
