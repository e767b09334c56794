"""Dynkin diagrams: parsing, classification, and embedding search.

A diagram is stored structurally: a symmetric bond-multiplicity matrix plus
the squared length of each node's simple root (normalized so the short roots
of every connected component have squared length 2).  Arrow directions are
implied by the lengths, so isomorphisms only need to preserve multiplicities
and per-component length ratios.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterator, Sequence

VALID_LETTERS = "ABCDEFG"

# rank constraints per family; D3=A3 and C2=B2 are accepted as aliases
RANK_RANGE = {
    "A": (1, None),
    "B": (2, None),
    "C": (2, None),
    "D": (3, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}


class DiagramError(ValueError):
    pass


def parse_type(s: str) -> list[tuple[str, int]]:
    """Parse a compact type string like "A3", "B2xG2", "A1xA1"."""
    parts = s.strip().split("x")
    out = []
    for part in parts:
        m = re.fullmatch(r"([A-Ga-g])(\d+)", part.strip())
        if not m:
            raise DiagramError(f"malformed type token {part!r} in {s!r}")
        letter = m.group(1).upper()
        rank = int(m.group(2))
        lo, hi = RANK_RANGE[letter]
        if rank < lo or (hi is not None and rank > hi):
            raise DiagramError(f"rank {rank} out of range for type {letter}")
        out.append((letter, rank))
    if not out:
        raise DiagramError("empty type string")
    return out


@dataclass(frozen=True)
class Diagram:
    """Abstract Dynkin diagram on nodes 0..n-1."""

    mult: tuple[tuple[int, ...], ...]  # symmetric bond multiplicities, diag 0
    len2: tuple[Q, ...]                # squared lengths, short = 2 per component

    @property
    def n(self) -> int:
        return len(self.len2)

    def adjacent(self, i: int, j: int) -> bool:
        return self.mult[i][j] > 0

    def neighbors(self, i: int) -> list[int]:
        return [j for j in range(self.n) if self.mult[i][j] > 0]

    def components(self) -> list[tuple[int, ...]]:
        seen: set[int] = set()
        comps = []
        for start in range(self.n):
            if start in seen:
                continue
            stack, comp = [start], []
            seen.add(start)
            while stack:
                v = stack.pop()
                comp.append(v)
                for w in self.neighbors(v):
                    if w not in seen:
                        seen.add(w)
                        stack.append(w)
            comps.append(tuple(sorted(comp)))
        return comps

    def induced(self, nodes: Sequence[int]) -> "Diagram":
        nodes = list(nodes)
        mult = tuple(
            tuple(self.mult[i][j] for j in nodes) for i in nodes
        )
        return Diagram(mult, tuple(self.len2[i] for i in nodes))

    def embeddings(self, target: "Diagram") -> Iterator[tuple[int, ...]]:
        """Injective maps m: self -> target preserving bond multiplicities
        exactly (including non-adjacency) and lengths up to one positive
        ratio per connected component of self.

        Yields tuples t with t[i] = image of node i.
        """
        comps = self.components()
        comp_of = {}
        order: list[int] = []
        for ci, comp in enumerate(comps):
            # BFS order inside each component so every node after the first
            # has an already-placed neighbor (prunes hard)
            placed = [comp[0]]
            rest = set(comp[1:])
            while rest:
                nxt = next(v for v in sorted(rest) if any(self.adjacent(v, u) for u in placed))
                placed.append(nxt)
                rest.remove(nxt)
            order.extend(placed)
            for v in comp:
                comp_of[v] = ci

        assign: dict[int, int] = {}
        used: set[int] = set()
        ratio: dict[int, Q] = {}

        def backtrack(k: int) -> Iterator[tuple[int, ...]]:
            if k == len(order):
                yield tuple(assign[i] for i in range(self.n))
                return
            v = order[k]
            ci = comp_of[v]
            for cand in range(target.n):
                if cand in used:
                    continue
                r = target.len2[cand] / self.len2[v]
                if ci in ratio:
                    if ratio[ci] != r:
                        continue
                ok = True
                for u, img in assign.items():
                    if self.mult[u][v] != target.mult[img][cand]:
                        ok = False
                        break
                if not ok:
                    continue
                assign[v] = cand
                used.add(cand)
                fresh = ci not in ratio
                if fresh:
                    ratio[ci] = r
                yield from backtrack(k + 1)
                del assign[v]
                used.remove(cand)
                if fresh:
                    del ratio[ci]

        yield from backtrack(0)

    def classify(self) -> list[tuple[str, int, tuple[int, ...]]]:
        """Classify each connected component.

        Returns (letter, rank, nodes in canonical order) per component,
        sorted by smallest node.  B2 is the canonical name for the B2=C2
        diagram, A3 for A3=D3.
        """
        return [_classify_component(self, comp) for comp in self.components()]


def _classify_component(d: Diagram, comp: tuple[int, ...]) -> tuple[str, int, tuple[int, ...]]:
    k = len(comp)
    if k == 1:
        return ("A", 1, comp)
    deg = {v: sum(1 for u in comp if d.adjacent(u, v)) for v in comp}
    edges = [(u, v) for i, u in enumerate(comp) for v in comp[i + 1:] if d.adjacent(u, v)]
    triple = [(u, v) for u, v in edges if d.mult[u][v] == 3]
    double = [(u, v) for u, v in edges if d.mult[u][v] == 2]

    if triple:
        if k != 2 or double:
            raise DiagramError("triple bond only allowed in a G2 component")
        u, v = triple[0]
        short, long_ = (u, v) if d.len2[u] < d.len2[v] else (v, u)
        return ("G", 2, (short, long_))

    def chain_order() -> list[int]:
        ends = [v for v in comp if deg[v] == 1]
        if len(ends) != 2 or any(deg[v] > 2 for v in comp):
            raise DiagramError("component is not a chain")
        cur, prev = min(ends), None
        out = [cur]
        while len(out) < k:
            nxt = next(w for w in comp if d.adjacent(cur, w) and w != prev)
            out.append(nxt)
            prev, cur = cur, nxt
        return out

    if double:
        if len(double) != 1:
            raise DiagramError("more than one double bond in a component")
        chain = chain_order()
        u, v = double[0]
        iu, iv = sorted((chain.index(u), chain.index(v)))
        if k == 4 and (iu, iv) == (1, 2):
            # F4: orient with the long pair first
            if d.len2[chain[0]] < d.len2[chain[-1]]:
                chain.reverse()
            return ("F", 4, tuple(chain))
        if iv != k - 1 and iu != 0:
            raise DiagramError("double bond must sit at a chain end (or be F4)")
        if iu == 0 and k > 2:
            chain.reverse()
        # now the double bond joins chain[-2] and chain[-1]
        if k == 2:
            long_, short = (chain[0], chain[1]) if d.len2[chain[0]] > d.len2[chain[1]] else (chain[1], chain[0])
            return ("B", 2, (long_, short))
        if d.len2[chain[-1]] < d.len2[chain[-2]]:
            return ("B", k, tuple(chain))
        return ("C", k, tuple(chain))

    # simply laced
    branch = [v for v in comp if deg[v] > 2]
    if not branch:
        return ("A", k, tuple(chain_order()))
    if len(branch) > 1 or deg[branch[0]] != 3:
        raise DiagramError("unsupported branching shape")
    c = branch[0]
    arms: list[list[int]] = []
    for start in d.neighbors(c):
        if start not in comp:
            continue
        arm = [start]
        prev, cur = c, start
        while deg[cur] == 2:
            nxt = next(w for w in comp if d.adjacent(cur, w) and w != prev)
            arm.append(nxt)
            prev, cur = cur, nxt
        arms.append(arm)
    arms.sort(key=lambda a: (len(a), a[0]))
    la, lb, lc = (len(a) for a in arms)
    if la == 1 and lb == 1:
        # D_k: long arm from its far end, then center, then the two tips
        main = list(reversed(arms[2])) + [c]
        tips = sorted([arms[0][0], arms[1][0]])
        return ("D", k, tuple(main + tips))
    if (la, lb) == (1, 2) and lc in (2, 3, 4) and k in (6, 7, 8):
        # E_k canonical order: far end of the 2-arm, the 1-arm tip,
        # near node of the 2-arm, center, then the long arm outward
        e_order = [arms[1][1], arms[0][0], arms[1][0], c] + arms[2]
        return ("E", k, tuple(e_order))
    raise DiagramError(f"unrecognized simply-laced branching with arms {(la, lb, lc)}")


def build_diagram(components: Sequence[tuple[str, int]]) -> Diagram:
    """Abstract diagram of a product type, nodes in canonical order."""
    len2: list[Q] = []
    total = sum(r for _, r in components)
    mult = [[0] * total for _ in range(total)]
    off = 0
    for letter, rank in components:
        m, l2 = _component_data(letter, rank)
        for i in range(rank):
            for j in range(rank):
                mult[off + i][off + j] = m[i][j]
        len2.extend(l2)
        off += rank
    return Diagram(tuple(tuple(row) for row in mult), tuple(len2))


def _component_data(letter: str, rank: int) -> tuple[list[list[int]], list[Q]]:
    m = [[0] * rank for _ in range(rank)]

    def bond(i: int, j: int, k: int = 1) -> None:
        m[i][j] = m[j][i] = k

    two = Q(2)
    four = Q(4)
    if letter == "A":
        for i in range(rank - 1):
            bond(i, i + 1)
        return m, [two] * rank
    if letter == "B":
        for i in range(rank - 1):
            bond(i, i + 1)
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 2
        return m, [four] * (rank - 1) + [two]
    if letter == "C":
        for i in range(rank - 1):
            bond(i, i + 1)
        m[rank - 2][rank - 1] = m[rank - 1][rank - 2] = 2
        return m, [two] * (rank - 1) + [four]
    if letter == "D":
        for i in range(rank - 2):
            bond(i, i + 1)
        bond(rank - 3, rank - 1)
        return m, [two] * rank
    if letter == "E":
        # chain 1-3-4-5-...-rank with 2 hanging off 4 (1-based labels)
        chain = [0, 2, 3, 4, 5, 6, 7][: rank - 1]
        for a, b in zip(chain, chain[1:]):
            bond(a, b)
        bond(1, 3)
        return m, [two] * rank
    if letter == "F":
        bond(0, 1)
        bond(1, 2, 2)
        bond(2, 3)
        return m, [four, four, two, two]
    if letter == "G":
        bond(0, 1, 3)
        return m, [two, Q(6)]
    raise DiagramError(f"unknown type letter {letter}")
