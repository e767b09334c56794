"""Exact realizations of the finite crystallographic root systems A-G.

Simple roots live in epsilon-coordinates (one block of coordinates per
product component), and the invariant bilinear form is a weighted dot
product, weighted per block so that every short root has squared length 2.
All arithmetic is over Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q
from typing import Iterable, Sequence

from .diagram import Diagram, DiagramError, build_diagram, parse_type
from .linalg import (
    Mat,
    Vec,
    mat_identity,
    mat_mul,
    mat_vec,
    qvec,
    solve_in_span,
    vsub,
    vscale,
    wdot,
)

WEYL_ORDER_EXCEPTIONAL = {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
                          ("F", 4): 1152, ("G", 2): 12}


def _component_roots(letter: str, rank: int) -> tuple[list[Vec], Vec]:
    """Simple roots and per-coordinate form weights for one component,
    with vectors in the component's own coordinate block."""
    one, two = Q(1), Q(2)

    def e(i: int, dim: int) -> list[Q]:
        v = [Q(0)] * dim
        v[i] = one
        return v

    if letter == "A":
        dim = rank + 1
        simples = [qvec(vsub(tuple(e(i, dim)), tuple(e(i + 1, dim)))) for i in range(rank)]
        return simples, (one,) * dim
    if letter in ("B", "C", "D"):
        dim = rank
        simples = [qvec(vsub(tuple(e(i, dim)), tuple(e(i + 1, dim)))) for i in range(rank - 1)]
        if letter == "B":
            simples.append(qvec(e(rank - 1, dim)))
            return simples, (two,) * dim
        if letter == "C":
            simples.append(vscale(2, qvec(e(rank - 1, dim))))
            return simples, (one,) * dim
        last = [Q(0)] * dim
        last[rank - 2] = one
        last[rank - 1] = one
        simples.append(tuple(last))
        return simples, (one,) * dim
    if letter == "E":
        dim = 8
        half = Q(1, 2)
        a1 = tuple([half, -half, -half, -half, -half, -half, -half, half])
        a2 = qvec([1, 1, 0, 0, 0, 0, 0, 0])
        chain = [qvec(vsub(tuple(e(i + 1, dim)), tuple(e(i, dim)))) for i in range(6)]
        simples = [a1, a2] + chain[: rank - 2]
        return simples, (one,) * dim
    if letter == "F":
        dim = 4
        simples = [
            qvec([0, 1, -1, 0]),
            qvec([0, 0, 1, -1]),
            qvec([0, 0, 0, 1]),
            qvec([Q(1, 2), Q(-1, 2), Q(-1, 2), Q(-1, 2)]),
        ]
        return simples, (two,) * dim
    if letter == "G":
        simples = [qvec([1, -1, 0]), qvec([-2, 1, 1])]
        return simples, (one,) * 3
    raise DiagramError(f"unknown type letter {letter}")


@dataclass(frozen=True)
class WeylElement:
    """An exact orthogonal matrix on the ambient space plus a word in
    simple reflections recording how it was built."""

    matrix: Mat
    word: tuple[int, ...]

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(mat_mul(self.matrix, other.matrix), self.word + other.word)

    def apply(self, v: Vec) -> Vec:
        return mat_vec(self.matrix, v)


class RootSystem:
    """A realized root system, possibly a product of simple components."""

    def __init__(self, type_string: str):
        self.components = parse_type(type_string)
        self.type_string = "x".join(f"{l}{r}" for l, r in self.components)
        self.diagram: Diagram = build_diagram(self.components)
        self.rank = self.diagram.n

        simples: list[Vec] = []
        weights: list[Q] = []
        offsets = []
        dim = 0
        for letter, rank in self.components:
            block, w = _component_roots(letter, rank)
            offsets.append(dim)
            for s in block:
                simples.append(tuple([Q(0)] * dim) + s)
            weights.extend(w)
            dim += len(w)
        self.dim = dim
        self.form_weights: Vec = tuple(weights)
        self.simple_roots: tuple[Vec, ...] = tuple(
            s + (Q(0),) * (dim - len(s)) for s in simples
        )
        self.node_names: tuple[str, ...] = tuple(
            f"{chr(ord('a') + ci)}{i + 1}"
            for ci, (_, rank) in enumerate(self.components)
            for i in range(rank)
        )
        self.roots: frozenset[Vec] = self._reflection_closure()
        self._coeff_cache: dict[Vec, tuple[Q, ...]] = {}

    # -- form and pairings -------------------------------------------------

    def form(self, x: Vec, y: Vec) -> Q:
        return wdot(self.form_weights, x, y)

    def pairing(self, chi: Vec, alpha: Vec) -> Q:
        """<chi, alpha-check> = 2 (chi, alpha) / (alpha, alpha)."""
        aa = self.form(alpha, alpha)
        if aa == 0:
            raise ValueError("pairing against the zero vector")
        return 2 * self.form(chi, alpha) / aa

    def coroot(self, alpha: Vec) -> Vec:
        aa = self.form(alpha, alpha)
        if aa == 0:
            raise ValueError("zero vector has no coroot")
        return vscale(Q(2) / aa, alpha)

    def reflect(self, chi: Vec, alpha: Vec) -> Vec:
        return vsub(chi, vscale(self.pairing(chi, alpha), alpha))

    # -- roots -------------------------------------------------------------

    def _reflection_closure(self) -> frozenset[Vec]:
        roots = set(self.simple_roots) | {vscale(-1, s) for s in self.simple_roots}
        frontier = list(roots)
        while frontier:
            nxt = []
            for r in frontier:
                for s in self.simple_roots:
                    img = self.reflect(r, s)
                    if img not in roots:
                        roots.add(img)
                        nxt.append(img)
            frontier = nxt
        return frozenset(roots)

    def root_coeffs(self, root: Vec) -> tuple[Q, ...]:
        """Coordinates of a vector in the simple-root basis."""
        if root in self._coeff_cache:
            return self._coeff_cache[root]
        coords = solve_in_span(self.simple_roots, root)
        if coords is None:
            raise ValueError("vector outside the root lattice span")
        self._coeff_cache[root] = coords
        return coords

    def root_from_coeffs(self, coeffs: Sequence) -> Vec:
        if len(coeffs) != self.rank:
            raise ValueError(f"expected {self.rank} coefficients, got {len(coeffs)}")
        v = (Q(0),) * self.dim
        for c, s in zip(coeffs, self.simple_roots):
            if c:
                v = tuple(a + Q(c) * b for a, b in zip(v, s))
        return v

    def is_root(self, v: Vec) -> bool:
        return v in self.roots

    # -- Weyl group --------------------------------------------------------

    def reflection(self, alpha: Vec) -> WeylElement:
        if alpha not in self.roots:
            raise ValueError("reflection requires a root of the system")
        cols = [self.reflect(e, alpha) for e in _std_basis(self.dim)]
        matrix = tuple(tuple(cols[j][i] for j in range(self.dim)) for i in range(self.dim))
        try:
            word = (self.simple_roots.index(alpha),)
        except ValueError:
            word = ()
        return WeylElement(matrix, word)

    def simple_reflections(self) -> list[WeylElement]:
        out = []
        for i, s in enumerate(self.simple_roots):
            cols = [self.reflect(e, s) for e in _std_basis(self.dim)]
            matrix = tuple(tuple(cols[j][i2] for j in range(self.dim)) for i2 in range(self.dim))
            out.append(WeylElement(matrix, (i,)))
        return out

    def weyl_order(self) -> int:
        order = 1
        for letter, rank in self.components:
            if letter == "A":
                o = _factorial(rank + 1)
            elif letter in ("B", "C"):
                o = 2**rank * _factorial(rank)
            elif letter == "D":
                o = 2 ** (rank - 1) * _factorial(rank)
            else:
                o = WEYL_ORDER_EXCEPTIONAL[(letter, rank)]
            order *= o
        return order

    def weyl_group(self, max_elements: int = 100_000) -> list[WeylElement]:
        """Full Weyl group by closure over simple reflections.

        Raises if the group order formula exceeds max_elements before
        starting (the E7/E8 guard).
        """
        bound = self.weyl_order()
        if bound > max_elements:
            raise ValueError(
                f"Weyl group of {self.type_string} has order {bound} > budget {max_elements}"
            )
        gens = self.simple_reflections()
        ident = WeylElement(mat_identity(self.dim), ())
        seen = {ident.matrix: ident}
        frontier = [ident]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    h = g * w
                    if h.matrix not in seen:
                        seen[h.matrix] = h
                        nxt.append(h)
            frontier = nxt
        return list(seen.values())

    # -- diagram helpers ---------------------------------------------------

    def node_index(self, name: str) -> int:
        try:
            return self.node_names.index(name)
        except ValueError:
            raise ValueError(f"unknown node {name!r}; valid: {', '.join(self.node_names)}")

    def subdiagram_type(self, nodes: Iterable[int]) -> list[tuple[str, int, tuple[int, ...]]]:
        """Classify the induced subdiagram on the given nodes.

        Returns (letter, rank, concrete nodes in canonical order) per
        connected component.
        """
        nodes = sorted(set(nodes))
        for i in nodes:
            if not 0 <= i < self.rank:
                raise ValueError(f"node index {i} out of range")
        sub = self.diagram.induced(nodes)
        out = []
        for letter, rank, order in sub.classify():
            out.append((letter, rank, tuple(nodes[i] for i in order)))
        return out


def _std_basis(dim: int) -> list[Vec]:
    return [tuple(Q(1) if j == i else Q(0) for j in range(dim)) for i in range(dim)]


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def build_root_system(spec: str | Diagram) -> RootSystem:
    if isinstance(spec, str):
        return RootSystem(spec)
    # reconstruct a type string from an abstract diagram
    parts = []
    for letter, rank, _ in spec.classify():
        parts.append(f"{letter}{rank}")
    return RootSystem("x".join(parts))
