"""The classification catalogue of rank-one patterns and matching against it.

Each catalogue row is an abstract support diagram with a coefficient rule, a
set of filled ("black") vertices, a characteristic condition, and opaque
group-theoretic display labels.  Rank-parameterized families are stored
symbolically and instantiated per query.  A candidate (support, coefficient
vector) is accepted exactly when some row instantiates onto the support via
a diagram isomorphism that reproduces the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction as Q

from .diagram import Diagram, build_diagram
from .rootsys import RootSystem


class TableError(ValueError):
    pass


@dataclass(frozen=True)
class TableRow:
    key: str
    family: str               # support family: A, B, C, D, F, G, or A1xA1
    min_rank: int
    max_rank: int | None      # None = unbounded family
    chars: str                # "all" | "p!=2" | "p=2" | "p=3"
    doubled: bool             # the x2 variant of a base row
    frobenius: bool
    label_g: str
    label_h: str
    coeff_rule: str           # display-only summary of the coefficient rule
    blacks_rule: str          # display-only summary of the filled vertices

    def visible_at(self, p: int) -> bool:
        if self.chars == "all":
            return True
        if self.chars == "p!=2":
            return p != 2
        if self.chars == "p=2":
            return p == 2
        if self.chars == "p=3":
            return p == 3
        raise TableError(f"bad chars field {self.chars!r}")


@dataclass(frozen=True)
class PatternInstance:
    row: TableRow
    rank: int
    q: int
    diagram: Diagram
    coeffs: tuple[int, ...]
    blacks: frozenset[int]


@dataclass(frozen=True)
class PatternMatch:
    row_key: str
    q: int
    embedding: tuple[int, ...]       # pattern node i -> concrete node
    blacks: frozenset[int]           # concrete black-dot set


def _row(key, family, lo, hi, chars, label_g, label_h, coeff_rule, blacks_rule,
         doubled=False, frobenius=False) -> TableRow:
    return TableRow(key, family, lo, hi, chars, doubled, frobenius,
                    label_g, label_h, coeff_rule, blacks_rule)


ROWS: tuple[TableRow, ...] = (
    _row("a1", "A", 1, 1, "all", "PGL(2)", "<s_a1>.GL(1)", "1", "-"),
    _row("a1-doubled", "A", 1, 1, "p!=2", "PGL(2)", "<s_a1>.GL(1) [x2 variant]",
         "2", "-", doubled=True),
    _row("a-chain", "A", 2, None, "all", "PGL(n)", "GL(n-1)",
         "1,1,...,1,1", "interior"),
    _row("a3-121", "A", 3, 3, "all", "PGL(4)", "PSp(4)", "1,2,1", "a1 a3"),
    _row("b-chain", "B", 2, None, "all", "SO(2n+1)", "<s_an>.SO(2n)",
         "1,1,...,1,1", "all but a1"),
    _row("b-chain-doubled", "B", 2, None, "p!=2", "SO(2n+1)",
         "<s_an>.SO(2n) [x2 variant]", "2,2,...,2,2", "all but a1", doubled=True),
    _row("b-chain-open", "B", 2, None, "all", "SO(2n+1)", "P_n(SO(2n))",
         "1,1,...,1,1", "interior"),
    _row("b3-123", "B", 3, 3, "all", "SO(7)", "G2", "1,2,3", "a1 a2"),
    _row("c-1221", "C", 3, None, "all", "PSp(2n)", "Sp(2).Sp(2n-2)",
         "1,2,...,2,1", "a1 and a3..an"),
    _row("c-1221-open", "C", 3, None, "all", "PSp(2n)", "P_1(Sp(2)).Sp(2n-2)",
         "1,2,...,2,1", "a3..an"),
    _row("d-2211", "D", 4, None, "all", "PSO(2n)", "SO(2n-1)",
         "2,...,2,1,1", "all but a1"),
    _row("f4-1232", "F", 4, 4, "all", "F4", "Spin(9)", "1,2,3,2", "a1 a2 a3"),
    _row("g2-21", "G", 2, 2, "all", "G2", "<s_a1>.SL(3)", "2,1", "a2"),
    _row("g2-21-doubled", "G", 2, 2, "p!=2", "G2", "<s_a1>.SL(3) [x2 variant]",
         "4,2", "a2", doubled=True),
    _row("g2-11", "G", 2, 2, "all", "G2",
         "GL(2)_long.U(2a1+a2)U(3a1+a2)U(3a1+2a2)", "1,1", "-"),
    _row("a1xa1-q", "A1xA1", 2, 2, "all", "PGL(2)xPGL(2)", "(id x Fr_q)PGL(2)",
         "q,1", "-", frobenius=True),
    # p = 2 only
    _row("b-122", "B", 3, None, "p=2", "SO(2n+1)", "SO(3)xSO(2n-1)",
         "1,2,...,2,2", "a1 and a3..an"),
    _row("b-122-open", "B", 3, None, "p=2", "SO(2n+1)", "P_1(SO(3))xSO(2n-1)",
         "1,2,...,2,2", "a3..an"),
    _row("c-221", "C", 2, None, "p=2", "PSp(2n)", "<s_an>.PSO(2n)",
         "2,2,...,2,1", "all but a1"),
    _row("c-221-open", "C", 2, None, "p=2", "PSp(2n)", "P_n(PSO(2n))",
         "2,2,...,2,1", "interior"),
    _row("c3-243", "C", 3, 3, "p=2", "PSp(6)", "G2", "2,4,3", "a1 a2"),
    _row("f4-2342", "F", 4, 4, "p=2", "F4", "Sp(8)", "2,3,4,2", "a2 a3 a4"),
    # p = 3 only
    _row("g2-32", "G", 2, 2, "p=3", "G2", "<s_a2>.SL(3)_short", "3,2", "a1"),
    _row("g2-32-doubled", "G", 2, 2, "p=3", "G2", "<s_a2>.SL(3)_short [x2 variant]",
         "6,4", "a1", doubled=True),
    _row("g2-31", "G", 2, 2, "p=3", "G2",
         "GL(2)_short.U(a1+a2)U(2a1+a2)U(3a1+2a2)", "3,1", "-"),
)


def is_char_exponent(p: int) -> bool:
    if p == 1:
        return True
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def table_rows(p: int) -> list[TableRow]:
    if not isinstance(p, int) or not is_char_exponent(p):
        raise TableError(f"characteristic exponent must be 1 or prime, got {p}")
    return [row for row in ROWS if row.visible_at(p)]


def _base_coeffs(key: str, rank: int, q: int) -> list[int]:
    k = rank
    if key in ("a1",):
        return [1]
    if key == "a1-doubled":
        return [2]
    if key in ("a-chain", "b-chain", "b-chain-open"):
        return [1] * k
    if key == "b-chain-doubled":
        return [2] * k
    if key == "a3-121":
        return [1, 2, 1]
    if key == "b3-123":
        return [1, 2, 3]
    if key in ("c-1221", "c-1221-open"):
        return [1] + [2] * (k - 2) + [1]
    if key == "d-2211":
        return [2] * (k - 2) + [1, 1]
    if key == "f4-1232":
        return [1, 2, 3, 2]
    if key == "g2-21":
        return [2, 1]
    if key == "g2-21-doubled":
        return [4, 2]
    if key == "g2-11":
        return [1, 1]
    if key == "a1xa1-q":
        return [q, 1]
    if key in ("b-122", "b-122-open"):
        return [1] + [2] * (k - 1)
    if key in ("c-221", "c-221-open"):
        return [2] * (k - 1) + [1]
    if key == "c3-243":
        return [2, 4, 3]
    if key == "f4-2342":
        return [2, 3, 4, 2]
    if key == "g2-32":
        return [3, 2]
    if key == "g2-32-doubled":
        return [6, 4]
    if key == "g2-31":
        return [3, 1]
    raise TableError(f"unknown row key {key}")


def _base_blacks(key: str, rank: int) -> frozenset[int]:
    k = rank
    if key in ("a1", "a1-doubled", "g2-11", "a1xa1-q", "g2-31"):
        return frozenset()
    if key in ("a-chain", "b-chain-open"):
        return frozenset(range(1, k - 1))
    if key == "a3-121":
        return frozenset({0, 2})
    if key in ("b-chain", "b-chain-doubled", "d-2211", "c-221"):
        return frozenset(range(1, k))
    if key in ("b3-123", "c3-243"):
        return frozenset({0, 1})
    if key in ("c-1221", "b-122"):
        return frozenset({0}) | frozenset(range(2, k))
    if key in ("c-1221-open", "b-122-open"):
        return frozenset(range(2, k))
    if key == "f4-1232":
        return frozenset({0, 1, 2})
    if key in ("g2-21", "g2-21-doubled"):
        return frozenset({1})
    if key == "c-221-open":
        return frozenset(range(1, k - 1))
    if key == "f4-2342":
        return frozenset({1, 2, 3})
    if key in ("g2-32", "g2-32-doubled"):
        return frozenset({0})
    raise TableError(f"unknown row key {key}")


def instantiate(row: TableRow, rank: int, q: int = 1) -> PatternInstance:
    if rank < row.min_rank or (row.max_rank is not None and rank > row.max_rank):
        raise TableError(f"rank {rank} outside bounds of row {row.key}")
    if row.frobenius:
        diagram = build_diagram([("A", 1), ("A", 1)])
    else:
        diagram = build_diagram([(row.family, rank)])
    coeffs = tuple(_base_coeffs(row.key, rank, q))
    blacks = _base_blacks(row.key, rank)
    return PatternInstance(row, rank, q, diagram, coeffs, blacks)


def frobenius_q_values(p: int, q_max: int) -> list[int]:
    """Admissible Frobenius parameters: powers of p up to q_max (q=1 included;
    for p=1 only q=1 exists)."""
    if q_max < 1:
        raise TableError("q_max must be >= 1")
    if p == 1:
        return [1]
    out, q = [], 1
    while q <= q_max:
        out.append(q)
        q *= p
    return out


def pattern_match(system: RootSystem, support: frozenset[int],
                  coeffs: tuple[int, ...], p: int, q_max: int = 8) -> list[PatternMatch]:
    """All catalogue matches for a candidate vector on its support.

    `coeffs` is the full coefficient vector over the system's nodes; it must
    be positive exactly on `support`.  Empty result means the candidate is
    not accepted.
    """
    if len(coeffs) != system.rank:
        raise TableError(f"expected {system.rank} coefficients")
    for i in range(system.rank):
        if i in support:
            if coeffs[i] <= 0:
                raise TableError(f"claimed support node {i} has coefficient {coeffs[i]}")
        elif coeffs[i] != 0:
            raise TableError(f"nonzero coefficient off the claimed support at node {i}")
    table_rows(p)  # validates p
    support_list = sorted(support)
    sub = system.diagram.induced(support_list)
    k = len(support_list)

    out: list[PatternMatch] = []
    seen: set[tuple[str, int, frozenset[int]]] = set()
    for row in ROWS:
        if not row.visible_at(p):
            continue
        lo = row.min_rank
        hi = row.max_rank if row.max_rank is not None else k
        if not (lo <= k <= hi):
            continue
        qs = frobenius_q_values(p, q_max) if row.frobenius else [1]
        for q in qs:
            inst = instantiate(row, k, q)
            if inst.diagram.n != k:
                continue
            for emb in inst.diagram.embeddings(sub):
                ok = all(coeffs[support_list[emb[i]]] == inst.coeffs[i]
                         for i in range(k))
                if not ok:
                    continue
                concrete = tuple(support_list[emb[i]] for i in range(k))
                blacks = frozenset(support_list[emb[i]] for i in inst.blacks)
                sig = (row.key, q, blacks)
                if sig in seen:
                    continue
                seen.add(sig)
                out.append(PatternMatch(row.key, q, concrete, blacks))
    out.sort(key=lambda m: (m.row_key, m.q, tuple(sorted(m.blacks))))
    return out


def row_by_key(key: str) -> TableRow:
    for row in ROWS:
        if row.key == key:
            return row
    raise TableError(f"no row with key {key}")


def table_json(p: int) -> dict:
    rows = table_rows(p)
    return {
        "version": 1,
        "p": p,
        "rows": [
            {
                "key": r.key,
                "family": r.family,
                "min_rank": r.min_rank,
                "max_rank": r.max_rank,
                "chars": r.chars,
                "doubled": r.doubled,
                "frobenius": r.frobenius,
                "group": r.label_g,
                "subgroup": r.label_h,
                "coefficients": r.coeff_rule,
                "filled_vertices": r.blacks_rule,
            }
            for r in rows
        ],
    }
