"""Immutable graph values for unions of cycles and at most one path.

Every graph handled by this package is a vertex-disjoint union of cycles and
at most one path, labeled with integers, either over Z (``modulus=None``) or
over Z_n.  One or two formal infinity vertices may appear; they are fixed by
every relabeling and never contribute to a difference.

A 2-cycle is an edge of multiplicity two, stored as a cyclic sequence of
length 2; it contributes its difference twice to the difference list.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator


class _Infinity:
    """Formal vertex: fixed by relabelings, excluded from differences."""

    __slots__ = ("name",)

    def __init__(self, name: str):
        self.name = name

    def __repr__(self) -> str:
        return self.name

    def __deepcopy__(self, memo):
        return self

    def __copy__(self):
        return self


INF = _Infinity("inf")
INF2 = _Infinity("inf2")

Label = int | _Infinity


class Refused(ValueError):
    """An operation declined its input (out of bounds, wrong shape, ...)."""


@dataclass(frozen=True)
class CycleMultiset:
    """Multiset of cycle lengths: sorted (length, multiplicity) pairs."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        prev = 1
        for length, mult in self.entries:
            if length < 2:
                raise ValueError(f"cycle length {length} < 2")
            if mult < 1:
                raise ValueError(f"multiplicity {mult} < 1")
            if length <= prev:
                raise ValueError("entries must have strictly increasing lengths")
            prev = length

    @classmethod
    def of(cls, *lengths: int) -> "CycleMultiset":
        return cls.from_lengths(lengths)

    @classmethod
    def from_lengths(cls, lengths) -> "CycleMultiset":
        return cls(tuple(sorted(Counter(lengths).items())))

    @property
    def lengths(self) -> tuple[int, ...]:
        """All cycle lengths, expanded and sorted."""
        out = []
        for length, mult in self.entries:
            out.extend([length] * mult)
        return tuple(out)

    @property
    def size(self) -> int:
        """Total number of edges (= vertices) over all cycles."""
        return sum(length * mult for length, mult in self.entries)

    def __len__(self) -> int:
        return sum(mult for _, mult in self.entries)

    def __bool__(self) -> bool:
        return bool(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.lengths)

    def count(self, length: int) -> int:
        for ell, mult in self.entries:
            if ell == length:
                return mult
        return 0

    @property
    def max_length(self) -> int:
        """Largest length, 0 when empty."""
        return self.entries[-1][0] if self.entries else 0

    @property
    def min_length(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def all_even(self) -> bool:
        return all(ell % 2 == 0 for ell, _ in self.entries)

    def all_odd(self) -> bool:
        return all(ell % 2 == 1 for ell, _ in self.entries)

    def without(self, length: int) -> "CycleMultiset":
        """Remove one cycle of the given length."""
        if self.count(length) == 0:
            raise ValueError(f"no cycle of length {length} to remove")
        c = Counter(dict(self.entries))
        c[length] -= 1
        return CycleMultiset(tuple(sorted((l, m) for l, m in c.items() if m > 0)))

    def plus(self, *lengths: int) -> "CycleMultiset":
        return CycleMultiset.from_lengths(self.lengths + tuple(lengths))

    def __str__(self) -> str:
        return "[" + ", ".join(str(ell) for ell in self.lengths) + "]"


@dataclass(frozen=True)
class GraphSpec:
    """Shape of a cycles-plus-one-path graph: cycle lengths and path length.

    ``path_len == 0`` means the path component is an isolated vertex.  At
    most one 2-cycle is admitted.
    """

    cycles: CycleMultiset
    path_len: int

    def __post_init__(self):
        if self.path_len < 0:
            raise ValueError("path length must be >= 0")
        if self.cycles.count(2) > 1:
            raise ValueError("at most one 2-cycle is admitted")

    @classmethod
    def of(cls, lengths, path_len: int) -> "GraphSpec":
        return cls(CycleMultiset.from_lengths(lengths), path_len)

    @property
    def size(self) -> int:
        return self.cycles.size + self.path_len

    @property
    def order(self) -> int:
        return self.size + 1

    def has_two_cycle(self) -> bool:
        return self.cycles.count(2) == 1

    def __str__(self) -> str:
        inner = ", ".join(str(ell) for ell in self.cycles.lengths)
        return f"[{inner} | {self.path_len}]" if inner else f"[- | {self.path_len}]"


def _is_finite(v: Label) -> bool:
    return not isinstance(v, _Infinity)


@dataclass(frozen=True)
class LabeledGraph:
    """Cycles plus an optional path, with distinct labels.

    ``cycles`` are cyclic label sequences (length >= 2; a 2-entry sequence is
    a doubled edge).  ``path`` is a label sequence of >= 1 vertices.  With a
    modulus n, finite labels live in Z_n and are normalized into 0..n-1.
    """

    cycles: tuple[tuple[Label, ...], ...] = ()
    path: tuple[Label, ...] | None = None
    modulus: int | None = None

    def __post_init__(self):
        if self.modulus is not None:
            if self.modulus < 1:
                raise ValueError("modulus must be >= 1")
            n = self.modulus
            object.__setattr__(
                self,
                "cycles",
                tuple(tuple(v % n if _is_finite(v) else v for v in c) for c in self.cycles),
            )
            if self.path is not None:
                object.__setattr__(
                    self, "path", tuple(v % n if _is_finite(v) else v for v in self.path)
                )
        object.__setattr__(self, "cycles", tuple(tuple(c) for c in self.cycles))
        if self.path is not None:
            object.__setattr__(self, "path", tuple(self.path))
            if len(self.path) < 1:
                raise ValueError("path must have at least one vertex")
        for c in self.cycles:
            if len(c) < 2:
                raise ValueError("cycles must have length >= 2")
        seen = set()
        for v in self.vertices():
            key = v if _is_finite(v) else id(v)
            if key in seen:
                raise ValueError(f"repeated label {v!r}")
            seen.add(key)

    def vertices(self) -> Iterator[Label]:
        for c in self.cycles:
            yield from c
        if self.path is not None:
            yield from self.path

    def vertex_set(self) -> set:
        return set(self.vertices())

    def edges(self) -> Iterator[tuple[Label, Label]]:
        """Each edge once, with multiplicity (a 2-cycle yields its edge twice)."""
        for c in self.cycles:
            for i in range(len(c)):
                yield c[i], c[(i + 1) % len(c)]
        if self.path is not None:
            for i in range(len(self.path) - 1):
                yield self.path[i], self.path[i + 1]

    @property
    def size(self) -> int:
        """Number of edges."""
        return sum(len(c) for c in self.cycles) + (len(self.path) - 1 if self.path else 0)

    @property
    def order(self) -> int:
        return sum(len(c) for c in self.cycles) + (len(self.path) if self.path else 0)

    def path_ends(self) -> tuple[Label, Label] | None:
        if self.path is None:
            return None
        return self.path[0], self.path[-1]

    def spec(self) -> GraphSpec:
        return GraphSpec(
            cycle_type(self), len(self.path) - 1 if self.path is not None else 0
        )


def difference_list(g: LabeledGraph) -> list[int]:
    """Multiset of x - y over ordered pairs of adjacent finite vertices.

    Each edge contributes both orientations.  With a modulus n, values are
    reduced into Z_n \\ {0}, i.e. the range 1..n-1.
    """
    out = []
    n = g.modulus
    for u, v in g.edges():
        if not (_is_finite(u) and _is_finite(v)):
            continue
        d = u - v
        if n is None:
            out.extend((d, -d))
        else:
            out.extend((d % n, (-d) % n))
    return out


def path_difference_list(g: LabeledGraph) -> list[int]:
    """The sub-multiset of difference_list contributed by the path."""
    if g.path is None:
        return []
    return difference_list(LabeledGraph(path=g.path, modulus=g.modulus))


def affine_map(g: LabeledGraph, a: int, b: int) -> LabeledGraph:
    """Replace each finite vertex x with a*x + b (a != 0); infinity is fixed."""
    if a == 0:
        raise ValueError("affine map needs a != 0")
    f = lambda v: a * v + b if _is_finite(v) else v
    return LabeledGraph(
        cycles=tuple(tuple(f(v) for v in c) for c in g.cycles),
        path=tuple(f(v) for v in g.path) if g.path is not None else None,
        modulus=g.modulus,
    )


def translate(g: LabeledGraph, b: int) -> LabeledGraph:
    return affine_map(g, 1, b)


def cycle_type(g: LabeledGraph) -> CycleMultiset:
    """Multiset of component cycle lengths (path excluded)."""
    return CycleMultiset.from_lengths(len(c) for c in g.cycles)


@dataclass(frozen=True)
class SingleFlip:
    """Witness that a 2-regular graph has an involution reflecting one cycle.

    ``reflected`` is the length of the reflected cycle (2*ell0 or 2*ell0 - 1),
    ``flips`` are the half-lengths of the even cycles rotated by 180 degrees
    (pairwise distinct), and ``pairs`` are the lengths of the cycles swapped
    in equal pairs.
    """

    reflected: int
    flips: tuple[int, ...]
    pairs: tuple[int, ...]

    @property
    def ell0(self) -> int:
        return (self.reflected + 1) // 2


def classify_single_flip(factor: CycleMultiset) -> SingleFlip | None:
    """Match a cycle multiset against the single-flip pattern.

    The reflected cycle is chosen as long as possible (for even order it must
    be an even cycle; for odd order it is the unique odd length of odd
    multiplicity).  Repeated even "flip" lengths are migrated into the paired
    list so the flip half-lengths come out pairwise distinct.  Returns None
    when no decomposition exists.
    """
    if factor.count(2) > 0:
        raise Refused("single-flip classification needs a simple 2-regular graph (no 2-cycles)")
    counts = Counter(dict(factor.entries))
    order = factor.size
    odd_odd = [ell for ell, m in counts.items() if ell % 2 == 1 and m % 2 == 1]
    if order % 2 == 1:
        if len(odd_odd) != 1:
            return None
        reflected = odd_odd[0]
    else:
        if odd_odd:
            return None
        evens = [ell for ell, m in counts.items() if ell % 2 == 0 and m > 0]
        if not evens:
            return None
        reflected = max(evens)
    counts[reflected] -= 1
    flips = []
    pairs = []
    for ell in sorted(counts):
        m = counts[ell]
        if m == 0:
            continue
        if m % 2 == 1:
            if ell % 2 == 1:
                return None  # odd leftover cannot be rotated
            flips.append(ell // 2)
            m -= 1
        pairs.extend([ell] * (m // 2))
    return SingleFlip(reflected, tuple(flips), tuple(sorted(pairs)))


# ---------------------------------------------------------------------------
# JSON shapes


def _label_to_json(v: Label):
    return v.name if isinstance(v, _Infinity) else v


def _label_from_json(v) -> Label:
    if v == "inf":
        return INF
    if v == "inf2":
        return INF2
    return int(v)


def graph_to_json(g: LabeledGraph) -> dict:
    return {
        "modulus": g.modulus,
        "cycles": [[_label_to_json(v) for v in c] for c in g.cycles],
        "path": [_label_to_json(v) for v in g.path] if g.path is not None else None,
    }


def graph_from_json(data: dict) -> LabeledGraph:
    return LabeledGraph(
        cycles=tuple(tuple(_label_from_json(v) for v in c) for c in data.get("cycles", [])),
        path=(
            tuple(_label_from_json(v) for v in data["path"])
            if data.get("path") is not None
            else None
        ),
        modulus=data.get("modulus"),
    )


def cycles_from_edges(edges) -> tuple[tuple[Label, ...], ...]:
    """Reassemble a 2-regular edge multiset into cyclic label sequences.

    Raises ValueError when some vertex does not have degree exactly 2.
    """

    def key(v):
        return v if _is_finite(v) else v.name

    adj: dict = {}
    label_of: dict = {}
    for u, v in edges:
        ku, kv = key(u), key(v)
        adj.setdefault(ku, []).append(kv)
        adj.setdefault(kv, []).append(ku)
        label_of[ku], label_of[kv] = u, v
    for k, nb in adj.items():
        if len(nb) != 2:
            raise ValueError(f"vertex {k!r} has degree {len(nb)}, not 2")
    cycles = []
    for start in list(adj):
        if not adj[start]:
            continue
        seq = [start]
        cur = start
        while True:
            nxt = adj[cur].pop()
            adj[nxt].remove(cur)
            if nxt == start:
                break
            seq.append(nxt)
            cur = nxt
        cycles.append(tuple(label_of[k] for k in seq))
    return tuple(cycles)
