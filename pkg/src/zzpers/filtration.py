"""Zigzag filtrations as ordered add/delete event sequences.

Index convention: event i sits between the snapshots K_i and K_{i+1}, so a
filtration with m events has complexes K_0..K_m. Filtrations are immutable
values; every operation returns a new one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple

from .complexes import Simplex, SimplicialComplex, boundary
from .errors import (
    InvalidDiamondError,
    InvalidInputError,
    InvalidSwitchError,
    NotNonRepetitiveError,
    NotStandardizedError,
    NotUpDownError,
)
from .rng import SplitMix64

ADD = "a"
DEL = "d"


@dataclass(frozen=True)
class FiltrationEvent:
    direction: str
    simplex: Simplex

    def __post_init__(self):
        if self.direction not in (ADD, DEL):
            raise InvalidInputError(f"unknown event direction {self.direction!r}")

    @classmethod
    def add(cls, s: Simplex) -> "FiltrationEvent":
        return cls(ADD, s)

    @classmethod
    def delete(cls, s: Simplex) -> "FiltrationEvent":
        return cls(DEL, s)

    def __repr__(self) -> str:
        sign = "+" if self.direction == ADD else "-"
        return f"{sign}{'.'.join(map(str, self.simplex.vertices))}"


class ZigzagFiltration:
    """Event list plus the starting complex (empty by default)."""

    __slots__ = ("events", "initial")

    def __init__(self, events: Iterable[FiltrationEvent], initial: Iterable[Simplex] = ()):
        self.events: Tuple[FiltrationEvent, ...] = tuple(events)
        init = frozenset(initial)
        for s in init:
            for f in boundary(s):
                if f not in init:
                    raise InvalidInputError(
                        f"initial complex is not face-closed: missing {f!r} (facet of {s!r})"
                    )
        self.initial = init

    def __len__(self) -> int:
        return len(self.events)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, ZigzagFiltration)
            and self.events == other.events
            and self.initial == other.initial
        )

    def __repr__(self) -> str:
        return f"ZigzagFiltration({list(self.events)!r})"

    def directions(self) -> Tuple[str, ...]:
        return tuple(e.direction for e in self.events)

    def snapshots(self) -> Iterator[frozenset]:
        """Yield K_0..K_m. Intended for small instances (copies each step)."""
        current = set(self.initial)
        yield frozenset(current)
        for e in self.events:
            if e.direction == ADD:
                current.add(e.simplex)
            else:
                current.discard(e.simplex)
            yield frozenset(current)

    def complex_at(self, i: int) -> frozenset:
        for k, snap in enumerate(self.snapshots()):
            if k == i:
                return snap
        raise IndexError(i)

    def final_complex(self) -> frozenset:
        current = set(self.initial)
        for e in self.events:
            if e.direction == ADD:
                current.add(e.simplex)
            else:
                current.discard(e.simplex)
        return frozenset(current)

    def total_complex(self) -> SimplicialComplex:
        all_simplices = set(self.initial)
        all_simplices.update(e.simplex for e in self.events if e.direction == ADD)
        return SimplicialComplex(all_simplices)

    def is_standardized(self) -> bool:
        return not self.initial and not self.final_complex()

    def is_updown(self) -> bool:
        seen_del = False
        for e in self.events:
            if e.direction == DEL:
                seen_del = True
            elif seen_del:
                return False
        return True


@dataclass(frozen=True)
class Violation:
    index: int
    reason: str


def validate(f: ZigzagFiltration) -> List[Violation]:
    """Well-formedness diagnostics; empty list iff f is valid.

    Invalid events are skipped when updating the running complex so that
    later diagnostics stay meaningful. Works on raw vertex tuples to keep
    the pass cheap on long filtrations.
    """
    out: List[Violation] = []
    present: set = set()
    coface_count: Dict[Tuple[int, ...], int] = {}

    def facets(vs: Tuple[int, ...]):
        return [vs[:k] + vs[k + 1 :] for k in range(len(vs))] if len(vs) > 1 else []

    for s in f.initial:
        present.add(s.vertices)
        for face in facets(s.vertices):
            coface_count[face] = coface_count.get(face, 0) + 1

    get = coface_count.get
    for i, e in enumerate(f.events):
        vs = e.simplex.vertices
        if e.direction == ADD:
            if vs in present:
                out.append(Violation(i, f"duplicate add of {e.simplex!r}"))
                continue
            fs = facets(vs)
            if any(face not in present for face in fs):
                names = ", ".join(
                    repr(Simplex(face)) for face in sorted(fs) if face not in present
                )
                out.append(Violation(i, f"missing facets of {e.simplex!r}: {names}"))
                continue
            present.add(vs)
            for face in fs:
                coface_count[face] = get(face, 0) + 1
        else:
            if vs not in present:
                out.append(Violation(i, f"delete of absent simplex {e.simplex!r}"))
                continue
            if get(vs, 0) > 0:
                s = e.simplex
                witness = next(
                    (
                        Simplex(t)
                        for t in present
                        if len(t) == len(vs) + 1 and s.is_face_of(Simplex(t))
                    ),
                    None,
                )
                out.append(Violation(i, f"dangling coface {witness!r} of deleted {s!r}"))
                continue
            present.discard(vs)
            for face in facets(vs):
                coface_count[face] -= 1
    return out


def find_repetition(f: ZigzagFiltration) -> Optional[Tuple[Simplex, int, int]]:
    """First (simplex, delete index, re-add index) witnessing repetitiveness."""
    last_del: Dict[Simplex, int] = {}
    for i, e in enumerate(f.events):
        if e.direction == DEL:
            last_del[e.simplex] = i
        elif e.simplex in last_del:
            return e.simplex, last_del[e.simplex], i
    return None


def is_non_repetitive(f: ZigzagFiltration) -> bool:
    """True iff no simplex is added again after one of its deletions."""
    return find_repetition(f) is None


@dataclass(frozen=True)
class StandardizationRecord:
    """How a filtration was padded to start and end with the empty complex.

    Complex index i of the original corresponds to prefix_length + i in the
    standardized filtration.
    """

    prefix_length: int
    original_length: int
    suffix_length: int

    @property
    def original_range(self) -> Tuple[int, int]:
        return self.prefix_length, self.prefix_length + self.original_length


def _build_order(simplices: Iterable[Simplex]) -> List[Simplex]:
    return sorted(simplices, key=lambda s: (s.dim, s.vertices))


def standardize(f: ZigzagFiltration) -> Tuple[ZigzagFiltration, StandardizationRecord]:
    """Prepend additions building K_0 and append deletions dismantling K_m.

    The prepended additions follow (dimension, lexicographic) order and the
    appended deletions the reverse; any face-respecting order would do, this
    one is deterministic. Non-repetitiveness is preserved.
    """
    prefix = [FiltrationEvent.add(s) for s in _build_order(f.initial)]
    suffix = [FiltrationEvent.delete(s) for s in reversed(_build_order(f.final_complex()))]
    out = ZigzagFiltration(prefix + list(f.events) + suffix)
    return out, StandardizationRecord(len(prefix), len(f.events), len(suffix))


@dataclass(frozen=True)
class EventIndexMap:
    """Index of each simplex's addition and deletion in a reference filtration."""

    add_index: dict
    del_index: dict

    def of(self, direction: str, s: Simplex) -> int:
        table = self.add_index if direction == ADD else self.del_index
        return table[s]


def _updown_parts(
    f: ZigzagFiltration,
) -> Tuple[List[Simplex], List[Simplex], EventIndexMap]:
    """(added simplices, deleted simplices, index map) of the up-down form."""
    if not f.is_standardized():
        raise NotStandardizedError("up-down conversion needs K_0 = K_m = empty")
    rep = find_repetition(f)
    if rep is not None:
        s, di, ai = rep
        raise NotNonRepetitiveError(f"{s!r} deleted at index {di} and added again at index {ai}")
    adds: List[Simplex] = []
    dels: List[Simplex] = []
    add_index: Dict[Simplex, int] = {}
    del_index: Dict[Simplex, int] = {}
    for i, e in enumerate(f.events):
        if e.direction == ADD:
            add_index[e.simplex] = i
            adds.append(e.simplex)
        else:
            del_index[e.simplex] = i
            dels.append(e.simplex)
    if len(adds) != len(dels):
        raise NotStandardizedError("standardized filtration must pair every add with a delete")
    return adds, dels, EventIndexMap(add_index, del_index)


def to_updown(f: ZigzagFiltration) -> Tuple[ZigzagFiltration, EventIndexMap]:
    """Canonical up-down form: all additions first, then all deletions.

    Both halves keep their relative order from f. The returned index map
    records where each addition/deletion sat in f.
    """
    adds, dels, id_map = _updown_parts(f)
    events = [FiltrationEvent(ADD, s) for s in adds]
    events += [FiltrationEvent(DEL, s) for s in dels]
    return ZigzagFiltration(events), id_map


def _switched(f: ZigzagFiltration, j: int) -> ZigzagFiltration:
    events = list(f.events)
    events[j - 1], events[j] = events[j], events[j - 1]
    return ZigzagFiltration(events, f.initial)


def outward_switch(f: ZigzagFiltration, j: int) -> ZigzagFiltration:
    """Replace delete-then-add at positions (j-1, j) by add-then-delete."""
    if not 1 <= j < len(f.events):
        raise InvalidSwitchError(f"switch position {j} out of range")
    first, second = f.events[j - 1], f.events[j]
    if first.direction != DEL or second.direction != ADD:
        raise InvalidSwitchError(f"events at {j - 1}, {j} are not delete-then-add")
    tau, sigma = first.simplex, second.simplex
    if sigma == tau:
        raise InvalidDiamondError(f"cannot switch deletion and addition of the same {sigma!r}")
    if tau.is_face_of(sigma):
        raise InvalidSwitchError(f"{tau!r} is a face of {sigma!r}; switched order would be invalid")
    return _switched(f, j)


def inward_switch(f: ZigzagFiltration, j: int) -> ZigzagFiltration:
    """Replace add-then-delete at positions (j-1, j) by delete-then-add."""
    if not 1 <= j < len(f.events):
        raise InvalidSwitchError(f"switch position {j} out of range")
    first, second = f.events[j - 1], f.events[j]
    if first.direction != ADD or second.direction != DEL:
        raise InvalidSwitchError(f"events at {j - 1}, {j} are not add-then-delete")
    sigma, tau = first.simplex, second.simplex
    if sigma == tau:
        raise InvalidDiamondError(f"cannot switch addition and deletion of the same {sigma!r}")
    if tau.is_face_of(sigma):
        raise InvalidSwitchError(f"{tau!r} is a face of {sigma!r}; switched order would be invalid")
    return _switched(f, j)


def random_outward_walk(
    f: ZigzagFiltration, steps: int, seed: int
) -> Tuple[ZigzagFiltration, int]:
    """Scatter deletions among additions by random adjacent swaps.

    Starting from a valid up-down filtration, repeatedly picks a uniformly
    random position holding add-then-delete of distinct, non-incident
    simplices and swaps it into delete-then-add. The result is a valid,
    non-repetitive zigzag filtration; with a fixed seed the walk is
    deterministic bit-for-bit. Returns (filtration, steps actually taken);
    the walk stops early once no legal position remains.
    """
    if not f.is_updown():
        raise NotUpDownError("random walk starts from an up-down filtration")
    events = list(f.events)
    m = len(events)
    rng = SplitMix64(seed)

    def legal(pos: int) -> bool:
        first, second = events[pos - 1], events[pos]
        if first.direction != ADD or second.direction != DEL:
            return False
        return not second.simplex.is_face_of(first.simplex)

    # Uniform sampling from a dynamic set: array + position map, swap-remove.
    items: List[int] = [pos for pos in range(1, m) if legal(pos)]
    where: Dict[int, int] = {pos: i for i, pos in enumerate(items)}

    def drop(pos: int) -> None:
        i = where.pop(pos, None)
        if i is None:
            return
        last = items.pop()
        if last != pos:
            items[i] = last
            where[last] = i

    def put(pos: int) -> None:
        if pos not in where:
            where[pos] = len(items)
            items.append(pos)

    taken = 0
    while taken < steps and items:
        pos = items[rng.below(len(items))]
        events[pos - 1], events[pos] = events[pos], events[pos - 1]
        taken += 1
        for q in (pos - 1, pos, pos + 1):
            if 1 <= q < m:
                if legal(q):
                    put(q)
                else:
                    drop(q)
    return ZigzagFiltration(events, f.initial), taken
