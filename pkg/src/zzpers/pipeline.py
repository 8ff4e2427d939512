"""Zigzag barcodes of non-repetitive filtrations via standard persistence.

The route: standardize, take the up-down form, reduce its coned monotone
filtration, then map every interval back through two tables (two-sided
sequence -> up-down, up-down -> input order) and finally into input
coordinates. Only the matrix reduction does non-trivial work; both
remappings are constant time per interval.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Tuple

from .barcode import ABSOLUTE, CLOSED, OPEN, Barcode, Interval, classify_ends
from .errors import (
    ContractViolationError,
    InternalInconsistencyError,
    InvalidInputError,
    NotNonRepetitiveError,
)
from .filtration import (
    ADD,
    DEL,
    EventIndexMap,
    StandardizationRecord,
    ZigzagFiltration,
    _updown_parts,
    find_repetition,
    standardize,
    validate,
)
from .reduction import (
    EXT,
    ORD,
    REL,
    ExtendedInterval,
    _build_extended_parts,
    reduce_twist,
)


def ext_to_updown(iv: ExtendedInterval, n: int) -> Interval:
    """Map one labeled interval of the two-sided sequence into the up-down barcode."""
    if iv.label == ORD:
        if iv.d >= n:
            raise ContractViolationError(f"{iv!r} labeled {ORD} but ends at {iv.d} >= n")
        return Interval(iv.dim, iv.b, iv.d, CLOSED, OPEN)
    if iv.label == REL:
        if iv.b <= n:
            raise ContractViolationError(f"{iv!r} labeled {REL} but starts at {iv.b} <= n")
        if iv.dim < 1:
            raise InternalInconsistencyError(f"{iv!r}: second-half classes have dimension >= 1")
        return Interval(iv.dim - 1, 3 * n - iv.d, 3 * n - iv.b, OPEN, CLOSED)
    if iv.label == EXT:
        if not iv.b <= n <= iv.d:
            raise ContractViolationError(f"{iv!r} labeled {EXT} but does not span index n")
        return Interval(iv.dim, iv.b, 3 * n - iv.d - 1, CLOSED, CLOSED)
    raise ContractViolationError(f"unknown label {iv.label!r}")


def updown_to_f(iv: Interval, id_map: EventIndexMap, U: ZigzagFiltration) -> Interval:
    """Map one up-down interval into the original filtration's barcode.

    The creator (event b-1) and destroyer (event d) keep their identities;
    only their positions move, and for closed-closed intervals whose
    creator lands after its destroyer the two swap roles, dropping the
    dimension by one.
    """
    events = U.events
    m = len(events)
    if not 1 <= iv.b <= iv.d <= m - 1:
        raise ContractViolationError(f"{iv!r} out of interior range for length {m}")
    code = iv.type_code
    creator = events[iv.b - 1]
    destroyer = events[iv.d]
    if code == "co":
        if creator.direction != ADD or destroyer.direction != ADD:
            raise ContractViolationError(f"{iv!r}: end types inconsistent with arrows")
        b = id_map.add_index[creator.simplex] + 1
        d = id_map.add_index[destroyer.simplex]
        return Interval(iv.dim, b, d, CLOSED, OPEN)
    if code == "oc":
        if creator.direction != DEL or destroyer.direction != DEL:
            raise ContractViolationError(f"{iv!r}: end types inconsistent with arrows")
        b = id_map.del_index[creator.simplex] + 1
        d = id_map.del_index[destroyer.simplex]
        return Interval(iv.dim, b, d, OPEN, CLOSED)
    if code == "cc":
        if creator.direction != ADD or destroyer.direction != DEL:
            raise ContractViolationError(f"{iv!r}: end types inconsistent with arrows")
        at = id_map.add_index[creator.simplex]
        dt = id_map.del_index[destroyer.simplex]
        if at == dt:
            raise InternalInconsistencyError("an addition and a deletion cannot share an index")
        if at < dt:
            return Interval(iv.dim, at + 1, dt, CLOSED, CLOSED)
        if iv.dim < 1:
            raise InternalInconsistencyError(
                f"{iv!r}: creator after destroyer needs dimension >= 1"
            )
        return Interval(iv.dim - 1, dt + 1, at, OPEN, OPEN)
    raise ContractViolationError(f"{iv!r}: open-open intervals cannot occur up-down")


def check_diamond(original: Barcode, switched: Barcode, j: int) -> bool:
    """Do two barcodes correspond across one switch at positions (j-1, j)?

    `switched` belongs to the add-then-delete form and `original` to the
    delete-then-add form of the same filtration. Intervals map by shifting
    ends touching index j, and the singleton [j, j] drops one dimension;
    end types are not compared (they are determined by each filtration's
    own arrows).
    """
    mapped: Counter = Counter()
    for (dim, b, d), c in switched.triples().items():
        if b == j and d == j:
            key = (dim - 1, j, j)
        elif d == j - 1 and b <= j - 1:
            key = (dim, b, j)
        elif d == j and b <= j - 1:
            key = (dim, b, j - 1)
        elif b == j and d >= j + 1:
            key = (dim, j + 1, d)
        elif b == j + 1 and d >= j + 1:
            key = (dim, j, d)
        else:
            key = (dim, b, d)
        mapped[key] += c
    return mapped == original.triples()


@dataclass(frozen=True)
class PipelineResult:
    barcode: Barcode  # input coordinates
    standardized: Barcode  # coordinates of the padded filtration
    synthetic: Tuple[Interval, ...]  # intervals living entirely in the padding
    record: StandardizationRecord
    timings: Dict[str, float]


def _restrict_to_input(
    std: Barcode, record: StandardizationRecord, f: ZigzagFiltration
) -> Tuple[Barcode, Tuple[Interval, ...]]:
    if record.prefix_length == 0 and record.suffix_length == 0:
        return std, ()
    directions = f.directions()
    lo, hi = record.original_range
    kept: Counter = Counter()
    synthetic = []
    for iv, c in std.counts().items():
        if iv.d < lo or iv.b > hi:
            synthetic.extend([iv] * c)
            continue
        b = max(iv.b - lo, 0)
        d = min(iv.d - lo, record.original_length)
        bt, dt = classify_ends(b, d, directions)
        kept[Interval(iv.dim, b, d, bt, dt)] += c
    return Barcode(kept, record.original_length, ABSOLUTE), tuple(sorted(synthetic))


def _remap_pairs(state, events, dels, n: int, id_map: EventIndexMap) -> Counter:
    """Fused version of extended_from_reduction + ext_to_updown + updown_to_f.

    One pass over the reduction pairs straight to input-order intervals,
    avoiding intermediate objects on long filtrations. Column c > n of the
    coned filtration is the cone over dels[2n - c]. Must stay
    interval-for-interval equal to the composed public operations (a
    property test holds it to that).
    """
    if state.essentials != (0,):
        raise InternalInconsistencyError(
            f"expected the apex column as the only essential, got {state.essentials}"
        )
    add_idx = id_map.add_index
    del_idx = id_map.del_index
    n2 = 2 * n
    out: Counter = Counter()
    for i, j in state.pairs:
        if i == 0:
            raise InternalInconsistencyError("apex column appears in a pair")
        if j <= n:  # both columns in the up phase
            creator = events[i]
            iv = Interval(creator.dim, add_idx[creator] + 1, add_idx[events[j]], CLOSED, OPEN)
        elif i > n:  # both columns in the coned phase
            creator = dels[n2 - j]  # base of the death column, deleted first
            destroyer = dels[n2 - i]  # base of the birth column
            iv = Interval(destroyer.dim, del_idx[creator] + 1, del_idx[destroyer], OPEN, CLOSED)
        else:  # spans the middle: born in the up phase, killed by a cone
            creator = events[i]
            destroyer = dels[n2 - j]
            at = add_idx[creator]
            dt = del_idx[destroyer]
            if at == dt:
                raise InternalInconsistencyError(
                    "an addition and a deletion cannot share an index"
                )
            if at < dt:
                iv = Interval(creator.dim, at + 1, dt, CLOSED, CLOSED)
            else:
                if creator.dim < 1:
                    raise InternalInconsistencyError(
                        "creator after destroyer needs dimension >= 1"
                    )
                iv = Interval(creator.dim - 1, dt + 1, at, OPEN, OPEN)
        out[iv] += 1
    return out


def compute_zigzag(f: ZigzagFiltration) -> PipelineResult:
    """Full pipeline with per-phase timings.

    Phases: ``validate`` (input admission), ``convert`` (standardize,
    up-down form, coned filtration), ``reduce`` (matrix build and column
    reduction), ``remap`` (interval translation back to input order).
    """
    t0 = time.perf_counter()
    violations = validate(f)
    if violations:
        head = "; ".join(f"event {v.index}: {v.reason}" for v in violations[:5])
        raise InvalidInputError(f"invalid filtration ({len(violations)} violations): {head}")
    rep = find_repetition(f)
    if rep is not None:
        s, di, ai = rep
        raise NotNonRepetitiveError(f"{s!r} deleted at index {di} and added again at index {ai}")
    t1 = time.perf_counter()
    std, record = standardize(f)
    adds, dels, id_map = _updown_parts(std)
    ext = _build_extended_parts(adds, dels)
    t2 = time.perf_counter()
    state = reduce_twist(ext.events)
    t3 = time.perf_counter()
    n = ext.n
    counts = _remap_pairs(state, ext.events, dels, n, id_map)
    total = sum(counts.values())
    if total != n:
        raise InternalInconsistencyError(
            f"expected {n} intervals from {2 * n} arrows, got {total}"
        )
    standardized = Barcode(counts, len(std), ABSOLUTE)
    barcode, synthetic = _restrict_to_input(standardized, record, f)
    t4 = time.perf_counter()
    timings = {
        "validate": t1 - t0,
        "convert": t2 - t1,
        "reduce": t3 - t2,
        "remap": t4 - t3,
    }
    return PipelineResult(barcode, standardized, synthetic, record, timings)


def zigzag_barcode(f: ZigzagFiltration) -> Barcode:
    """Absolute zigzag barcode of a valid non-repetitive filtration."""
    return compute_zigzag(f).barcode
