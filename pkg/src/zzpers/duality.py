"""Mapping absolute zigzag barcodes onto relative ones, and the partial
inverse available on closed manifolds.

The forward map is surjective but not injective: closed-closed and
open-open absolute intervals each split into a [0, .] and a [., m] relative
interval, and recombining those requires extra information. On a closed
p-manifold the dimension-p relative intervals can be re-paired through the
connected component of the top simplex at each open end, which recovers all
of dimension p and everything except closed-closed in dimension p-1.
"""

from __future__ import annotations

from collections import Counter
from typing import Dict, List

from .barcode import ABSOLUTE, CLOSED, OPEN, RELATIVE, Barcode, Interval
from .complexes import SimplicialComplex, connected_components
from .errors import (
    ContractViolationError,
    InternalInconsistencyError,
    NotNonRepetitiveError,
    NotStandardizedError,
)
from .filtration import ADD, DEL, ZigzagFiltration, find_repetition


def absolute_to_relative(abs_bar: Barcode) -> Barcode:
    """Relative barcode of (K, K_i) from the absolute barcode of K_i.

    Requires the barcode of a standardized non-repetitive filtration (so no
    interval touches 0 or m). End types of the emitted intervals follow the
    arrows: both ends of a split pair sit on the parent's birth/death
    arrows, so the parent's types determine them.
    """
    if abs_bar.kind != ABSOLUTE:
        raise ContractViolationError("absolute_to_relative needs an absolute barcode")
    m = abs_bar.m
    out: Counter = Counter()
    for iv, c in abs_bar.counts().items():
        if iv.b < 1 or iv.d > m - 1:
            raise NotStandardizedError(
                f"{iv!r} touches an end of the module; input must come from "
                "a filtration standardized to empty ends"
            )
        code = iv.type_code
        if code == "co":
            out[Interval(iv.dim + 1, iv.b, iv.d, CLOSED, OPEN)] += c
        elif code == "oc":
            out[Interval(iv.dim + 1, iv.b, iv.d, OPEN, CLOSED)] += c
        elif code == "cc":
            out[Interval(iv.dim, 0, iv.b - 1, CLOSED, OPEN)] += c
            out[Interval(iv.dim, iv.d + 1, m, OPEN, CLOSED)] += c
        else:  # oo
            out[Interval(iv.dim + 1, 0, iv.d, CLOSED, OPEN)] += c
            out[Interval(iv.dim + 1, iv.b, m, OPEN, CLOSED)] += c
    return Barcode(out, m, RELATIVE)


def recover_absolute_from_relative(
    rel_p: Barcode, f: ZigzagFiltration, K: SimplicialComplex, p: int
) -> Barcode:
    """Partial absolute barcode from the dimension-p relative barcode.

    Interior intervals drop to dimension p-1 unchanged. Intervals touching
    the ends pair up one [0, i] with one [j, m] per connected component of
    K, matched through the component of the p-simplex added at i and the
    p-simplex deleted at j-1; disjoint pairs give closed-closed intervals
    of dimension p, overlapping ones open-open intervals of dimension p-1.
    The closed-closed part of dimension p-1 is not recoverable and is not
    emitted. Inconsistent inputs raise rather than being repaired: this
    operation consumes computed data, so mismatches mean an upstream bug.
    """
    if rel_p.kind != RELATIVE:
        raise ContractViolationError("recovery needs a relative barcode")
    if rel_p.m != len(f):
        raise ContractViolationError("barcode length does not match the filtration")
    if not f.is_standardized():
        raise NotStandardizedError("recovery needs a standardized filtration")
    rep = find_repetition(f)
    if rep is not None:
        s, di, ai = rep
        raise NotNonRepetitiveError(f"{s!r} deleted at index {di} and added again at index {ai}")
    m = rel_p.m
    comps = connected_components(K)
    out: Counter = Counter()
    starts: Dict[int, List[int]] = {}  # component -> death indices i of [0, i]
    ends: Dict[int, List[int]] = {}  # component -> birth indices j of [j, m]
    for iv, c in rel_p.counts().items():
        if iv.dim != p:
            raise ContractViolationError(f"{iv!r} is not of dimension {p}")
        if iv.b == 0 and iv.d == m:
            raise InternalInconsistencyError(f"{iv!r} spans the whole module")
        if iv.b == 0:
            ev = f.events[iv.d]
            if ev.direction != ADD or ev.simplex.dim != p:
                raise InternalInconsistencyError(
                    f"{iv!r} should end at the addition of a {p}-simplex, got {ev!r}"
                )
            starts.setdefault(comps.label(ev.simplex), []).extend([iv.d] * c)
        elif iv.d == m:
            ev = f.events[iv.b - 1]
            if ev.direction != DEL or ev.simplex.dim != p:
                raise InternalInconsistencyError(
                    f"{iv!r} should start at the deletion of a {p}-simplex, got {ev!r}"
                )
            ends.setdefault(comps.label(ev.simplex), []).extend([iv.b] * c)
        else:
            if iv.type_code not in ("co", "oc"):
                raise InternalInconsistencyError(f"interior interval {iv!r} is not co or oc")
            out[Interval(p - 1, iv.b, iv.d, iv.birth_type, iv.death_type)] += c

    n_zero = sum(len(v) for v in starts.values())
    n_full = sum(len(v) for v in ends.values())
    if n_zero != comps.count or n_full != comps.count:
        raise InternalInconsistencyError(
            f"expected one [0, .] and one [., m] interval per component "
            f"({comps.count}), got {n_zero} and {n_full}"
        )
    for label in range(comps.count):
        si = starts.get(label, [])
        ei = ends.get(label, [])
        if len(si) != 1 or len(ei) != 1:
            raise InternalInconsistencyError(
                f"component {label} has {len(si)} start and {len(ei)} end intervals"
            )
        i, j = si[0], ei[0]
        if i < j:
            if i + 1 > j - 1:
                raise InternalInconsistencyError(
                    f"pair [0,{i}], [{j},{m}] leaves an empty closed-closed interval"
                )
            out[Interval(p, i + 1, j - 1, CLOSED, CLOSED)] += 1
        else:
            out[Interval(p - 1, j, i, OPEN, OPEN)] += 1
    return Barcode(out, m, ABSOLUTE)
