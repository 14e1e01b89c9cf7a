"""Exhaustive ground truth for small sequence spaces.

Everything here enumerates full spaces outright: the sorted orders, the
averages an optimal shaper could reach, and strategy validation against those
orders.  The enumeration is an odometer over lexicographic order followed by a
stable sort on the (information content, lexicographic) key, written
independently of the vectorized index inside :mod:`seqshape.shaping` so the
two can check each other.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .entropy import Sequence, info_from_sorted_counts
from .shaping import (
    ADAPTIVE_RANK,
    EXACT_SORTED,
    ShaperConfig,
    SpaceTooLargeError,
    inverse_transform,
    transform,
)

__all__ = [
    "SpaceDescriptor",
    "OracleReport",
    "ValidationReport",
    "space_descriptor",
    "sorted_space",
    "oracle_report",
    "validate_strategy",
]


@dataclass(frozen=True)
class SpaceDescriptor:
    """The full space of length-``length`` sequences over ``ns`` symbols."""

    ns: int
    length: int
    size: int


@dataclass(frozen=True)
class OracleReport:
    """Exact averages for optimal shaping of A^n into A^(n+k).

    ``avg_shaped_info`` averages over exactly the ns^n lowest-ordered target
    sequences; ``success_fraction`` is the fraction of ranks whose target
    sequence has strictly lower information content than the equally-ranked
    source sequence.  No sign of ``optimal_gain`` is promised: at very small n
    it is measurably negative.
    """

    ns: int
    n: int
    k: int
    avg_source_info: float
    avg_shaped_info: float
    optimal_gain: float
    success_fraction: float


@dataclass(frozen=True)
class ValidationReport:
    """Exhaustive check of one strategy over a full source space."""

    strategy: str
    ns: int
    n: int
    k: int
    size: int
    roundtrip_ok: bool
    images_distinct: bool
    image_matches_sorted_prefix: bool | None
    counterexample: str | None

    @property
    def ok(self) -> bool:
        return (
            self.roundtrip_ok
            and self.images_distinct
            and self.image_matches_sorted_prefix is not False
        )


def space_descriptor(ns: int, length: int, max_space: int = 1 << 24) -> SpaceDescriptor:
    if ns < 2:
        raise ValueError(f"alphabet size must be >= 2, got {ns}")
    if length < 1:
        raise ValueError(f"length must be >= 1, got {length}")
    size = ns**length
    if size > max_space:
        raise SpaceTooLargeError(
            f"{ns}^{length} = {size} sequences exceed the enumeration bound {max_space}"
        )
    return SpaceDescriptor(ns=ns, length=length, size=size)


def _enumerate_lex(ns: int, length: int):
    """Yield every sequence tuple in lexicographic order (odometer walk)."""
    current = [0] * length
    while True:
        yield tuple(current)
        pos = length - 1
        while pos >= 0 and current[pos] == ns - 1:
            current[pos] = 0
            pos -= 1
        if pos < 0:
            return
        current[pos] += 1


def _infos_lex(ns: int, length: int) -> list[float]:
    cache: dict[tuple[int, ...], float] = {}
    infos = []
    counts = [0] * ns
    for seq in _enumerate_lex(ns, length):
        for a in range(ns):
            counts[a] = 0
        for s in seq:
            counts[s] += 1
        key = tuple(sorted(counts))
        value = cache.get(key)
        if value is None:
            value = info_from_sorted_counts(key)
            cache[key] = value
        infos.append(value)
    return infos


def _sorted_order(ns: int, length: int) -> tuple[list[int], list[float]]:
    """Lex indices and infos sorted by (info, lex); sort stability keeps lex ties."""
    infos = _infos_lex(ns, length)
    order = sorted(range(len(infos)), key=infos.__getitem__)
    return order, [infos[i] for i in order]


def _tuple_from_lex(lex: int, ns: int, length: int) -> tuple[int, ...]:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        out[pos] = lex % ns
        lex //= ns
    return tuple(out)


def sorted_space(ns: int, length: int, max_space: int = 1 << 24) -> list[tuple[int, ...]]:
    """All length-``length`` sequences, cheapest information content first.

    Ties in information content keep lexicographic order, so the result is a
    deterministic permutation of the full enumeration.
    """
    space_descriptor(ns, length, max_space)
    order, _ = _sorted_order(ns, length)
    return [_tuple_from_lex(i, ns, length) for i in order]


def oracle_report(ns: int, n: int, k: int, max_space: int = 1 << 24) -> OracleReport:
    """Exact optimal-shaping statistics for A^n -> A^(n+k) by full enumeration."""
    if k < 1:
        raise ValueError(f"shaping order must be >= 1, got {k}")
    space_descriptor(ns, n + k, max_space)
    size = ns**n
    _, src_infos = _sorted_order(ns, n)
    _, tgt_infos = _sorted_order(ns, n + k)
    avg_source = math.fsum(src_infos) / size
    avg_shaped = math.fsum(tgt_infos[:size]) / size
    successes = sum(1 for r in range(size) if tgt_infos[r] < src_infos[r])
    return OracleReport(
        ns=ns,
        n=n,
        k=k,
        avg_source_info=avg_source,
        avg_shaped_info=avg_shaped,
        optimal_gain=avg_source - avg_shaped,
        success_fraction=successes / size,
    )


def validate_strategy(cfg: ShaperConfig, ns: int, n: int, max_space: int = 1 << 24) -> ValidationReport:
    """Drive one strategy over every sequence of A^n and check its contract.

    Verifies the round trip and pairwise-distinct images for any strategy;
    for ``exact-sorted`` additionally checks that the image set is exactly the
    ns^n lowest-ordered target sequences.  The first failure is captured with
    both offending sequences spelled out.
    """
    if cfg.ns != ns:
        raise ValueError(f"config alphabet {cfg.ns} != requested alphabet {ns}")
    desc = space_descriptor(ns, n, max_space)
    if cfg.strategy == EXACT_SORTED:
        space_descriptor(ns, n + cfg.k, max_space)

    roundtrip_ok = True
    images_distinct = True
    counterexample = None
    seen: dict[tuple[int, ...], tuple[int, ...]] = {}
    images = []
    for seq_tuple in _enumerate_lex(ns, n):
        seq = Sequence(symbols=np.asarray(seq_tuple, dtype=np.int64), ns=ns)
        image = transform(seq, cfg)
        image_tuple = tuple(image.symbols.tolist())
        recovered = inverse_transform(image, cfg)
        if recovered != seq:
            roundtrip_ok = False
            counterexample = (
                f"round trip failed: {seq_tuple} -> {image_tuple} -> "
                f"{tuple(recovered.symbols.tolist())}"
            )
            break
        if image_tuple in seen:
            images_distinct = False
            counterexample = (
                f"images collide: {seen[image_tuple]} and {seq_tuple} both map to {image_tuple}"
            )
            break
        seen[image_tuple] = seq_tuple
        images.append(image_tuple)

    image_matches = None
    if cfg.strategy == EXACT_SORTED and counterexample is None:
        expected = sorted_space(ns, n + cfg.k, max_space)[: desc.size]
        image_matches = set(images) == set(expected)
        if not image_matches:
            missing = sorted(set(expected) - set(images))[:1]
            extra = sorted(set(images) - set(expected))[:1]
            counterexample = (
                f"image set differs from sorted prefix: missing {missing}, unexpected {extra}"
            )

    return ValidationReport(
        strategy=cfg.strategy,
        ns=ns,
        n=n,
        k=cfg.k,
        size=desc.size,
        roundtrip_ok=roundtrip_ok,
        images_distinct=images_distinct,
        image_matches_sorted_prefix=image_matches,
        counterexample=counterexample,
    )
