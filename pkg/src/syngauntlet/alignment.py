"""Mapping scorer tokens onto region spans and aggregating surprisal.

Tokens follow their first character: a token starting inside a region
belongs to it, a token starting in a join space belongs to the next
non-empty region. Regions with no tokens (gaps) aggregate to exactly 0.
"""

from __future__ import annotations

import math
from typing import Sequence

from .errors import UnalignableToken
from .predictions import SurprisalTable
from .scoring import ScoredToken

Span = tuple[int, int]


def assign_regions(region_spans: Sequence[Span], tokens: Sequence[ScoredToken]) -> list[int]:
    """Assign each token a 1-based region index by its first character."""
    assignment = []
    for token in tokens:
        c = token.char_start
        region = None
        for idx, (start, end) in enumerate(region_spans, 1):
            if start <= c < end:
                region = idx
                break
        if region is None:
            # join space: attach to the next region that can hold characters
            for idx, (start, end) in enumerate(region_spans, 1):
                if start > c and end > start:
                    region = idx
                    break
        if region is None:
            raise UnalignableToken(token.text, c)
        if assignment and region < assignment[-1]:
            raise UnalignableToken(token.text, c)  # unordered inputs
        assignment.append(region)
    return assignment


def region_surprisals(
    assignment: Sequence[int],
    tokens: Sequence[ScoredToken],
    region_count: int,
    condition: str,
) -> SurprisalTable:
    """Sum token surprisal into per-region entries for one condition.

    Each entry is the correctly rounded (math.fsum) sum of its region's
    tokens; conservation is exact in real arithmetic — every token lands in
    exactly one region — so entry totals agree with the token total to the
    final rounding.
    """
    buckets: dict[int, list[float]] = {r: [] for r in range(1, region_count + 1)}
    for region, token in zip(assignment, tokens, strict=True):
        buckets[region].append(token.surprisal_bits)
    return SurprisalTable({
        (condition, r): math.fsum(buckets[r]) for r in range(1, region_count + 1)
    })
