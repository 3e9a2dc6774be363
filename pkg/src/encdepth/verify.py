"""Independent re-validation of depth certificates by the full transversal check."""
from __future__ import annotations

from .reference import encloses


def certified_blocks(result):
    """The d+1 disjoint index blocks of size ``result.depth`` a witness vouches for."""
    w = result.witness
    if w is None:
        return None
    k = result.depth
    return [tuple(s[:k]) for s in w.sets]


def witness_is_sound(inst, result) -> bool:
    """Depth 0 needs no witness; otherwise every transversal of the blocks must contain q."""
    if result.depth == 0:
        return result.witness is None
    blocks = certified_blocks(result)
    if blocks is None:
        return result.algorithm == "oracle"
    d = inst.dimension
    if len(blocks) != d + 1 or any(len(b) != result.depth for b in blocks):
        return False
    flat = [i for b in blocks for i in b]
    if len(set(flat)) != len(flat):
        return False
    pts = inst.points
    return encloses([[pts[i] for i in b] for b in blocks], inst.query)
