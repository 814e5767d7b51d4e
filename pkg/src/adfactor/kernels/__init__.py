"""Kernel selection: compiled extension when importable, pure Python otherwise.

Set ``ADFACTOR_PURE_KERNELS=1`` to force the pure implementation.  The
compiled kernels work on word-sized bitmasks, so oversized instances fall
back to pure Python automatically.
"""
from __future__ import annotations

import os
from typing import Sequence

from . import pure as _pure

_native = None
if not os.environ.get("ADFACTOR_PURE_KERNELS"):
    try:
        from . import _core as _native  # type: ignore[attr-defined]
    except ImportError:
        _native = None

IMPLEMENTATION = "native" if _native is not None else "pure"

_WORD = 64


def bip_max_matching(n_left: int, n_right: int, adj: Sequence[int]) -> tuple[int, list[int]]:
    if _native is not None and n_left <= _WORD and n_right <= _WORD:
        return _native.bip_max_matching(n_left, n_right, list(adj))
    return _pure.bip_max_matching(n_left, n_right, adj)


def bip_two_factor(m: int, adj: Sequence[int]) -> list[list[int]] | None:
    if _native is not None and m <= _WORD:
        return _native.bip_two_factor(m, list(adj))
    return _pure.bip_two_factor(m, adj)


def bip_hamilton(m: int, adj: Sequence[int], node_budget: int) -> tuple[int, list[int] | None]:
    if _native is not None and 2 * m <= _WORD:
        return _native.bip_hamilton(m, list(adj), node_budget)
    return _pure.bip_hamilton(m, adj, node_budget)
