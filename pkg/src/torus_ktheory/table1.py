"""Published K-groups of the Anzai crossed products for n = 1..12.

Rows are transcribed as printed, ``Z_k^(m)`` expanded to m copies of k.  Each
torsion list is already an invariant-factor chain.
"""
from __future__ import annotations

from .linalg import AbelianGroup


def _g(rank, *blocks):
    torsion = []
    for k, m in blocks:
        torsion += [k] * m
    return AbelianGroup(rank, tuple(torsion))


TABLE1 = {
    1: (_g(2), _g(2)),
    2: (_g(3), _g(3)),
    3: (_g(4), _g(4)),
    4: (_g(6), _g(6)),
    5: (_g(8), _g(8)),
    6: (_g(13), _g(13, (2, 1))),
    7: (_g(20), _g(20)),
    8: (_g(32, (8, 2)), _g(32, (18, 2))),
    9: (_g(52, (3, 2), (9, 2)), _g(52, (3, 2), (9, 2))),
    10: (_g(90, (55, 4)), _g(90, (11, 2), (99, 1), (198, 1), (2574, 1))),
    11: (_g(152, (11, 12), (143, 4), (286, 2)), _g(152, (11, 12), (143, 4), (286, 2))),
    12: (
        _g(268, (13, 14), (26, 4), (1716, 4), (3432, 2), (58344, 2)),
        _g(268, (13, 4), (26, 4), (286, 6), (4862, 2), (68068, 2)),
    ),
}

RANKS = {n: k0.free_rank for n, (k0, _) in TABLE1.items()}
