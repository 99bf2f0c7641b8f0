"""Noll's single-index enumeration of circle functions."""

from typing import Iterator, Tuple

from ..exact.surd import SurdSum
from ..types import AngularKind, Index2D, NollIndex
from ..utils.errors import InvalidArgumentError


def _walk_order(n: int) -> Iterator[Tuple[int, Index2D, AngularKind]]:
    """Yield (j, index, kind) for every function of radial order n."""
    j = n * (n + 1) // 2 + 1
    for m in range(n % 2, n + 1, 2):
        if m == 0:
            yield j, Index2D(n, 0), AngularKind.radial()
            j += 1
            continue
        # the pair (j, j+1) holds cos on the even member
        for jj in (j, j + 1):
            kind = AngularKind.cos(m) if jj % 2 == 0 else AngularKind.sin(m)
            yield jj, Index2D(n, m), kind
        j += 2


def noll_unpack(j: NollIndex) -> Tuple[Index2D, AngularKind]:
    """
    Map Z_j to its radial index and azimuthal factor.

    Args:
        j: Noll index

    Returns:
        Tuple (Index2D, AngularKind)
    """
    if not isinstance(j, NollIndex):
        j = NollIndex(j)
    n = 0
    while (n + 1) * (n + 2) // 2 < j.j:
        n += 1
    for jj, idx, kind in _walk_order(n):
        if jj == j.j:
            return idx, kind
    raise InvalidArgumentError("Noll index not reachable", {"j": j.j})  # pragma: no cover


def noll_pack(idx: Index2D, kind: AngularKind) -> NollIndex:
    """Inverse of noll_unpack."""
    if (idx.m == 0) != (kind.kind == "radial") or (idx.m and kind.m != idx.m):
        raise InvalidArgumentError(
            "angular kind does not match the radial index",
            {"n": idx.n, "m": idx.m, "kind": str(kind)},
        )
    for jj, other_idx, other_kind in _walk_order(idx.n):
        if other_idx == idx and other_kind == kind:
            return NollIndex(jj)
    context = {"n": idx.n, "m": idx.m}
    raise InvalidArgumentError("no Noll index for this pair", context)  # pragma: no cover


def noll_normalization(j: NollIndex) -> SurdSum:
    """sqrt(2n+2) for m > 0, sqrt(n+1) for m = 0."""
    idx, _ = noll_unpack(j)
    if idx.m == 0:
        return SurdSum.sqrt(idx.n + 1)
    return SurdSum.sqrt(2 * idx.n + 2)


def noll_count(n_max: int) -> int:
    """Number of Z_j with radial order <= n_max."""
    return (n_max + 1) * (n_max + 2) // 2
