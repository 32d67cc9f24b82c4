"""
Index combinatorics of the Dold-Kan decomposition.

S(n) lists the 2**n degeneracy multi-indices at level n, P-bar(n) the
complementary Peiffer pairs, and shuffle_sign the parity attached to each
pair by the Eilenberg-Zilber shuffle.
"""

from functools import lru_cache

from sympy.combinatorics import Permutation

from simplicial_dgla.models.multi_index import MultiIndex, PeifferPair


@lru_cache(maxsize=None)
def enum_S(n: int) -> tuple[MultiIndex, ...]:  # noqa: N802
    """
    All subsets of {0, ..., n-1} in the order {} < {0} < {1} < {1,0} < {2} < ...

    Args:
        n: Level, n >= 0

    Returns:
        Tuple of 2**n multi-indices, strictly increasing
    """
    if n < 0:
        raise ValueError(f"Level must be non-negative, got {n}")
    return tuple(
        MultiIndex.of(*(i for i in range(n) if mask >> i & 1)) for mask in range(1 << n)
    )


@lru_cache(maxsize=None)
def enum_Pbar(n: int) -> tuple[PeifferPair, ...]:  # noqa: N802
    """
    Pairs {} < alpha < beta with alpha, beta a partition of {0, ..., n-1}.

    Emitted in lexicographic order of (alpha, beta).
    """
    pairs = []
    for alpha in enum_S(n):
        if alpha.size == 0:
            continue
        beta = alpha.complement(n)
        if alpha < beta:
            pairs.append(PeifferPair(n, alpha, beta))
    return tuple(sorted(pairs, key=lambda p: (p.alpha.mask, p.beta.mask)))


def enum_Pbar_parts(n1: int, n2: int) -> tuple[PeifferPair, ...]:  # noqa: N802
    """
    Pairs of P-bar(n1 + n2) with n - #alpha = n1 and n - #beta = n2.

    Args:
        n1: Moore degree of the first argument, n1 >= 1
        n2: Moore degree of the second argument, n2 >= 1
    """
    if n1 < 1 or n2 < 1:
        raise ValueError(f"Peiffer degrees must be positive, got ({n1}, {n2})")
    return tuple(p for p in enum_Pbar(n1 + n2) if p.degrees == (n1, n2))


def complementary_splits(n: int, alpha_size: int) -> tuple[tuple[MultiIndex, MultiIndex], ...]:
    """Every (alpha, complement) with #alpha = alpha_size, alpha in S(n) order."""
    return tuple((a, a.complement(n)) for a in enum_S(n) if a.size == alpha_size)


def shuffle_sign(n: int, alpha: MultiIndex, beta: MultiIndex) -> int:
    """
    Sign of the shuffle defined by (S(n) minus alpha, S(n) minus beta).

    The concatenation (beta ascending, alpha ascending) is a permutation
    of {0, ..., n-1}; its parity is returned as +1 or -1.

    Raises:
        ValueError: If alpha and beta are not complementary in {0, ..., n-1}
    """
    if not (alpha.fits(n) and beta.fits(n)) or alpha.complement(n) != beta:
        raise ValueError(f"({alpha}, {beta}) is not a complementary pair at level {n}")
    if n == 0:
        return 1
    word = [*beta.ascending(), *alpha.ascending()]
    return -1 if Permutation(word).is_odd else 1
