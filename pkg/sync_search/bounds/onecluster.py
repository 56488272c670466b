# sync_search/bounds/onecluster.py

"""
Reset-length bounds for automata containing a one-cluster transformation.

The central quantity is the dimension of the span of all cyclic rotations of
a binary vector of length m. It equals m - deg gcd(S(x), x^m - 1), and since
x^m - 1 is the squarefree product of the cyclotomic Φ_d over d | m, the gcd
degree is the total degree of the Φ_d dividing S(x).
"""

import logging
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from sync_search.bounds.polynomial import IntPolynomial, cyclotomic, divisors
from sync_search.errors import InvalidArgumentError

logger = logging.getLogger(__name__)

DEFAULT_M_MAX = 24


@dataclass(frozen=True)
class CyclicVector:
    bits: Tuple[int, ...]

    def __post_init__(self):
        bits = tuple(int(b) for b in self.bits)
        if not bits:
            raise InvalidArgumentError("cyclic vector needs length >= 1")
        if any(b not in (0, 1) for b in bits):
            raise InvalidArgumentError("cyclic vector entries must be 0 or 1")
        object.__setattr__(self, "bits", bits)

    @property
    def m(self) -> int:
        return len(self.bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def rotate(self, shift: int) -> "CyclicVector":
        shift %= self.m
        return CyclicVector(self.bits[shift:] + self.bits[:shift])

    def polynomial(self) -> IntPolynomial:
        return IntPolynomial(self.bits)


def cyclic_period(v: CyclicVector) -> int:
    """Least q dividing m such that rotating by q fixes v."""
    bits = v.bits
    for q in divisors(v.m):
        if bits[q:] + bits[:q] == bits:
            return q
    return v.m


def circulant_dim(v: CyclicVector) -> int:
    if v.weight == 0:
        raise InvalidArgumentError("circulant dimension of the zero vector is undefined here")
    poly = v.polynomial()
    gcd_degree = sum(
        cyclotomic(d).degree()
        for d in divisors(v.m)
        if poly.divisible_by(cyclotomic(d))
    )
    return v.m - gcd_degree


@lru_cache(maxsize=None)
def _necklaces(m: int) -> Dict[int, Tuple[Tuple[int, ...], ...]]:
    """Binary necklaces of length m (least rotations), grouped by weight."""
    found: Dict[int, List[Tuple[int, ...]]] = {}
    a = [0] * (m + 1)

    def generate(t: int, p: int) -> Iterator[Tuple[int, ...]]:
        if t > m:
            if m % p == 0:
                yield tuple(a[1:])
            return
        a[t] = a[t - p]
        yield from generate(t + 1, p)
        if a[t - p] == 0:
            a[t] = 1
            yield from generate(t + 1, t)

    for bits in generate(1, 1):
        found.setdefault(sum(bits), []).append(bits)
    return {weight: tuple(group) for weight, group in found.items()}


def necklaces(m: int, k: int) -> Tuple[CyclicVector, ...]:
    return tuple(CyclicVector(bits) for bits in _necklaces(m).get(k, ()))


def _check_weight(m: int, k: int, upper: int):
    if m < 1 or not 1 <= k <= upper:
        raise InvalidArgumentError(f"weight k={k} out of range for m={m}")


@lru_cache(maxsize=None)
def D(m: int, k: int) -> int:
    """Least circulant dimension over weight-k vectors of length m."""
    _check_weight(m, k, m)
    return min(circulant_dim(v) for v in necklaces(m, k))


@lru_cache(maxsize=None)
def Dstar(m: int, k: int) -> int:
    """Least value of m - period + circulant dimension over weight-k vectors."""
    _check_weight(m, k, m - 1)
    return min(m - cyclic_period(v) + circulant_dim(v) for v in necklaces(m, k))


@lru_cache(maxsize=None)
def sum_dstar(m: int) -> int:
    if m < 2:
        raise InvalidArgumentError(f"sum of D* needs m >= 2, got {m}")
    return sum(Dstar(m, k) for k in range(1, m))


def warm_cache(m_max: int = DEFAULT_M_MAX):
    """Fill the D* memo for every cycle length up to m_max before fanning out."""
    for m in range(2, m_max + 1):
        sum_dstar(m)
    logger.debug(f"✅ D* table ready up to m={m_max}")


def _check_cycle(n: int, m: int):
    if not 2 <= m <= n:
        raise InvalidArgumentError(f"cycle length m={m} must satisfy 2 <= m <= n={n}")


def theorem5_bound(n: int, m: int, level: int, s: int = 1, lemma2: bool = False) -> int:
    """
    Reset bound from a word of length s inducing a one-cluster map with
    cycle length m and the given level; lowered by m-1 under the unique-sink
    condition on the deepest tail states.
    """
    _check_cycle(n, m)
    if level < 0 or s < 1:
        raise InvalidArgumentError("level must be >= 0 and s >= 1")
    bound = s * (level + m - 2) * (m - 1) + (n + 1) * (m - 1) + s * level - sum_dstar(m)
    if lemma2:
        bound -= m - 1
    return bound


def prime_cycle_bound(n: int, m: int, level: int) -> int:
    """n - m + 1 + 2ℓ + (m - 2)(n + ℓ); coincides with theorem5_bound for prime m."""
    return n - m + 1 + 2 * level + (m - 2) * (n + level)


def corollary2_bound(n: int, m: int) -> int:
    _check_cycle(n, m)
    return math.floor(2 * n * m - 4 * m * math.log((m + 3) / 2) - n + m + 2)


def rough_estimate_bound(n: int, m: int) -> int:
    """Bound obtained from the weak estimate D*(m,k) >= ceil(m/k)."""
    _check_cycle(n, m)
    return math.floor(2 * n * m - 2 * m * math.log((m + 1) / 2) - n - 2 * m + 1)


def competitor_bounds(n: int, m: int, level: int) -> Tuple[int, int]:
    """
    The two earlier general one-cluster bounds, for side-by-side reporting:
    2nm - 3n - 4m + 2ℓ + 8 and floor(2nm - 2m ln((m+1)/2) - n - m).
    """
    _check_cycle(n, m)
    eq2 = 2 * n * m - 3 * n - 4 * m + 2 * level + 8
    eq3 = math.floor(2 * n * m - 2 * m * math.log((m + 1) / 2) - n - m)
    return eq2, eq3
