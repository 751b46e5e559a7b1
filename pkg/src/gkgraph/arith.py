"""Exact integer arithmetic: primality, factorization, multiplicative orders,
cyclotomic values, and primitive prime divisor (Zsigmondy) classes.

Everything here is deterministic: the Pollard-Brent fallback draws its
parameters from a seeded generator, so repeated runs factor identically.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt


class FactorizationError(RuntimeError):
    """No factoring method succeeded within the configured effort."""


DEFAULT_TRIAL_BOUND = 10**6
_DEFAULT_SEED = 0x6B67  # overridable via set_fallback_seed (CLI: GK_SEED)
_MAX_RHO_ROUNDS = 64

_fallback_seed = _DEFAULT_SEED


def set_fallback_seed(seed: int) -> None:
    """Set the seed used by the Pollard-Brent fallback when none is passed."""
    global _fallback_seed
    _fallback_seed = seed


# ---------------------------------------------------------------------------
# primality
# ---------------------------------------------------------------------------

# Deterministic for n < 2^64 (strong-pseudoprime battery); larger inputs get
# the same battery plus a strong Lucas test, i.e. a Baillie-PSW-style check.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_SIXTY_FOUR_BIT = 1 << 64


def _miller_rabin_round(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def _jacobi(a: int, n: int) -> int:
    a %= n
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def _strong_lucas(n: int) -> bool:
    # Selfridge parameter search; n is odd, > 37, and not a perfect square.
    d = 5
    while _jacobi(d, n) != -1:
        d = -(d + 2) if d > 0 else -(d - 2)
    p, q = 1, (1 - d) // 4

    k = n + 1
    s = (k & -k).bit_length() - 1
    m = k >> s

    u, v, qk = 1, p, q
    for bit in bin(m)[3:]:
        u = u * v % n
        v = (v * v - 2 * qk) % n
        qk = qk * qk % n
        if bit == "1":
            u, v = (p * u + v) % n, (d * u + p * v) % n
            if u % 2:
                u += n
            if v % 2:
                v += n
            u, v = u // 2 % n, v // 2 % n
            qk = qk * q % n
    if u == 0 or v == 0:
        return True
    for _ in range(s - 1):
        v = (v * v - 2 * qk) % n
        if v == 0:
            return True
        qk = qk * qk % n
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test for every input this package produces."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d = n - 1
    r = (d & -d).bit_length() - 1
    d >>= r
    for a in _MR_BASES:
        if not _miller_rabin_round(n, a, d, r):
            return False
    if n < _SIXTY_FOUR_BIT:
        return True
    root = isqrt(n)
    if root * root == n:
        return False
    return _strong_lucas(n)


# ---------------------------------------------------------------------------
# factored values
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FactoredInteger:
    """A positive integer together with its complete prime factorization."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        if self.value < 1:
            raise ValueError(f"not a positive integer: {self.value}")
        prod = 1
        prev = 1
        for prime, exponent in self.factors:
            if prime <= prev:
                raise ValueError("factors must be sorted by strictly increasing prime")
            if exponent < 1:
                raise ValueError(f"exponent must be positive: {prime}^{exponent}")
            if not is_prime(prime):
                raise ValueError(f"not a prime: {prime}")
            prod *= prime**exponent
            prev = prime
        if prod != self.value:
            raise ValueError(f"factors recompose to {prod}, not {self.value}")

    @property
    def prime_set(self) -> frozenset[int]:
        return frozenset(prime for prime, _ in self.factors)

    @staticmethod
    def from_factor_map(factors: dict[int, int]) -> "FactoredInteger":
        value = 1
        for prime, exponent in factors.items():
            value *= prime**exponent
        return FactoredInteger(value, tuple(sorted(factors.items())))


@dataclass(frozen=True)
class PrimePower:
    """A field parameter q = p^k."""

    p: int
    k: int
    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"base is not prime: {self.p}")
        if self.k < 1:
            raise ValueError(f"exponent must be positive: {self.k}")
        if self.q != self.p**self.k or self.q < 2:
            raise ValueError(f"{self.q} != {self.p}^{self.k}")

    @staticmethod
    def of(p: int, k: int) -> "PrimePower":
        return PrimePower(p, k, p**k)

    @staticmethod
    def from_q(q: int) -> "PrimePower":
        """Recognize q as a prime power, or raise ValueError."""
        if q < 2:
            raise ValueError(f"not a prime power: {q}")
        fac = factorize(q).factors
        if len(fac) != 1:
            raise ValueError(f"not a prime power: {q}")
        p, k = fac[0]
        return PrimePower(p, k, q)

    def __str__(self) -> str:
        return str(self.q)


# ---------------------------------------------------------------------------
# factorization
# ---------------------------------------------------------------------------

def _pollard_brent(n: int, rng: random.Random) -> int:
    """One non-trivial factor of composite odd n, or raise FactorizationError."""
    for _ in range(_MAX_RHO_ROUNDS):
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationError(f"rho gave up on {n}")


def _split_completely(n: int, factors: dict[int, int], seed: int) -> None:
    """Split n (coprime to everything already found) into primes, into factors."""
    rng = random.Random(seed)
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_prime(m):
            factors[m] = factors.get(m, 0) + 1
            continue
        g = _pollard_brent(m, rng)
        stack.append(g)
        stack.append(m // g)


def factorize(n: int, *, seed: int | None = None,
              trial_bound: int = DEFAULT_TRIAL_BOUND) -> FactoredInteger:
    """Complete prime factorization of n >= 1; factorize(1) has no factors.

    Trial division up to trial_bound, then deterministic-seeded Pollard-Brent
    on whatever remains.  Raises FactorizationError only if the fallback gives
    up, which no audit input triggers.
    """
    if n < 1:
        raise ValueError(f"not a positive integer: {n}")
    value = n
    factors: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d * d <= n and d <= trial_bound:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += wheel[i]
        i = (i + 1) % 8
    if n > 1:
        if d * d > n:
            factors[n] = factors.get(n, 0) + 1
        else:
            _split_completely(n, factors, _fallback_seed if seed is None else seed)
    result = FactoredInteger.from_factor_map(factors)
    assert result.value == value
    return result


# ---------------------------------------------------------------------------
# multiplicative orders
# ---------------------------------------------------------------------------

def multiplicative_order(n: int, r: int) -> int:
    """Smallest m >= 1 with n^m = 1 (mod r), for an odd prime r not dividing n."""
    if r == 2 or not is_prime(r):
        raise ValueError(f"modulus must be an odd prime: {r}")
    if n % r == 0:
        raise ValueError(f"{r} divides {n}")
    m = r - 1
    for p, _ in factorize(r - 1).factors:
        while m % p == 0 and pow(n, m // p, r) == 1:
            m //= p
    return m


def e_value(r: int, n: int) -> int:
    """The order function e(r, n): multiplicative order for odd r; for r = 2
    it is 1 when n = 1 (mod 4) and 2 otherwise (n must be odd)."""
    if r == 2:
        if n % 2 == 0:
            raise ValueError(f"e(2, n) is only defined for odd n, got {n}")
        return 1 if n % 4 == 1 else 2
    return multiplicative_order(n, r)


def _order_dividing(n: int, r: int, bound: int) -> int | None:
    """True multiplicative order of n mod r when it divides bound, else None."""
    order = None
    for d in sorted(_divisors(bound)):
        if pow(n, d, r) == 1:
            order = d
            break
    return order


# ---------------------------------------------------------------------------
# cyclotomic values
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    m = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            m = -m
        d += 1
    if n > 1:
        m = -m
    return m


def cyclotomic_value(d: int, q: int) -> int:
    """Value of the d-th cyclotomic polynomial at q (q >= 2, d >= 1)."""
    if d < 1:
        raise ValueError(f"index must be positive: {d}")
    if q < 2:
        raise ValueError(f"argument must be at least 2: {q}")
    num = 1
    den = 1
    for e in _divisors(d):
        mu = _mobius(d // e)
        if mu == 1:
            num *= q**e - 1
        elif mu == -1:
            den *= q**e - 1
    assert num % den == 0
    return num // den


@lru_cache(maxsize=None)
def factor_cyclotomic(d: int, q: int) -> FactoredInteger:
    """Factorization of cyclotomic_value(d, q).

    For d >= 3 every prime factor is either = 1 (mod d) or equal to the
    largest prime divisor of d, so trial division only needs to walk the
    residue class 1 mod d after stripping that one candidate.
    """
    value = cyclotomic_value(d, q)
    if d <= 2:
        return factorize(value)
    factors: dict[int, int] = {}
    remaining = value
    intrinsic = max(p for p, _ in factorize(d).factors)
    while remaining % intrinsic == 0:
        factors[intrinsic] = factors.get(intrinsic, 0) + 1
        remaining //= intrinsic
    c = d + 1
    while c * c <= remaining and c <= DEFAULT_TRIAL_BOUND:
        while remaining % c == 0:
            factors[c] = factors.get(c, 0) + 1
            remaining //= c
        c += d
    if remaining > 1:
        if c * c > remaining:
            factors[remaining] = factors.get(remaining, 0) + 1
        else:
            _split_completely(remaining, factors, _fallback_seed)
    result = FactoredInteger.from_factor_map(factors)
    assert result.value == value
    return result


# ---------------------------------------------------------------------------
# Zsigmondy classes
# ---------------------------------------------------------------------------

_ZSIGMONDY_EXCEPTIONS = frozenset({(2, 1), (3, 1), (2, 6)})


def zsigmondy_exists(q: int, m: int) -> bool:
    """Whether q^m - 1 has a primitive prime divisor (q >= 2, m >= 1)."""
    if q < 2 or m < 1:
        raise ValueError(f"need q >= 2 and m >= 1, got ({q}, {m})")
    return (q, m) not in _ZSIGMONDY_EXCEPTIONS


@lru_cache(maxsize=None)
def primitive_prime_divisors(q: int, i: int) -> frozenset[int]:
    """The set of primes r dividing q^i - 1 with e(r, q) = i."""
    if q < 2 or i < 1:
        raise ValueError(f"need q >= 2 and i >= 1, got ({q}, {i})")
    if i <= 2:
        candidates = factorize(q - 1 if i == 1 else q + 1).prime_set
    else:
        candidates = factor_cyclotomic(i, q).prime_set
    result = set()
    for r in candidates:
        if r == 2:
            e = 1 if q % 4 == 1 else 2
        else:
            # r | q^i - 1, so the true order divides i
            e = _order_dividing(q, r, i)
        if e == i:
            result.add(r)
    if bool(result) != zsigmondy_exists(q, i):
        raise RuntimeError(
            f"primitive divisor existence disagrees with the known exception "
            f"list at (q={q}, i={i}): computed {sorted(result)}"
        )
    return frozenset(result)
