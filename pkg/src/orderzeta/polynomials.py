"""Monic integer polynomials: parsing, resultants, factorization mod p.

Everything here is exact.  Polynomials are stored constant-term-first, so
x^2 + 1 is (1, 0, 1).  The CLI convention (highest-degree-first, comma
separated) is handled by parse_poly.
"""
from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class IntPoly:
    """A monic polynomial with integer coefficients, constant term first."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) < 2:
            raise ValueError("polynomial must have degree >= 1")
        if self.coeffs[-1] != 1:
            raise ValueError("polynomial must be monic")
        if not all(isinstance(c, int) for c in self.coeffs):
            raise ValueError("coefficients must be integers")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        # Horner, works for int / Fraction / ring elements with + and *.
        acc = self.coeffs[-1]
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + c
        return acc

    def derivative(self) -> tuple[int, ...]:
        return tuple(i * c for i, c in enumerate(self.coeffs) if i > 0)

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            if i == 0:
                terms.append(f"{c:+d}")
            else:
                xs = "x" if i == 1 else f"x^{i}"
                if c == 1:
                    terms.append(f"+{xs}")
                elif c == -1:
                    terms.append(f"-{xs}")
                else:
                    terms.append(f"{c:+d}*{xs}")
        s = "".join(terms)
        return s[1:] if s.startswith("+") else s


def parse_poly(text: str) -> IntPoly:
    """Parse comma-separated coefficients, highest degree first.

    "1,0,1" -> x^2 + 1.  Raises ValueError for malformed input or a
    non-monic leading coefficient.
    """
    parts = [p.strip() for p in text.split(",")]
    if any(p == "" for p in parts):
        raise ValueError(f"malformed coefficient list: {text!r}")
    try:
        hi_first = [int(p) for p in parts]
    except ValueError as exc:
        raise ValueError(f"malformed coefficient list: {text!r}") from exc
    if len(hi_first) < 2:
        raise ValueError("need at least degree 1")
    if hi_first[0] != 1:
        raise ValueError(f"leading coefficient must be 1, got {hi_first[0]}")
    return IntPoly(tuple(reversed(hi_first)))


def poly_mul(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai == 0:
            continue
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return tuple(out)


def poly_trim(a) -> tuple[int, ...]:
    a = list(a)
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return tuple(a)


def resultant(a: tuple[int, ...], b: tuple[int, ...]) -> int:
    """Resultant of two integer polynomials via the Sylvester determinant."""
    a, b = poly_trim(a), poly_trim(b)
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return a[0] ** db
    if db == 0:
        return b[0] ** da
    m = da + db
    rows = []
    for i in range(db):  # rows of a-coefficients
        row = [0] * m
        for j, c in enumerate(reversed(a)):
            row[i + j] = c
        rows.append(row)
    for i in range(da):
        row = [0] * m
        for j, c in enumerate(reversed(b)):
            row[i + j] = c
        rows.append(row)
    det = _det_fraction([[Fraction(x) for x in row] for row in rows])
    assert det.denominator == 1
    return int(det)


def _det_fraction(mat: list[list[Fraction]]) -> Fraction:
    n = len(mat)
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if mat[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            mat[col], mat[piv] = mat[piv], mat[col]
            det = -det
        det *= mat[col][col]
        inv = 1 / mat[col][col]
        for r in range(col + 1, n):
            if mat[r][col] == 0:
                continue
            f = mat[r][col] * inv
            for c in range(col, n):
                mat[r][c] -= f * mat[col][c]
    return det


def discriminant(poly: IntPoly) -> int:
    """disc = (-1)^(n(n-1)/2) Res(chi, chi') for monic chi."""
    n = poly.degree
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    return sign * resultant(poly.coeffs, poly.derivative())


def companion_matrix(poly: IntPoly) -> list[list[int]]:
    """Companion matrix acting on the power basis: last column -coeffs."""
    n = poly.degree
    mat = [[0] * n for _ in range(n)]
    for i in range(1, n):
        mat[i][i - 1] = 1
    for i in range(n):
        mat[i][n - 1] = -poly.coeffs[i]
    return mat


# ---------------------------------------------------------------------------
# arithmetic in F_p[x]  (dense tuples, constant term first, normalized monic
# where stated)

def _fp_trim(a: list[int], p: int) -> list[int]:
    a = [x % p for x in a]
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _fp_trim(out, p)


def _fp_divmod(a, b, p):
    a = list(a)
    b = _fp_trim(list(b), p)
    if not b:
        raise ZeroDivisionError
    inv = pow(b[-1], -1, p)
    q = [0] * max(0, len(a) - len(b) + 1)
    while len(a) >= len(b) and _fp_trim(a, p):
        a = _fp_trim(a, p)
        if len(a) < len(b):
            break
        d = len(a) - len(b)
        c = (a[-1] * inv) % p
        q[d] = c
        for i, bi in enumerate(b):
            a[i + d] = (a[i + d] - c * bi) % p
        a = _fp_trim(a, p)
    return _fp_trim(q, p), _fp_trim(a, p)


def _fp_gcd(a, b, p):
    a, b = _fp_trim(list(a), p), _fp_trim(list(b), p)
    while b:
        _, r = _fp_divmod(a, b, p)
        a, b = b, r
    if a:
        inv = pow(a[-1], -1, p)
        a = [(x * inv) % p for x in a]
    return a


def _fp_powmod(a, e, mod, p):
    result = [1]
    base = _fp_divmod(a, mod, p)[1]
    while e:
        if e & 1:
            result = _fp_divmod(_fp_mul(result, base, p), mod, p)[1]
        base = _fp_divmod(_fp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _fp_deriv(a, p):
    return _fp_trim([(i * c) % p for i, c in enumerate(a) if i > 0] or [0], p)


def _fp_monic(a, p):
    a = _fp_trim(list(a), p)
    inv = pow(a[-1], -1, p)
    return [(x * inv) % p for x in a]


def _squarefree_parts(f, p):
    """Yield (g, multiplicity) with g squarefree, f = prod g^mult."""
    # standard squarefree decomposition over F_p, including p-th power descent
    mult = 1
    stack = [(list(f), 1)]
    out = []
    while stack:
        f, mult = stack.pop()
        f = _fp_monic(f, p)
        if len(f) == 1:
            continue
        df = _fp_deriv(f, p)
        if not df:
            # f = g(x^p); take p-th root (coefficients are already p-th powers
            # in F_p, where c^p = c)
            g = [f[i] for i in range(0, len(f), p)]
            stack.append((g, mult * p))
            continue
        c = _fp_gcd(f, df, p)
        w = _fp_divmod(f, c, p)[0]
        i = 1
        while len(w) > 1:
            y = _fp_gcd(w, c, p)
            fac = _fp_divmod(w, y, p)[0]
            if len(fac) > 1:
                out.append((tuple(fac), mult * i))
            w = y
            c = _fp_divmod(c, y, p)[0]
            i += 1
        if len(c) > 1:
            stack.append((c, mult))
    return out


def _distinct_degree(f, p):
    """Split squarefree monic f into products of equal-degree factors."""
    out = []
    x = [0, 1]
    h = list(x)
    d = 0
    f = list(f)
    while len(f) - 1 > 2 * d:
        d += 1
        h = _fp_powmod(h, p, f, p)
        hx = _fp_trim([(a - b) % p for a, b in
                       zip(h + [0] * len(x), x + [0] * len(h))], p)
        g = _fp_gcd(f, hx, p)
        if len(g) > 1:
            out.append((tuple(g), d))
            f = _fp_divmod(f, g, p)[0]
            h = _fp_divmod(h, f, p)[1]
    if len(f) > 1:
        out.append((tuple(f), len(f) - 1))
    return out


def _equal_degree_split(f, d, p, rng):
    """Cantor-Zassenhaus with a deterministic rng; returns list of factors."""
    n = len(f) - 1
    if n == d:
        return [tuple(f)]
    while True:
        a = [rng.randrange(p) for _ in range(n)]
        a = _fp_trim(a, p)
        if len(a) <= 1:
            continue
        g = _fp_gcd(f, a, p)
        if 1 < len(g) < len(f):
            left, right = g, _fp_divmod(f, g, p)[0]
        else:
            if p == 2:
                # trace map T(a) = a + a^2 + ... + a^(2^(d-1))
                t = list(a)
                acc = list(a)
                for _ in range(d - 1):
                    acc = _fp_powmod(acc, 2, f, p)
                    t = _fp_trim([(u + v) % p for u, v in
                                  zip(t + [0] * len(acc), acc + [0] * len(t))], p)
                g = _fp_gcd(f, t, p)
            else:
                b = _fp_powmod(a, (p ** d - 1) // 2, f, p)
                b = _fp_trim([(c - (1 if i == 0 else 0)) % p
                              for i, c in enumerate(b + [0])], p)
                g = _fp_gcd(f, b, p)
            if not (1 < len(g) < len(f)):
                continue
            left, right = g, _fp_divmod(f, g, p)[0]
        return (_equal_degree_split(_fp_monic(left, p), d, p, rng)
                + _equal_degree_split(_fp_monic(right, p), d, p, rng))


@dataclass(frozen=True)
class ModPFactorization:
    """Factorization of a monic polynomial over F_p.

    factors is a tuple of (coeffs, multiplicity), each coeffs monic,
    constant term first, sorted by (degree, coeffs) for determinism.
    """

    p: int
    factors: tuple[tuple[tuple[int, ...], int], ...]

    def multiply_back(self) -> tuple[int, ...]:
        acc = (1,)
        for coeffs, mult in self.factors:
            for _ in range(mult):
                acc = poly_mul(acc, coeffs)
        return acc


def factor_mod_p(poly: IntPoly, p: int) -> ModPFactorization:
    """Full factorization of poly mod p (squarefree + distinct-degree + CZ).

    The equal-degree splitting uses a rng seeded from (p, coeffs), so the
    output is deterministic.
    """
    if p < 2:
        raise ValueError("p must be a prime >= 2")
    seed_material = f"{p}:{poly.coeffs}".encode()
    rng = random.Random(int.from_bytes(
        hashlib.sha256(seed_material).digest()[:8], "big"))
    f = _fp_monic(list(poly.coeffs), p)
    found: list[tuple[tuple[int, ...], int]] = []
    for g, mult in _squarefree_parts(f, p):
        for h, d in _distinct_degree(list(g), p):
            for irr in _equal_degree_split(list(h), d, p, rng):
                found.append((tuple(irr), mult))
    found.sort(key=lambda fm: (len(fm[0]), fm[0]))
    return ModPFactorization(p=p, factors=tuple(found))


# ---------------------------------------------------------------------------
# irreducibility over Q

@dataclass(frozen=True)
class IrreducibilityResult:
    status: str            # "decided" | "inconclusive"
    irreducible: bool | None
    witness: str


def _rational_root(poly: IntPoly) -> int | None:
    c0 = poly.coeffs[0]
    if c0 == 0:
        return 0
    for r in sorted({d for d in range(1, abs(c0) + 1) if c0 % d == 0}):
        for s in (r, -r):
            if poly(s) == 0:
                return s
    return None


def _quartic_quadratic_split(poly: IntPoly):
    """Find (x^2+ax+b)(x^2+cx+d) = poly over Z, or None."""
    c0, c1, c2, c3, _ = poly.coeffs
    if c0 == 0:
        return None
    divs = [d for d in range(1, abs(c0) + 1) if c0 % d == 0]
    for b in sorted(set(divs + [-d for d in divs])):
        if c0 % b != 0:
            continue
        d = c0 // b
        # a + c = c3, ac = c2 - b - d  ->  a, c roots of z^2 - c3 z + (c2-b-d)
        s, prod = c3, c2 - b - d
        disc = s * s - 4 * prod
        if disc < 0:
            continue
        r = _isqrt(disc)
        if r * r != disc or (s + r) % 2 != 0:
            continue
        a, c = (s + r) // 2, (s - r) // 2
        if a * d + b * c == c1:
            return (b, a), (d, c)
    return None


def _isqrt(x: int) -> int:
    import math
    return math.isqrt(x)


def _subset_sums(degrees: list[int]) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def is_irreducible(poly: IntPoly, prime_budget: int = 200) -> IrreducibilityResult:
    """Decide irreducibility over Q with a checkable certificate.

    Degree <= 4 is decided exactly (rational roots / quadratic splits).
    Beyond that, mod-p factorization degree patterns over primes up to
    prime_budget either certify irreducibility (no common proper factor
    degree) or decide reducibility; otherwise status is "inconclusive".
    """
    n = poly.degree
    if n == 1:
        return IrreducibilityResult("decided", True, "degree 1")
    r = _rational_root(poly)
    if r is not None:
        return IrreducibilityResult("decided", False, f"rational root {r}")
    if n <= 3:
        return IrreducibilityResult("decided", True, "no rational root, degree <= 3")
    if n == 4:
        split = _quartic_quadratic_split(poly)
        if split is not None:
            (b, a), _ = split
            return IrreducibilityResult(
                "decided", False, f"quadratic factor x^2{a:+d}x{b:+d}")
        return IrreducibilityResult(
            "decided", True, "no rational root, no quadratic split")
    disc = discriminant(poly)
    possible = set(range(1, n))
    p = 2
    while p <= prime_budget:
        if disc % p != 0:
            fac = factor_mod_p(poly, p)
            degs = [len(c) - 1 for c, _ in fac.factors]
            if len(degs) == 1:
                return IrreducibilityResult(
                    "decided", True, f"irreducible mod {p}")
            possible &= _subset_sums(degs)
            possible.discard(0)
            possible.discard(n)
            if not possible:
                return IrreducibilityResult(
                    "decided", True, "incompatible factor degrees mod primes")
        p = _next_prime(p)
    return IrreducibilityResult("inconclusive", None,
                                f"no certificate below {prime_budget}")


def _next_prime(p: int) -> int:
    q = p + 1
    while True:
        if all(q % d for d in range(2, _isqrt(q) + 1)):
            return q
        q += 1


def primes_up_to(bound: int) -> list[int]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0:2] = b"\x00\x00"
    for i in range(2, _isqrt(bound) + 1):
        if sieve[i]:
            sieve[i * i:: i] = b"\x00" * len(sieve[i * i:: i])
    return [i for i in range(bound + 1) if sieve[i]]
