"""Closed-form constants: rational * pi^a * sqrt(m) * prod log(eps)^b * prod zeta(k)^c.

Every constant produced by the package lives in this multiplicative normal
form, with the square root argument kept squarefree and logarithm atoms
carried as exact data (a + b sqrt(D))/2, so equality is decidable and
evaluation at 200-bit precision is reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath as mp

EVAL_PRECISION_BITS = 200


def _squarefree_split(m: int) -> tuple[int, int]:
    """m = s^2 * f with f squarefree; returns (s, f).  Requires m > 0."""
    s, f = 1, 1
    d = 2
    while d * d <= m:
        e = 0
        while m % d == 0:
            m //= d
            e += 1
        s *= d ** (e // 2)
        if e % 2:
            f *= d
        d += 1
    return s, f * m


@dataclass(frozen=True)
class LogAtom:
    """log((a + b*sqrt(D)) / 2) for integers a, b and a nonsquare D > 1."""

    a: int
    b: int
    D: int

    def label(self) -> str:
        return f"log(({self.a}+{self.b}*sqrt({self.D}))/2)"

    def to_mpf(self) -> mp.mpf:
        return mp.log((self.a + self.b * mp.sqrt(self.D)) / 2)


@dataclass(frozen=True)
class SymbolicConstant:
    rational: Fraction = Fraction(1)
    pi_power: int = 0
    sqrt_arg: int = 1                                 # squarefree, >= 1
    log_terms: tuple[tuple[LogAtom, int], ...] = ()   # (atom, exponent)
    zeta_terms: tuple[tuple[int, int], ...] = ()      # (odd k >= 3, exponent)

    def __post_init__(self):
        assert self.sqrt_arg >= 1

    @staticmethod
    def from_rational(q) -> "SymbolicConstant":
        return SymbolicConstant(rational=Fraction(q))

    @staticmethod
    def zero() -> "SymbolicConstant":
        return SymbolicConstant(rational=Fraction(0))

    @staticmethod
    def pi(power: int = 1) -> "SymbolicConstant":
        return SymbolicConstant(pi_power=power)

    @staticmethod
    def sqrt(m: int) -> "SymbolicConstant":
        """sqrt(m) for m >= 1, with the square part pulled into the rational."""
        s, f = _squarefree_split(m)
        return SymbolicConstant(rational=Fraction(s), sqrt_arg=f)

    @staticmethod
    def log(atom: LogAtom, power: int = 1) -> "SymbolicConstant":
        return SymbolicConstant(log_terms=((atom, power),))

    @staticmethod
    def zeta_odd(k: int, power: int = 1) -> "SymbolicConstant":
        assert k >= 3 and k % 2 == 1
        return SymbolicConstant(zeta_terms=((k, power),))

    # -- arithmetic ---------------------------------------------------------

    def __mul__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        if self.rational == 0 or other.rational == 0:
            return SymbolicConstant.zero()
        rat = self.rational * other.rational
        # sqrt(f1)*sqrt(f2) = gcd-part^2-free combination
        f1, f2 = self.sqrt_arg, other.sqrt_arg
        s, f = _squarefree_split(f1 * f2)
        rat *= s
        logs: dict[LogAtom, int] = {}
        for atom, e in self.log_terms + other.log_terms:
            logs[atom] = logs.get(atom, 0) + e
        zetas: dict[int, int] = {}
        for k, e in self.zeta_terms + other.zeta_terms:
            zetas[k] = zetas.get(k, 0) + e
        return SymbolicConstant(
            rational=rat,
            pi_power=self.pi_power + other.pi_power,
            sqrt_arg=f,
            log_terms=tuple(sorted(((a, e) for a, e in logs.items() if e),
                                   key=lambda ae: (ae[0].D, ae[0].a, ae[0].b))),
            zeta_terms=tuple(sorted((k, e) for k, e in zetas.items() if e)),
        )

    def inverse(self) -> "SymbolicConstant":
        if self.rational == 0:
            raise ZeroDivisionError("symbolic constant is zero")
        # 1/sqrt(f) = sqrt(f)/f
        return SymbolicConstant(
            rational=1 / (self.rational * self.sqrt_arg),
            pi_power=-self.pi_power,
            sqrt_arg=self.sqrt_arg,
            log_terms=tuple((a, -e) for a, e in self.log_terms),
            zeta_terms=tuple((k, -e) for k, e in self.zeta_terms),
        )

    def __truediv__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        return self * other.inverse()

    def __add__(self, other: "SymbolicConstant") -> "SymbolicConstant":
        """Addition only when both terms share every transcendental part."""
        if not isinstance(other, SymbolicConstant):
            return NotImplemented
        if self.rational == 0:
            return other
        if other.rational == 0:
            return self
        if (self.pi_power, self.sqrt_arg, self.log_terms, self.zeta_terms) != \
           (other.pi_power, other.sqrt_arg, other.log_terms, other.zeta_terms):
            raise ValueError("cannot add symbolic constants of different shape: "
                             f"{self} vs {other}")
        return SymbolicConstant(self.rational + other.rational, self.pi_power,
                                self.sqrt_arg, self.log_terms, self.zeta_terms)

    def pow_int(self, e: int) -> "SymbolicConstant":
        out = SymbolicConstant.from_rational(1)
        base = self if e >= 0 else self.inverse()
        for _ in range(abs(e)):
            out = out * base
        return out

    def is_rational(self) -> bool:
        return (self.pi_power == 0 and self.sqrt_arg == 1
                and not self.log_terms and not self.zeta_terms)

    # -- output -------------------------------------------------------------

    def to_mpf(self) -> mp.mpf:
        with mp.workprec(EVAL_PRECISION_BITS):
            acc = mp.mpf(self.rational.numerator) / self.rational.denominator
            if self.pi_power:
                acc *= mp.pi ** self.pi_power
            if self.sqrt_arg != 1:
                acc *= mp.sqrt(self.sqrt_arg)
            for atom, e in self.log_terms:
                acc *= atom.to_mpf() ** e
            for k, e in self.zeta_terms:
                acc *= mp.zeta(k) ** e
            return acc

    def to_float(self) -> float:
        return float(self.to_mpf())

    def __str__(self) -> str:
        if self.rational == 0:
            return "0"
        num, den = [], []
        r = self.rational
        if abs(r.numerator) != 1 or (self.is_rational() and self.sqrt_arg == 1):
            num.append(str(abs(r.numerator)))
        elif not num:
            pass
        if r.denominator != 1:
            den.append(str(r.denominator))
        if self.pi_power > 0:
            num.append("pi" if self.pi_power == 1 else f"pi^{self.pi_power}")
        elif self.pi_power < 0:
            den.append("pi" if self.pi_power == -1 else f"pi^{-self.pi_power}")
        if self.sqrt_arg != 1:
            num.append(f"sqrt({self.sqrt_arg})")
        for atom, e in self.log_terms:
            tgt = num if e > 0 else den
            lab = atom.label()
            tgt.append(lab if abs(e) == 1 else f"{lab}^{abs(e)}")
        for k, e in self.zeta_terms:
            tgt = num if e > 0 else den
            lab = f"zeta({k})"
            tgt.append(lab if abs(e) == 1 else f"{lab}^{abs(e)}")
        if not num:
            num.append("1")
        s = "*".join(num)
        if den:
            d = "*".join(den)
            s = f"{s}/({d})" if len(den) > 1 else f"{s}/{d}"
        if r.numerator < 0:
            s = "-" + s
        return s

    def to_json(self) -> dict:
        return {
            "rational": f"{self.rational.numerator}/{self.rational.denominator}",
            "pi_power": self.pi_power,
            "sqrt_arg": self.sqrt_arg,
            "log_terms": [
                {"a": a.a, "b": a.b, "D": a.D, "power": e}
                for a, e in self.log_terms
            ],
            "zeta_terms": [{"k": k, "power": e} for k, e in self.zeta_terms],
            "string": str(self),
            "float": self.to_float(),
        }
