"""Trinomial and dense-polynomial primitives.

A trinomial is z^n + a z^m + b with 0 < m < n and a, b nonzero (possibly
complex).  Dense integer polynomials are stored as tuples of coefficients in
ascending degree order: [c0, c1, ..., cn] is c0 + c1 z + ... + cn z^n, with a
nonzero leading coefficient unless the polynomial is zero (empty tuple).

Sign-normalised families, obtained from integer trinomials with b = +/-1 by an
optional z -> -z substitution:

    R:  z^n - a z^m + 1   (a > 0, m odd, n even)
    S:  z^n + a z^m - 1   (a > 0, n odd)
    T:  z^n - a z^m - 1   (a > 0)

Complex roots are found by Aberth-Ehrlich simultaneous iteration with a
trinomial-aware initialisation (root moduli cluster on the two circles
(|b|/|a|)^(1/m) and |a|^(1/(n-m)) when |a| dominates), followed by one Newton
polish and residual-based certification.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from math import gcd
from typing import Iterable, Union

import numpy as np

from .errors import (
    ClassificationMismatch,
    ConvergenceFailure,
    NonIntegerCoefficient,
    NotRepresentable,
    ParityViolated,
)

__all__ = [
    "TrinomialSpec",
    "FamilyForm",
    "IntPolynomial",
    "RootSet",
    "ClassifiedRealRoots",
    "RootConfig",
    "evaluate",
    "to_dense",
    "normalize",
    "all_roots",
    "classify_real_roots",
    "is_reciprocal",
]


def _is_int_like(x) -> bool:
    if isinstance(x, bool):
        return False
    if isinstance(x, int):
        return True
    if isinstance(x, float):
        return x.is_integer()
    if isinstance(x, complex):
        return x.imag == 0 and float(x.real).is_integer()
    return False


def _as_int(x) -> int:
    if not _is_int_like(x):
        raise NonIntegerCoefficient(f"expected an integer coefficient, got {x!r}")
    if isinstance(x, complex):
        return int(x.real)
    return int(x)


@dataclass(frozen=True)
class TrinomialSpec:
    """The trinomial z^n + a z^m + b."""

    n: int
    m: int
    a: complex
    b: complex

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.m, int)):
            raise TypeError("n and m must be integers")
        if not 0 < self.m < self.n:
            raise ValueError(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if self.a == 0 or self.b == 0:
            raise ValueError("a and b must be nonzero")

    @property
    def gcd_mn(self) -> int:
        return gcd(self.m, self.n)

    @property
    def degree(self) -> int:
        return self.n

    def is_coprime(self) -> bool:
        return self.gcd_mn == 1


@dataclass(frozen=True)
class FamilyForm:
    """One of the sign-normalised forms R, S, T with positive coefficient a."""

    family: str
    n: int
    m: int
    a: float

    def __post_init__(self):
        if self.family not in ("R", "S", "T"):
            raise ValueError(f"family must be 'R', 'S' or 'T', got {self.family!r}")
        if not 0 < self.m < self.n:
            raise ValueError(f"need 0 < m < n, got m={self.m}, n={self.n}")
        if not self.a > 0:
            raise ValueError("a must be positive")
        if self.family == "R" and (self.m % 2 == 0 or self.n % 2 == 1):
            raise ParityViolated("R form requires m odd and n even")
        if self.family == "S" and self.n % 2 == 0:
            raise ParityViolated("S form requires n odd")

    @property
    def gcd_mn(self) -> int:
        return gcd(self.m, self.n)

    def signs(self) -> tuple[int, int]:
        """Return (sign of middle coefficient, sign of constant term)."""
        return {"R": (-1, 1), "S": (1, -1), "T": (-1, -1)}[self.family]

    def as_trinomial(self) -> TrinomialSpec:
        sa, sb = self.signs()
        a = sa * self.a
        if _is_int_like(self.a):
            a = int(round(float(self.a))) * sa
        return TrinomialSpec(self.n, self.m, a, sb)

    def __call__(self, x: float) -> float:
        """Evaluate the family polynomial, factored to dodge overflow at the
        bracketing endpoints (x^m may be huge while the value is moderate)."""
        sa, sb = self.signs()
        return x**self.m * (x ** (self.n - self.m) + sa * self.a) + sb


@dataclass(frozen=True)
class IntPolynomial:
    """Dense integer polynomial, coefficients ascending, trimmed."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if any(not isinstance(c, int) or isinstance(c, bool) for c in self.coeffs):
            raise NonIntegerCoefficient("all coefficients must be Python ints")
        if self.coeffs and self.coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero (use IntPolynomial.of)")

    @classmethod
    def of(cls, coeffs: Iterable[int]) -> "IntPolynomial":
        """Build from an ascending coefficient iterable, trimming leading zeros."""
        cs = [_as_int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        return cls(tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPolynomial":
        return IntPolynomial.of(k * c for k, c in enumerate(self.coeffs) if k > 0) \
            if len(self.coeffs) > 1 else IntPolynomial(())

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero or other.is_zero:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci:
                for j, cj in enumerate(other.coeffs):
                    out[i + j] += ci * cj
        return IntPolynomial(tuple(out))

    def nonzero_terms(self) -> list[tuple[int, int]]:
        """(exponent, coefficient) pairs for nonzero coefficients."""
        return [(k, c) for k, c in enumerate(self.coeffs) if c]


@dataclass(frozen=True)
class RootSet:
    """All complex roots of a polynomial with a residual-based error bound.

    ``residual_bound`` is max over roots of deg * (|P(z)| + noise) / |P'(z)|,
    a first-order estimate of the distance to the true root; the noise term is
    the float evaluation floor of P, which keeps the estimate honest at
    multiple roots.  ``certified`` is set when the bound is below the
    configured certification tolerance.
    """

    roots: tuple[complex, ...]
    residual_bound: float
    certified: bool
    iterations: int

    def __len__(self) -> int:
        return len(self.roots)

    def max_modulus(self) -> float:
        return max(abs(r) for r in self.roots)


@dataclass(frozen=True)
class ClassifiedRealRoots:
    """Labelled real roots of a family form (labels r1, r2, s1..s3, t1..t3)."""

    family: FamilyForm
    entries: tuple[tuple[str, float], ...]

    @property
    def count(self) -> int:
        return len(self.entries)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.entries)

    @property
    def values(self) -> tuple[float, ...]:
        return tuple(value for _, value in self.entries)

    def __getitem__(self, label: str) -> float:
        for name, value in self.entries:
            if name == label:
                return value
        raise KeyError(label)


@dataclass(frozen=True)
class RootConfig:
    """Tuning knobs for the simultaneous root iteration."""

    max_iter: int = 512
    tol: float = 1e-14
    cert_tol: float = 1e-6


# ----------------------------------------------------------------------------
# evaluation / conversion

def _pow_by_squaring(z: complex, e: int) -> complex:
    acc = 1.0 + 0.0j if isinstance(z, complex) else 1.0
    base = z
    while e:
        if e & 1:
            acc = acc * base
        base = base * base
        e >>= 1
    return acc


def evaluate(spec: TrinomialSpec, z: complex) -> complex:
    """Evaluate z^n + a z^m + b, powers via exponentiation by squaring.

    z^n is formed as z^m * z^(n-m) so both powers share the cheap path.
    """
    zm = _pow_by_squaring(z, spec.m)
    zn = zm * _pow_by_squaring(z, spec.n - spec.m)
    return zn + spec.a * zm + spec.b


def to_dense(spec: TrinomialSpec) -> IntPolynomial:
    """Dense integer coefficient vector of the trinomial.

    Raises NonIntegerCoefficient unless a and b are integers.
    """
    a = _as_int(spec.a)
    b = _as_int(spec.b)
    coeffs = [0] * (spec.n + 1)
    coeffs[0] = b
    coeffs[spec.m] = a
    coeffs[spec.n] = 1
    return IntPolynomial(tuple(coeffs))


def normalize(n: int, m: int, a: int, b: int) -> tuple[FamilyForm, bool]:
    """Rewrite z^n + a z^m + b (integer a != 0, b = +/-1) as an R/S/T form.

    Returns the form and whether a z -> -z substitution was applied.  The
    substitution negates the roots, so measures and the house are unchanged.
    """
    a = _as_int(a)
    b = _as_int(b)
    if a == 0 or b not in (-1, 1):
        raise ValueError("need a nonzero integer a and b = +/-1")
    if not 0 < m < n:
        raise ValueError(f"need 0 < m < n, got m={m}, n={n}")

    def build(mid_sign: int, const: int, flipped: bool) -> tuple[FamilyForm, bool]:
        # mid_sign is the sign carried by |a| in the rewritten polynomial
        if const == 1:
            if mid_sign < 0 and m % 2 == 1 and n % 2 == 0:
                return FamilyForm("R", n, m, abs(a)), flipped
        else:
            if mid_sign > 0 and n % 2 == 1:
                return FamilyForm("S", n, m, abs(a)), flipped
            if mid_sign < 0:
                return FamilyForm("T", n, m, abs(a)), flipped
        raise NotRepresentable(
            f"z^{n} + {a} z^{m} + {b} matches none of the R/S/T forms"
        )

    sign_a = 1 if a > 0 else -1
    try:
        return build(sign_a, b, False)
    except NotRepresentable:
        pass
    # z -> -z, multiplied by (-1)^n to stay monic
    flip_mid = sign_a * (-1 if (m + n) % 2 else 1)
    flip_const = b * (-1 if n % 2 else 1)
    return build(flip_mid, flip_const, True)


# ----------------------------------------------------------------------------
# complex roots

def _poly_arrays(p: Union[IntPolynomial, TrinomialSpec]):
    if isinstance(p, TrinomialSpec):
        coeffs = np.zeros(p.n + 1, dtype=complex)
        coeffs[0] = p.b
        coeffs[p.m] = p.a
        coeffs[p.n] = 1.0
        return coeffs, p
    coeffs = np.asarray([complex(c) for c in p.coeffs], dtype=complex)
    return coeffs, None


def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
    acc = np.full_like(z, coeffs[-1])
    for c in coeffs[-2::-1]:
        acc = acc * z + c
    return acc


def _initial_points(coeffs: np.ndarray, spec: TrinomialSpec | None) -> np.ndarray:
    n = len(coeffs) - 1
    if spec is not None and abs(spec.a) > abs(spec.b) + 1:
        # roots cluster near the two circles; seed with the exact proto-roots
        # of a z^m + b = 0 and z^(n-m) + a = 0
        m, d = spec.m, spec.n - spec.m
        inner_c = -spec.b / spec.a
        outer_c = -complex(spec.a)
        r_in = abs(inner_c) ** (1.0 / m)
        r_out = abs(outer_c) ** (1.0 / d)
        th_in = cmath.phase(inner_c)
        th_out = cmath.phase(outer_c)
        pts = [r_in * cmath.exp(1j * (th_in + 2 * math.pi * j) / m) for j in range(m)]
        pts += [r_out * cmath.exp(1j * (th_out + 2 * math.pi * j) / d) for j in range(d)]
        return np.asarray(pts, dtype=complex)
    mags = np.abs(coeffs)
    lead = mags[-1]
    hi = 1.0 + np.max(mags[:-1]) / lead
    lo = mags[0] / (mags[0] + np.max(mags[1:])) if mags[0] > 0 else 0.25
    radius = math.sqrt(max(lo, 1e-6) * hi)
    angles = 2 * math.pi * np.arange(n) / n + 0.7 / n + 0.39996
    radii = radius * (1.0 + 0.06 * np.cos(3.7 * np.arange(n)))
    return radii * np.exp(1j * angles)


def _residuals(coeffs: np.ndarray, dcoeffs: np.ndarray, z: np.ndarray) -> float:
    n = len(coeffs) - 1
    pv = np.abs(_horner(coeffs, z))
    # |P(z)| computed in floats is only trustworthy down to the evaluation
    # noise floor; without it, cancellation at multiple roots reports
    # spuriously tiny residuals and over-certifies the cluster
    noise = 2.3e-16 * _horner(np.abs(coeffs), np.abs(z)).real
    dv = np.abs(_horner(dcoeffs, z))
    dv = np.maximum(dv, 1e-300)
    return float(np.max(n * (pv + noise) / dv))


def all_roots(p: Union[IntPolynomial, TrinomialSpec], config: RootConfig = RootConfig()) -> RootSet:
    """All complex roots by Aberth-Ehrlich iteration plus one Newton polish.

    Deterministic for fixed input and configuration.  Raises
    ConvergenceFailure (carrying the best iterate) if the iteration cap is hit
    while the residual bound is still above the certification tolerance.
    """
    coeffs, spec = _poly_arrays(p)
    if len(coeffs) < 2:
        raise ValueError("degree must be at least 1")

    zero_count = 0
    while coeffs[0] == 0:  # roots at the origin split off exactly
        zero_count += 1
        coeffs = coeffs[1:]

    roots: list[complex] = [0.0j] * zero_count
    iterations = 0
    residual = 0.0

    if len(coeffs) == 2:
        roots.append(complex(-coeffs[0] / coeffs[1]))
    elif len(coeffs) > 2:
        dcoeffs = np.asarray([k * c for k, c in enumerate(coeffs) if k > 0], dtype=complex)
        z = _initial_points(coeffs, spec if zero_count == 0 else None)
        n = len(z)
        converged = False
        for it in range(config.max_iter):
            iterations = it + 1
            pv = _horner(coeffs, z)
            dv = _horner(dcoeffs, z)
            dv = np.where(dv == 0, 1e-300, dv)
            w = pv / dv
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, np.inf)
            s = np.sum(1.0 / diff, axis=1)
            denom = 1.0 - w * s
            denom = np.where(denom == 0, 1e-300, denom)
            corr = w / denom
            z = z - corr
            if np.max(np.abs(corr) / (1.0 + np.abs(z))) < config.tol:
                converged = True
                break
        # terminal Newton pass, kept only where it reduces |P|
        pv = _horner(coeffs, z)
        dv = _horner(dcoeffs, z)
        dv = np.where(dv == 0, 1e-300, dv)
        z_new = z - pv / dv
        better = np.abs(_horner(coeffs, z_new)) <= np.abs(pv)
        z = np.where(better, z_new, z)
        residual = _residuals(coeffs, dcoeffs, z)
        if not converged and residual > config.cert_tol:
            raise ConvergenceFailure(
                f"root iteration did not converge in {config.max_iter} iterations "
                f"(residual bound {residual:.3e})",
                roots=tuple(sorted(map(complex, z), key=lambda r: (r.real, r.imag))),
                residual_bound=residual,
            )
        roots.extend(map(complex, z))

    roots.sort(key=lambda r: (r.real, r.imag))
    return RootSet(
        roots=tuple(roots),
        residual_bound=residual,
        certified=residual <= config.cert_tol,
        iterations=iterations,
    )


# ----------------------------------------------------------------------------
# real-root classification

_BISECT_TOL = 1e-12
_BISECT_MAX_ITER = 200


def _bisect(f, lo: float, hi: float) -> float:
    flo = f(lo)
    fhi = f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if flo * fhi > 0:
        raise ClassificationMismatch(
            f"no sign change on [{lo}, {hi}] where one was expected"
        )
    for _ in range(_BISECT_MAX_ITER):
        mid = 0.5 * (lo + hi)
        fmid = f(mid)
        if fmid == 0.0 or (hi - lo) * 0.5 < _BISECT_TOL:
            return mid
        if flo * fmid < 0:
            hi = mid
        else:
            lo, flo = mid, fmid
    return 0.5 * (lo + hi)


def _step_with_sign(f, x0: float, direction: float, want_positive: bool) -> float:
    """Find x = x0 + direction*delta with the wanted sign of f, shrinking delta."""
    delta = 1e-3
    for _ in range(12):
        x = x0 + direction * delta
        v = f(x)
        if (v > 0) == want_positive and v != 0.0:
            return x
        delta *= 0.1
    raise ClassificationMismatch(
        f"could not establish the expected sign of the polynomial near {x0}"
    )


def classify_real_roots(f: FamilyForm) -> ClassifiedRealRoots:
    """Locate and label the real roots of an R/S/T form with a >= 2.

    Boundary roots at +/-1 (which occur exactly when a = 2) are detected
    symbolically before any bisection.  Requires gcd(m, n) = 1.
    """
    if f.gcd_mn != 1:
        raise ValueError("classification requires gcd(m, n) = 1")
    if not f.a >= 2:
        raise ValueError("classification requires a >= 2")

    n, m, a = f.n, f.m, f.a
    boundary = _is_int_like(a) and int(a) == 2  # P(+/-1) = 0 exactly
    hi = a ** (1.0 / (n - m)) + 1.0  # value at +/-hi dominates the middle term
    entries: list[tuple[str, float]] = []

    if f.family == "R":
        if boundary:
            if n == 2 * m:
                # degenerate (n, m) = (2, 1): (z-1)^2, double root at 1
                entries = [("r1", 1.0), ("r2", 1.0)]
            elif m < n / 2:
                c = _step_with_sign(f, 1.0, -1.0, want_positive=False)
                entries = [("r1", 1.0), ("r2", _bisect(f, 0.0, c))]
            else:
                c = _step_with_sign(f, 1.0, +1.0, want_positive=False)
                entries = [("r1", _bisect(f, c, hi)), ("r2", 1.0)]
        else:
            entries = [("r1", _bisect(f, 1.0, hi)), ("r2", _bisect(f, 0.0, 1.0))]

    elif f.family == "S":
        s1 = _bisect(f, 0.0, 1.0)
        if m % 2 == 1:
            entries = [("s1", s1)]
        elif boundary:
            if m < n / 2:
                c = _step_with_sign(f, -1.0, +1.0, want_positive=True)
                entries = [("s1", s1), ("s2", _bisect(f, c, 0.0)), ("s3", -1.0)]
            else:
                c = _step_with_sign(f, -1.0, -1.0, want_positive=True)
                entries = [("s1", s1), ("s2", -1.0), ("s3", _bisect(f, -hi, c))]
        else:
            entries = [
                ("s1", s1),
                ("s2", _bisect(f, -1.0, 0.0)),
                ("s3", _bisect(f, -hi, -1.0)),
            ]

    else:  # T
        t1 = _bisect(f, 1.0, hi)
        if n % 2 == 0:
            entries = [("t1", t1), ("t2", _bisect(f, -1.0, 0.0))]
        elif m % 2 == 0:
            entries = [("t1", t1)]
        elif boundary:
            if m < n / 2:
                c = _step_with_sign(f, -1.0, +1.0, want_positive=True)
                entries = [("t1", t1), ("t2", _bisect(f, c, 0.0)), ("t3", -1.0)]
            else:
                c = _step_with_sign(f, -1.0, -1.0, want_positive=True)
                entries = [("t1", t1), ("t2", -1.0), ("t3", _bisect(f, -hi, c))]
        else:
            entries = [
                ("t1", t1),
                ("t2", _bisect(f, -1.0, 0.0)),
                ("t3", _bisect(f, -hi, -1.0)),
            ]

    expected = {"R": 2, "S": 1 if m % 2 else 3, "T": 2 if n % 2 == 0 else (3 if m % 2 else 1)}
    if len(entries) != expected[f.family]:
        raise ClassificationMismatch(
            f"found {len(entries)} labelled roots, expected {expected[f.family]}"
        )
    return ClassifiedRealRoots(family=f, entries=tuple(entries))


def is_reciprocal(p: IntPolynomial) -> bool:
    """True iff the coefficient vector is palindromic (z^n P(1/z) = P(z))."""
    if p.is_zero:
        raise ValueError("the zero polynomial has no reciprocal notion here")
    return p.coeffs == p.coeffs[::-1]
