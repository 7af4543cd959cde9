"""Waveguide cutoff budgets and rectangular-cavity mode spectra.

Circular-hole cutoffs follow the standard TE/TM classification: the TE_nm
cutoff wavenumber is the m-th positive root of J'_n divided by the hole
radius, the TM_nm one uses the m-th root of J_n.  Roots are obtained by
bracketed root-finding (brentq) with brackets seeded from the interlacing of
Bessel-function zeros; no tabulated roots are baked in.

Below cutoff the propagation constant is imaginary and the field decays as
exp(-|beta| L) along a hole of depth L.  The external quality factor grows
proportionally to exp(+2|beta| L); only the *ratio* between two geometries is
physically meaningful here, so that is what `external_q_ratio` exposes.
(The usual engineering shorthand writes the proportionality with the sign
folded into an imaginary beta; we always work with the positive attenuation
constant.)

The tapered-cavity solver reduces the TE_1m family of a long rectangular
cavity of height h(x) to a 1D Helmholtz problem,

    psi''(x) + [(2 pi f / c)^2 - (pi / h(x))^2] psi(x) = 0,

with Dirichlet ends, discretized by symmetric second-order finite
differences.  The local cutoff (pi/h)^2 acts as a potential, which is what
lets a quadratic height taper flatten the mode spacing.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.constants import c as C_LIGHT
from scipy.linalg import eigvalsh_tridiagonal
from scipy.optimize import brentq
from scipy.special import jv, jvp

__all__ = [
    "HoleSpec",
    "CavityProfile",
    "ModeSpectrum",
    "Propagation",
    "bessel_root",
    "bessel_derivative_root",
    "cutoff_frequency",
    "propagation_constant",
    "evanescent_attenuation",
    "external_q_ratio",
    "rect_spectrum",
    "tapered_spectrum",
]

_ROOT_TOL = 1e-12


def _scan_brackets(f, x0: float, n_roots: int, step: float = 0.25):
    """Yield sign-change brackets of ``f`` scanning upward from ``x0``.

    The step is well below the minimum spacing of Bessel-function zeros
    (which approaches pi from above), so no root is skipped.
    """
    brackets = []
    x_lo, f_lo = x0, f(x0)
    while len(brackets) < n_roots:
        x_hi = x_lo + step
        f_hi = f(x_hi)
        if f_lo == 0.0:
            brackets.append((x_lo - step * 1e-3, x_lo + step * 1e-3))
        elif f_lo * f_hi < 0.0:
            brackets.append((x_lo, x_hi))
        x_lo, f_lo = x_hi, f_hi
        if x_lo > x0 + 1e5:
            raise RuntimeError("Bessel root scan failed to bracket")
    return brackets


def bessel_root(n: int, m: int) -> float:
    """m-th positive root of J_n, by bracketed root-finding."""
    if n < 0 or m < 1:
        raise ValueError(f"invalid Bessel root index (n={n}, m={m})")
    f = lambda x: jv(n, x)
    # J_n has no positive zeros below ~n; start just above the origin.
    x0 = max(float(n), 0.1)
    roots = [
        brentq(f, a, b, xtol=_ROOT_TOL, rtol=4 * np.finfo(float).eps)
        for a, b in _scan_brackets(f, x0, m)
    ]
    return roots[m - 1]


def bessel_derivative_root(n: int, m: int) -> float:
    """m-th positive root of J'_n (cutoff number p'_nm of the TE_nm mode).

    For n >= 1 the first root lies between the origin and the first zero of
    J_n, and by Rolle's theorem exactly one derivative root sits between each
    pair of consecutive J_n zeros.  For n = 0 the conventional roots are the
    positive zeros of J_1 (the trivial root at 0 is excluded).
    """
    if n < 0 or m < 1:
        raise ValueError(f"invalid Bessel derivative root index (n={n}, m={m})")
    if n == 0:
        return bessel_root(1, m)
    fp = lambda x: jvp(n, x)
    zeros = [bessel_root(n, k) for k in range(1, m + 1)]
    brackets = [(max(0.5 * n, 1e-3), zeros[0])]
    brackets += [(zeros[k], zeros[k + 1]) for k in range(m - 1)]
    a, b = brackets[m - 1]
    # Pull in from the J_n zeros where J'_n is nonzero but tiny-adjacent.
    return brentq(fp, a + 1e-11, b - 1e-11, xtol=_ROOT_TOL,
                  rtol=4 * np.finfo(float).eps)


@dataclass(frozen=True)
class HoleSpec:
    """A circular sub-cutoff hole of radius `radius` and depth `depth` (m).

    ``mode`` is the (n, m) index of the hole waveguide mode; ``family``
    selects TE (default, lowest cutoff is TE_11) or TM (lowest TM_01).
    """

    radius: float
    depth: float
    mode: tuple[int, int] = (1, 1)
    family: str = "TE"

    def __post_init__(self):
        if self.radius <= 0:
            raise ValueError("hole radius must be positive")
        if self.depth < 0:
            raise ValueError("hole depth must be nonnegative")
        n, m = self.mode
        fam = self.family.upper()
        if fam not in ("TE", "TM"):
            raise ValueError(f"unknown mode family {self.family!r}")
        if m < 1 or n < 0 or (fam == "TE" and n == 0 and m < 1):
            raise ValueError(f"invalid {fam} mode index (n={n}, m={m})")
        object.__setattr__(self, "family", fam)

    @property
    def cutoff_wavenumber(self) -> float:
        """k_c = p_nm / a with p_nm the relevant Bessel(-derivative) root."""
        n, m = self.mode
        if self.family == "TE":
            p = bessel_derivative_root(n, m)
        else:
            p = bessel_root(n, m)
        return p / self.radius


@dataclass(frozen=True)
class Propagation:
    """Propagation constant magnitude (1/m); imaginary when evanescent."""

    value: float
    evanescent: bool

    def as_complex(self) -> complex:
        return 1j * self.value if self.evanescent else complex(self.value)


def cutoff_frequency(hole: HoleSpec) -> float:
    """Cutoff frequency (Hz) of the hole mode, vacuum-filled."""
    return hole.cutoff_wavenumber * C_LIGHT / (2.0 * math.pi)


def propagation_constant(hole: HoleSpec, f: float) -> Propagation:
    """Waveguide propagation constant sqrt(k^2 - k_c^2) at frequency f (Hz).

    Below cutoff the result is the attenuation magnitude |beta| with
    ``evanescent=True``; at exactly f = f_c it is zero.
    """
    if f <= 0:
        raise ValueError("frequency must be positive")
    k = 2.0 * math.pi * f / C_LIGHT
    kc = hole.cutoff_wavenumber
    if k >= kc:
        return Propagation(math.sqrt(k * k - kc * kc), False)
    return Propagation(math.sqrt(kc * kc - k * k), True)


def evanescent_attenuation(hole: HoleSpec, f: float) -> float:
    """Field attenuation factor exp(-|beta| L) through the hole depth.

    Only defined below cutoff; the squared factor bounds the power leakage
    to the vacuum side.  Raises for propagating frequencies.
    """
    prop = propagation_constant(hole, f)
    if not prop.evanescent:
        raise ValueError(
            f"not evanescent: f = {f:.6g} Hz is at or above the "
            f"{hole.family}{hole.mode[0]}{hole.mode[1]} cutoff "
            f"{cutoff_frequency(hole):.6g} Hz"
        )
    return math.exp(-prop.value * hole.depth)


def external_q_ratio(hole: HoleSpec, f: float, reference: HoleSpec,
                     f_reference: float | None = None) -> float:
    """Relative external-Q figure of merit, Q_ext(hole) / Q_ext(reference).

    Uses the proportionality Q_ext ~ exp(+2 |beta| L).  Only the ratio to a
    reference geometry is meaningful; the proportionality constant cancels.
    Evaluated in log space so extreme ratios do not overflow.
    """
    f_ref = f if f_reference is None else f_reference
    p = propagation_constant(hole, f)
    p_ref = propagation_constant(reference, f_ref)
    if not (p.evanescent and p_ref.evanescent):
        raise ValueError("not evanescent: both geometries must be below cutoff")
    return math.exp(2.0 * (p.value * hole.depth - p_ref.value * reference.depth))


@dataclass(frozen=True)
class ModeSpectrum:
    """An ordered set of cavity mode frequencies (Hz)."""

    frequencies: tuple[float, ...]

    def __post_init__(self):
        freqs = tuple(float(f) for f in self.frequencies)
        if any(b <= a for a, b in zip(freqs, freqs[1:])):
            raise ValueError("mode frequencies must be strictly increasing")
        object.__setattr__(self, "frequencies", freqs)

    @property
    def spacings(self) -> tuple[float, ...]:
        f = self.frequencies
        return tuple(b - a for a, b in zip(f, f[1:]))

    def __len__(self) -> int:
        return len(self.frequencies)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["index", "frequency_hz", "spacing_hz"])
        for i, f in enumerate(self.frequencies):
            spacing = "" if i == 0 else f"{self.spacings[i - 1]!r}"
            writer.writerow([i, repr(f), spacing])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps(
            {"frequencies_hz": list(self.frequencies),
             "spacings_hz": list(self.spacings)},
            indent=2,
        )

    @classmethod
    def from_csv(cls, text: str) -> "ModeSpectrum":
        reader = csv.DictReader(io.StringIO(text))
        freqs = [float(row["frequency_hz"]) for row in reader]
        return cls(tuple(freqs))


@dataclass(frozen=True)
class CavityProfile:
    """Length, height profile and discretization of a long rectangular cavity.

    The height is h(x) = h0 - taper_coeff * x^2 with x measured from the
    untapered end, x in [0, length].  ``width`` is carried as metadata only;
    the TE_1m family solved here does not depend on it.
    """

    length: float
    h0: float
    taper_coeff: float = 0.0
    width: float | None = None
    grid_points: int = 2048

    def __post_init__(self):
        if self.length <= 0 or self.h0 <= 0:
            raise ValueError("cavity length and height must be positive")
        if self.grid_points < 64:
            raise ValueError("grid_points must be at least 64")
        if self.min_height() <= 0:
            raise ValueError("height profile must stay positive over the length")

    def height(self, x) -> np.ndarray:
        return self.h0 - self.taper_coeff * np.asarray(x) ** 2

    def min_height(self) -> float:
        # h is monotone in x^2, so the minimum sits at an end point.
        return float(min(self.height(0.0), self.height(self.length)))


def rect_spectrum(h: float, l: float, n_max: int = 1, m_max: int = 9) -> ModeSpectrum:
    """Closed-form spectrum nu_nm = (c/2) sqrt((n/h)^2 + (m/l)^2).

    Modes with 1 <= n <= n_max and 1 <= m <= m_max, sorted ascending.
    Exactly degenerate pairs (possible for commensurate h, l) appear once.
    """
    if h <= 0 or l <= 0:
        raise ValueError("cavity dimensions must be positive")
    freqs = sorted(
        0.5 * C_LIGHT * math.hypot(n / h, m / l)
        for n in range(1, n_max + 1)
        for m in range(1, m_max + 1)
    )
    unique: list[float] = []
    for f in freqs:
        if not unique or f > unique[-1] * (1 + 1e-12):
            unique.append(f)
    return ModeSpectrum(tuple(unique))


def tapered_spectrum(profile: CavityProfile, f_max: float) -> ModeSpectrum:
    """Eigenfrequencies below f_max of the 1D reduced Helmholtz problem.

    Solves -psi'' + (pi/h(x))^2 psi = (2 pi f / c)^2 psi with Dirichlet ends
    on ``profile.grid_points`` interior nodes (symmetric tridiagonal finite
    differences, second-order accurate).  An empty spectrum is returned when
    nothing lies below f_max.
    """
    if f_max <= 0:
        raise ValueError("f_max must be positive")
    n = profile.grid_points
    dx = profile.length / (n + 1)
    x = np.linspace(dx, profile.length - dx, n)
    v = (math.pi / profile.height(x)) ** 2
    diag = 2.0 / dx**2 + v
    off = np.full(n - 1, -1.0 / dx**2)
    lam_max = (2.0 * math.pi * f_max / C_LIGHT) ** 2
    lam = eigvalsh_tridiagonal(diag, off, select="v",
                               select_range=(0.0, lam_max))
    lam = lam[lam > 0.0]
    freqs = C_LIGHT * np.sqrt(lam) / (2.0 * math.pi)
    freqs = freqs[freqs < f_max]
    if freqs.size == 0:
        return ModeSpectrum(())
    return ModeSpectrum(tuple(freqs))
