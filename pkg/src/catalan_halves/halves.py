"""
Vertical and horizontal halves of a Riordan array.

For a triangle ``t`` the vertical half has entries ``t[2n-k][n]`` and the
horizontal half ``t[2n][n+k]``.  Both are Riordan arrays again, with
closed forms built from ``phi = Rev(x^2 / f)``:

    V = (x phi' g(phi) / phi, phi)
    H = (x phi' g(phi) / phi, f(phi))

Everything here is available two ways, by index extraction from a
materialized triangle and by the closed form; tests keep them honest
against each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, PrecisionError
from .riordan import RiordanPair, Triangle
from .series import Series


def x2_over_f(f: Series) -> Series:
    """x^2 / f, known to the same precision as f."""
    return (1 / f.shift_down(1)).shift_up(1)


def phi(f: Series) -> Series:
    """Rev(x^2 / f), checked against its defining equation before returning."""
    inner = x2_over_f(f)
    p = inner.revert()
    if not inner.compose(p).agrees(Series.x(p.prec)):
        raise DomainError("reversion of x^2/f failed its round-trip check")
    return p


def hitting_time_factor(p: Series) -> Series:
    """x phi'/phi for a series phi with phi(0)=0, phi'(0)!=0."""
    return p.derivative() / p.shift_down(1)


@dataclass(frozen=True)
class HalfData:
    phi: Series
    weight: Series   # x phi' / phi
    g_phi: Series    # g(phi)


def _half_data(r: RiordanPair) -> HalfData:
    p = phi(r.f)
    return HalfData(phi=p, weight=hitting_time_factor(p), g_phi=r.g.compose(p))


def vertical_half_pair(r: RiordanPair) -> RiordanPair:
    d = _half_data(r)
    return RiordanPair(d.weight * d.g_phi, d.phi)


def horizontal_half_pair(r: RiordanPair) -> RiordanPair:
    d = _half_data(r)
    return RiordanPair(d.weight * d.g_phi, r.f.compose(d.phi))


def halves_pair(r: RiordanPair) -> tuple:
    """(V, H) sharing one reversion."""
    d = _half_data(r)
    g = d.weight * d.g_phi
    return RiordanPair(g, d.phi), RiordanPair(g, r.f.compose(d.phi))


def _check_rows(t: Triangle, N: int | None) -> int:
    if N is None:
        N = (t.rows + 1) // 2
    if t.rows < 2 * N - 1:
        raise PrecisionError(f"a {N}-row half needs {2 * N - 1} source rows, have {t.rows}")
    return N


def vertical_half_matrix(t: Triangle, N: int | None = None) -> Triangle:
    N = _check_rows(t, N)
    return Triangle([[t[2 * n - k, n] for k in range(n + 1)] for n in range(N)])


def horizontal_half_matrix(t: Triangle, N: int | None = None) -> Triangle:
    N = _check_rows(t, N)
    return Triangle([[t[2 * n, n + k] for k in range(n + 1)] for n in range(N)])


def source_rows(N: int) -> int:
    """Rows of the source triangle needed for an N-row half."""
    return 2 * N - 1


def vertical_half_triangle(r: RiordanPair, N: int) -> Triangle:
    return vertical_half_matrix(r.triangle(source_rows(N)), N)


def horizontal_half_triangle(r: RiordanPair, N: int) -> Triangle:
    return horizontal_half_matrix(r.triangle(source_rows(N)), N)


def vertical_half_inverse_pair(f: Series) -> RiordanPair:
    """Inverse of the vertical half of (1, f): (2 - x f'/f, x^2/f)."""
    return RiordanPair(2 - hitting_time_factor(f), x2_over_f(f))


@dataclass(frozen=True)
class HalfFactorization:
    """Factor pairs of the halves and the verdicts on each identity."""

    scale: RiordanPair        # (g(phi), x)
    vertical_factor: RiordanPair   # (x phi'/phi, phi)
    horizontal_factor: RiordanPair  # (x phi'/phi, f(phi))
    vertical: RiordanPair
    horizontal: RiordanPair
    identities: dict

    @property
    def all_hold(self) -> bool:
        return all(self.identities.values())


def half_factorizations(r: RiordanPair) -> HalfFactorization:
    d = _half_data(r)
    V, H = halves_pair(r)
    p = min(V.prec, H.prec)
    scale = RiordanPair(d.g_phi, Series.x(d.g_phi.prec))
    vf = RiordanPair(d.weight, d.phi)
    hf = RiordanPair(d.weight, r.f.compose(d.phi))
    one_f = RiordanPair(Series.constant(1, r.prec), r.f)
    phi_sq_over_x = (d.phi * d.phi).shift_down(1)
    identities = {
        "V = (g(phi), x) (x phi'/phi, phi)": (scale * vf).agrees(V),
        "H = (g(phi), x) (x phi'/phi, f(phi))": (scale * hf).agrees(H),
        "H = (x phi'/phi, phi) (g, f)": (vf * r).agrees(H),
        "H = (g(phi), x) (x phi'/phi, phi^2/x)":
            (scale * RiordanPair(d.weight, phi_sq_over_x)).agrees(H),
        "H = V (1, f)": (V * one_f).agrees(H),
        "V^-1 H = (1, f)": (V.inverse() * H).agrees(one_f),
        "V (g, f) = (g(phi), x) H": (V * r).agrees(scale * H),
        "(x phi'/phi, phi) is hitting-time": bool(vf.is_hitting_time()),
    }
    return HalfFactorization(scale, vf, hf, V.truncate(p), H.truncate(p), identities)
