"""Lower and upper bounds on Hanoi transfer counts and essential-path lengths.

H(p, N) is the minimum number of moves to transfer N disks between two pegs
with p pegs available.  Gamma(p, N) is the minimum length of a move
sequence (from any start) that moves every disk at least once; it lower
bounds H.  This module holds every closed-form bound the package knows,
plus a dynamic program that chains them through the recursive halving
inequality Gamma(p, N) >= 2 * min(Gamma(p, N - l), Gamma(p - 1, l)).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .dyadic import DyadicRational
from .frame_stewart import phi4_closed, phi_spectrum
from .numerics import decompose, nabla

__all__ = [
    "BoundReport",
    "bound_report_from_json_dict",
    "build_report",
    "chen_shen_bound",
    "dp_lower_bound",
    "dp_lower_bounds",
    "gamma3_formula",
    "gamma4_formula",
    "gamma_conjecture",
    "gamma_upper_general",
    "main2_bound",
]


def chen_shen_bound(p: int, n: int) -> DyadicRational:
    """Chen-Shen lower bound on H(p, n): exactly 2**(m-1), where m is the
    largest integer with C(m + p - 3, p - 2) < n.  Fractional when m = 0."""
    if p < 3:
        raise ValueError(f"peg count must be at least 3, got {p}")
    if n < 1:
        raise ValueError(f"disk count must be at least 1, got {n}")
    m = nabla(p, n - 1)
    return DyadicRational(1, m - 1)


def main2_bound(p: int, n: int) -> DyadicRational:
    """Lower bound (m + t) * 2**(m - 2(p-2)) from the greedy (m, t, r)
    split of n - 1; exact, and fractional when m < 2(p-2)."""
    if p < 4:
        raise ValueError(f"main2_bound needs at least 4 pegs, got {p}")
    d = decompose(p, n)
    return DyadicRational(d.m + d.t, d.m - 2 * (p - 2))


def gamma3_formula(n: int) -> int:
    """Gamma(3, n): n for n <= 1, otherwise 1 + 2**(n-2) (Szegedy)."""
    if n < 0:
        raise ValueError(f"disk count must be nonnegative, got {n}")
    if n <= 1:
        return n
    return 1 + (1 << (n - 2))


def gamma4_formula(n: int) -> int:
    """Gamma(4, n): n for n <= 2, otherwise 3 + (Phi(4, n) - 5) / 4."""
    if n < 0:
        raise ValueError(f"disk count must be nonnegative, got {n}")
    if n <= 2:
        return n
    quotient, remainder = divmod(phi4_closed(n) - 5, 4)
    if remainder:
        raise AssertionError(f"Phi(4, {n}) - 5 is not divisible by 4")
    return 3 + quotient


def gamma_conjecture(p: int, n: int) -> int:
    """Conjectured Gamma(p, n): n for n <= p - 2, otherwise
    p - 1 + (Phi(p, n) - (2(p-2) + 1)) / 4.

    Matches gamma3_formula and gamma4_formula exactly; values for p >= 5
    carry no proof and are flagged as conjectured in bound reports.
    """
    if p < 3:
        raise ValueError(f"peg count must be at least 3, got {p}")
    if n < 0:
        raise ValueError(f"disk count must be nonnegative, got {n}")
    if n <= p - 2:
        return n
    quotient, remainder = divmod(phi_spectrum(p, n) - (2 * (p - 2) + 1), 4)
    if remainder:
        raise AssertionError(f"Phi({p}, {n}) - {2 * (p - 2) + 1} is not divisible by 4")
    return p - 1 + quotient


def gamma_upper_general(p: int, n: int) -> int | DyadicRational:
    """Upper bound on Gamma(p, n) for n >= p - 1:
    p - 1 + (Phi(p, n) - (2(p-2) + 1)) / 4.

    For n >= p - 1 the spectrum sum makes the numerator divisible by 4
    (it is 1 + 2(p-2) plus a multiple of 4), so the result is an integer;
    were it ever fractional it would be returned exactly as a dyadic.
    """
    if p < 3:
        raise ValueError(f"peg count must be at least 3, got {p}")
    if n < p - 1:
        raise ValueError(f"defined for at least {p - 1} disks, got {n}")
    numerator = phi_spectrum(p, n) - (2 * (p - 2) + 1)
    quotient, remainder = divmod(numerator, 4)
    if remainder == 0:
        return p - 1 + quotient
    return DyadicRational(4 * (p - 1) + numerator, -2)


def dp_lower_bounds(p: int, n_max: int) -> list[int]:
    """Dynamic-program lower bounds on Gamma(p, n) for all n <= n_max.

    Base row: the exact 4-peg values.  Each row q >= 5 takes the best of
    the trivial bound n (every disk moves once), monotone restriction
    (dropping the largest disk cannot lengthen an essential path), and the
    recursive halving bound over every split l.
    """
    if p < 4:
        raise ValueError(f"dp lower bound needs at least 4 pegs, got {p}")
    if n_max < 0:
        raise ValueError(f"disk count must be nonnegative, got {n_max}")
    row = [gamma4_formula(n) for n in range(n_max + 1)]
    for q in range(5, p + 1):
        prev = row
        row = [0] * (n_max + 1)
        for n in range(1, n_max + 1):
            best = max(n, row[n - 1])
            for split in range(1, n):
                candidate = 2 * min(row[n - split], prev[split])
                if candidate > best:
                    best = candidate
            row[n] = best
    return row


def dp_lower_bound(p: int, n: int) -> int:
    """Dynamic-program lower bound on Gamma(p, n); see dp_lower_bounds."""
    return dp_lower_bounds(p, n)[n]


@dataclass(frozen=True)
class BoundReport:
    """Everything the closed forms say about one (p, N) pair.

    ``gamma_formula`` is exact for p <= 4 and conjectured for p >= 5, as
    recorded in ``gamma_formula_status``.  ``main2`` and ``dp_lower`` need
    p >= 4, ``gamma_upper_general`` needs N >= p - 1; absent values are
    None and serialize as JSON null.
    """

    p: int
    N: int
    chen_shen: DyadicRational
    main2: DyadicRational | None
    trivial_n: int
    dp_lower: int | None
    gamma_formula: int
    gamma_formula_status: Literal["exact", "conjectured"]
    phi_upper: int
    gamma_upper_general: DyadicRational | None

    def to_json_dict(self) -> dict:
        return {
            "p": self.p,
            "N": self.N,
            "chen_shen": self.chen_shen.to_json_dict(),
            "main2": None if self.main2 is None else self.main2.to_json_dict(),
            "trivial_n": self.trivial_n,
            "dp_lower": self.dp_lower,
            "gamma_formula": self.gamma_formula,
            "gamma_formula_status": self.gamma_formula_status,
            "phi_upper": self.phi_upper,
            "gamma_upper_general": None
            if self.gamma_upper_general is None
            else self.gamma_upper_general.to_json_dict(),
        }


def bound_report_from_json_dict(data: dict) -> BoundReport:
    def dyadic(value):
        return None if value is None else DyadicRational.from_json_dict(value)

    return BoundReport(
        p=int(data["p"]),
        N=int(data["N"]),
        chen_shen=DyadicRational.from_json_dict(data["chen_shen"]),
        main2=dyadic(data["main2"]),
        trivial_n=int(data["trivial_n"]),
        dp_lower=None if data["dp_lower"] is None else int(data["dp_lower"]),
        gamma_formula=int(data["gamma_formula"]),
        gamma_formula_status=data["gamma_formula_status"],
        phi_upper=int(data["phi_upper"]),
        gamma_upper_general=dyadic(data["gamma_upper_general"]),
    )


def build_report(p: int, n: int) -> BoundReport:
    """Assemble the full report for (p, n)."""
    if p < 3:
        raise ValueError(f"peg count must be at least 3, got {p}")
    if n < 1:
        raise ValueError(f"disk count must be at least 1, got {n}")
    if p == 3:
        gamma_value, status = gamma3_formula(n), "exact"
    elif p == 4:
        gamma_value, status = gamma4_formula(n), "exact"
    else:
        gamma_value, status = gamma_conjecture(p, n), "conjectured"
    upper = None
    if n >= p - 1:
        raw = gamma_upper_general(p, n)
        upper = raw if isinstance(raw, DyadicRational) else DyadicRational.from_int(raw)
    return BoundReport(
        p=p,
        N=n,
        chen_shen=chen_shen_bound(p, n),
        main2=main2_bound(p, n) if p >= 4 else None,
        trivial_n=n,
        dp_lower=dp_lower_bound(p, n) if p >= 4 else None,
        gamma_formula=gamma_value,
        gamma_formula_status=status,
        phi_upper=phi_spectrum(p, n),
        gamma_upper_general=upper,
    )
