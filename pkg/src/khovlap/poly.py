"""Small exact Laurent-polynomial helpers in q and (t, q)."""

from __future__ import annotations

from .errors import NonDivisibleError


class LaurentPoly:
    """Integer Laurent polynomial in one variable, dict exponent -> coefficient."""

    def __init__(self, coeffs: dict[int, int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + LaurentPoly({e: -c for e, c in other.coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(out)

    def substitute_inverse(self) -> "LaurentPoly":
        """q -> q^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __call__(self, x: complex) -> complex:
        return sum(c * x**e for e, c in self.coeffs.items())

    def divide_exact(self, divisor: "LaurentPoly") -> "LaurentPoly":
        """Exact division; raises NonDivisibleError on a nonzero remainder."""
        if not divisor:
            raise ZeroDivisionError("division by zero polynomial")
        if not self:
            return LaurentPoly()
        # factor out the lowest powers so long division terminates: over
        # Laurent polynomials an inexact division would otherwise descend
        # through ever-lower exponents forever
        smin = min(self.coeffs)
        dmin = min(divisor.coeffs)
        rem = {e - smin: c for e, c in self.coeffs.items()}
        div = {e - dmin: c for e, c in divisor.coeffs.items()}
        dmax = max(div)
        dlead = div[dmax]
        quot: dict[int, int] = {}
        while rem:
            e = max(rem)
            c = rem[e]
            if e < dmax or c % dlead != 0:
                raise NonDivisibleError(
                    f"remainder term {c}*q^{e + smin} not divisible"
                )
            f = c // dlead
            quot[e - dmax] = quot.get(e - dmax, 0) + f
            for de, dc in div.items():
                k = e - dmax + de
                rem[k] = rem.get(k, 0) - f * dc
                if rem[k] == 0:
                    del rem[k]
        return LaurentPoly({e + smin - dmin: c for e, c in quot.items()})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for e in sorted(self.coeffs):
            c = self.coeffs[e]
            term = _format_term(c, "q", e, first=not parts)
            parts.append(term)
        return "".join(parts)

    __repr__ = __str__


class BivariatePoly:
    """Integer Laurent polynomial in (t, q), dict (t_exp, q_exp) -> coefficient."""

    def __init__(self, coeffs: dict[tuple[int, int], int] | None = None):
        self.coeffs = {e: c for e, c in (coeffs or {}).items() if c != 0}

    def __eq__(self, other) -> bool:
        return isinstance(other, BivariatePoly) and self.coeffs == other.coeffs

    def __add__(self, other: "BivariatePoly") -> "BivariatePoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return BivariatePoly(out)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def at_t(self, t: int) -> LaurentPoly:
        """Specialize t to an integer, leaving a Laurent polynomial in q."""
        out: dict[int, int] = {}
        for (te, qe), c in self.coeffs.items():
            out[qe] = out.get(qe, 0) + c * t**te
        return LaurentPoly(out)

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for te, qe in sorted(self.coeffs):
            c = self.coeffs[(te, qe)]
            body = _format_term(c, "t", te, first=not parts, drop_unit_coeff=False)
            if te == 0:
                body = _format_term(c, "q", qe, first=not parts)
            else:
                body = _format_term(c, "t", te, first=not parts) + _power("q", qe)
            parts.append(body)
        return "".join(parts)

    __repr__ = __str__


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


def _format_term(c: int, var: str, e: int, first: bool, drop_unit_coeff: bool = True) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    mag = abs(c)
    pw = _power(var, e)
    if pw and mag == 1 and drop_unit_coeff:
        return f"{sign}{pw}"
    if not pw:
        return f"{sign}{mag}"
    return f"{sign}{mag}{pw}"
