"""Exact univariate polynomial arithmetic and certified real-root isolation.

Polynomials are dense lists of arbitrary-precision integers, index = power,
with no trailing zero coefficient (the zero polynomial is the empty list).
All root work is exact: Sturm chains are kept over the integers (scaled by
sign-tracked factors), interval endpoints are rationals, and sign evaluations
clear denominators so no floating point is ever consulted.  Floating point
never decides anything; ``format_decimal`` renders reports from rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError, InternalInconsistencyError, NotDivisibleError

Poly = list[int]


def normalize(coeffs) -> Poly:
    p = list(coeffs)
    while p and p[-1] == 0:
        p.pop()
    return p


def degree(p: Poly) -> int:
    """Degree of p; -1 for the zero polynomial."""
    return len(p) - 1


def add(p: Poly, q: Poly) -> Poly:
    out = [0] * max(len(p), len(q))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(q):
        out[i] += c
    return normalize(out)


def negate(p: Poly) -> Poly:
    return [-c for c in p]


def subtract(p: Poly, q: Poly) -> Poly:
    return add(p, negate(q))


def multiply(p: Poly, q: Poly) -> Poly:
    """Exact product; deg(pq) = deg p + deg q for nonzero inputs."""
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return normalize(out)


def scale(p: Poly, k: int) -> Poly:
    if k == 0:
        return []
    return [c * k for c in p]


def exact_divide(p: Poly, q: Poly) -> Poly:
    """Quotient p/q when q divides p exactly over the integers.

    Raises NotDivisibleError on a nonzero remainder or a non-integer quotient;
    in this package that only happens when two routes disagree, so the error
    marks a bug rather than expected input.
    """
    if not q:
        raise DomainError("division by the zero polynomial")
    if not p:
        return []
    if len(p) < len(q):
        raise NotDivisibleError(f"degree {degree(p)} < degree {degree(q)}")
    rem = [Fraction(c) for c in p]
    out = [Fraction(0)] * (len(p) - len(q) + 1)
    lead = Fraction(q[-1])
    for k in range(len(out) - 1, -1, -1):
        coeff = rem[k + len(q) - 1] / lead
        out[k] = coeff
        if coeff:
            for j, b in enumerate(q):
                rem[k + j] -= coeff * b
    if any(rem):
        raise NotDivisibleError("nonzero remainder in exact division")
    if any(c.denominator != 1 for c in out):
        raise NotDivisibleError("quotient is not an integer polynomial")
    return normalize(int(c) for c in out)


def shift_argument(p: Poly, t: int) -> Poly:
    """Taylor shift: return p(x - t), so every root moves up by t."""
    out: Poly = []
    for c in reversed(p):
        out = add(multiply(out, [-t, 1]), [c])
    return out


def derivative(p: Poly) -> Poly:
    return normalize(i * c for i, c in enumerate(p) if i >= 1)


def evaluate(p: Poly, x: int) -> int:
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_at(p: Poly, x: Fraction) -> int:
    """Sign of p(x) for rational x, via denominator-cleared integer Horner."""
    return _sign_at_ratio(p, x.numerator, x.denominator)


def _sign_at_ratio(p: Poly, num: int, den: int) -> int:
    if not p:
        return 0
    acc = p[-1]
    dp = 1
    for c in reversed(p[:-1]):
        dp *= den
        acc = acc * num + c * dp
    return (acc > 0) - (acc < 0)


def content(p: Poly) -> int:
    g = 0
    for c in p:
        g = gcd(g, abs(c))
    return g


def primitive_part(p: Poly) -> Poly:
    """p divided by its content, sign-normalized to a positive leading coefficient."""
    if not p:
        return []
    c = content(p)
    out = [x // c for x in p]
    if out[-1] < 0:
        out = negate(out)
    return out


def _pseudo_remainder(p: Poly, q: Poly) -> tuple[Poly, int]:
    """Fraction-free remainder: returns (lead(q)^t * rem(p, q), sign(lead(q)^t)).

    Each reduction step scales the running remainder by lead(q) once, so the
    result is a sign-tracked integer multiple of the rational remainder.
    """
    lead = q[-1]
    dq = degree(q)
    rem = list(p)
    applied = 0
    while rem and degree(rem) >= dq:
        k = degree(rem)
        coeff = rem[-1]
        rem = [c * lead for c in rem]
        applied += 1
        for j in range(len(q)):
            rem[k - dq + j] -= coeff * q[j]
        rem = normalize(rem)
    sign = -1 if lead < 0 and applied % 2 == 1 else 1
    return rem, sign


def poly_gcd(p: Poly, q: Poly) -> Poly:
    """Primitive gcd over the integers (positive leading coefficient)."""
    if not p:
        return primitive_part(q)
    if not q:
        return primitive_part(p)
    a, b = primitive_part(p), primitive_part(q)
    if degree(a) < degree(b):
        a, b = b, a
    while b:
        r, _ = _pseudo_remainder(a, b)
        a, b = b, primitive_part(r)
    return a


def square_free_filtration(p: Poly) -> list[Poly]:
    """[sf_1, sf_2, ...] where sf_k carries exactly the roots of multiplicity >= k.

    Built by repeated gcd with the derivative and exact division, so every
    sf_k is square-free and sf_{k+1} divides sf_k.
    """
    if not p:
        raise DomainError("zero polynomial has no square-free filtration")
    g = primitive_part(p)
    out: list[Poly] = []
    while degree(g) >= 1:
        nxt = poly_gcd(g, derivative(g))
        out.append(exact_divide(g, nxt))
        g = nxt
    return out


def square_free_part(p: Poly) -> Poly:
    if degree(p) < 1:
        return primitive_part(p)
    return square_free_filtration(p)[0]


def cauchy_root_bound(p: Poly) -> int:
    """Integer B with every real root of p strictly inside (-B, B)."""
    if degree(p) < 1:
        return 1
    lead = abs(p[-1])
    top = max(abs(c) for c in p[:-1]) if len(p) > 1 else 0
    return 2 + top // lead


def sturm_chain(p: Poly) -> list[Poly]:
    """Integer Sturm chain of a square-free p (entries differ from the rational
    chain by positive factors, which leaves every sign count unchanged)."""
    chain = [list(p), derivative(p)]
    while chain[-1]:
        r, mult_sign = _pseudo_remainder(chain[-2], chain[-1])
        if not r:
            break
        r = scale(r, -mult_sign)
        c = content(r)
        chain.append([x // c for x in r])
    return [f for f in chain if f]


def _variations(signs) -> int:
    out = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            out += 1
        prev = s
    return out


def variations_at(chain: list[Poly], x: Fraction) -> int:
    return _variations(sign_at(f, x) for f in chain)


def count_roots_halfopen(p: Poly, a: Fraction, b: Fraction, chain: list[Poly] | None = None) -> int:
    """Number of distinct real roots of square-free p in the half-open (a, b]."""
    if a >= b:
        return 0
    if chain is None:
        chain = sturm_chain(p)
    return variations_at(chain, a) - variations_at(chain, b)


@dataclass(frozen=True)
class RootInterval:
    """One isolated real root: low == high pins it exactly; otherwise the root
    lies strictly inside (low, high) and the square-free source changes sign."""

    low: Fraction
    high: Fraction
    multiplicity: int = 1

    @property
    def is_exact(self) -> bool:
        return self.low == self.high

    @property
    def midpoint(self) -> Fraction:
        return (self.low + self.high) / 2

    @property
    def width(self) -> Fraction:
        return self.high - self.low


@dataclass(frozen=True)
class RootSet:
    """Isolated real roots of ``source``, sorted descending, with multiplicities.

    ``square_free`` carries every root of ``source`` exactly once; it is the
    polynomial that refines the intervals further.  A total multiplicity below
    deg(source) just means some roots are non-real.
    """

    source: tuple[int, ...]
    square_free: tuple[int, ...]
    entries: tuple[RootInterval, ...]
    total_multiplicity: int

    def refined(self, width: Fraction) -> "RootSet":
        sf = list(self.square_free)
        new = tuple(
            e if e.is_exact else _with_bounds(e, _bisect(sf, e.low, e.high, width))
            for e in self.entries
        )
        return RootSet(self.source, self.square_free, new, self.total_multiplicity)


def _with_bounds(entry: RootInterval, bounds: tuple[Fraction, Fraction]) -> RootInterval:
    return RootInterval(bounds[0], bounds[1], entry.multiplicity)


def isolate_real_roots(p: Poly) -> RootSet:
    """Isolate all distinct real roots of p with exact multiplicities."""
    if not p:
        raise DomainError("cannot isolate roots of the zero polynomial")
    if degree(p) == 0:
        return RootSet(tuple(p), tuple(p), (), 0)
    filtration = square_free_filtration(p)
    sf = filtration[0]
    intervals = _isolate_square_free(sf)
    deeper = [(level, f, sturm_chain(f)) for level, f in enumerate(filtration[1:], start=2)]
    entries = []
    for low, high in intervals:
        mult = 1
        for level, f, chain in deeper:
            if low == high:
                hit = sign_at(f, low) == 0
            else:
                hit = count_roots_halfopen(f, low, high, chain) == 1
            if hit:
                mult = level
        entries.append(RootInterval(low, high, mult))
    entries.sort(key=lambda e: e.low, reverse=True)
    return RootSet(
        source=tuple(p),
        square_free=tuple(sf),
        entries=tuple(entries),
        total_multiplicity=sum(e.multiplicity for e in entries),
    )


def _isolate_square_free(q: Poly) -> list[tuple[Fraction, Fraction]]:
    """Disjoint isolating intervals for all real roots of square-free q.

    Sturm counts drive bisection over half-open (a, b] pieces; the returned
    intervals are exact points or closed intervals whose endpoints are
    non-roots of opposite sign.
    """
    if degree(q) < 1:
        return []
    chain = sturm_chain(q)
    bound = Fraction(cauchy_root_bound(q))
    stack = [(-bound, bound, variations_at(chain, -bound), variations_at(chain, bound))]
    found: list[tuple[Fraction, Fraction]] = []
    while stack:
        a, b, va, vb = stack.pop()
        k = va - vb
        if k == 0:
            continue
        if k == 1:
            found.append(_finalize_interval(q, chain, a, b, vb))
            continue
        mid = (a + b) / 2
        vm = variations_at(chain, mid)
        stack.append((a, mid, va, vm))
        stack.append((mid, b, vm, vb))
    return found


def _finalize_interval(q, chain, a, b, vb) -> tuple[Fraction, Fraction]:
    if sign_at(q, b) == 0:
        return (b, b)
    # One root sits in (a, b]; push the left endpoint off any root so the
    # interval carries the sign change plain bisection relies on.
    while sign_at(q, a) == 0:
        mid = (a + b) / 2
        if sign_at(q, mid) == 0:
            return (mid, mid)
        vm = variations_at(chain, mid)
        if vm - vb == 1:
            a = mid
        else:
            b, vb = mid, vm
    return (a, b)


def _bisect(q: Poly, low: Fraction, high: Fraction, width: Fraction) -> tuple[Fraction, Fraction]:
    """Shrink a sign-change interval of square-free q to the requested width.

    Endpoints are put over one shared denominator up front so the loop halves
    plain integers; this is the hot path of report rendering.
    """
    den = low.denominator * (high.denominator // gcd(low.denominator, high.denominator))
    lo = low.numerator * (den // low.denominator)
    hi = high.numerator * (den // high.denominator)
    wn, wd = width.numerator, width.denominator
    s_low = _sign_at_ratio(q, lo, den)
    while (hi - lo) * wd > wn * den:
        lo, hi, den = 2 * lo, 2 * hi, 2 * den
        mid = (lo + hi) // 2
        s_mid = _sign_at_ratio(q, mid, den)
        if s_mid == 0:
            pin = Fraction(mid, den)
            return (pin, pin)
        if s_mid == s_low:
            lo = mid
        else:
            hi = mid
    return (Fraction(lo, den), Fraction(hi, den))


def refine_root(p: Poly, interval: tuple[Fraction, Fraction], width: Fraction) -> tuple[Fraction, Fraction]:
    """Bisect an isolating interval of p until its width is at most ``width``."""
    if width <= 0:
        raise DomainError(f"requested width must be positive, got {width}")
    low, high = Fraction(interval[0]), Fraction(interval[1])
    if low == high:
        return (low, high)
    if low > high:
        raise DomainError("interval is reversed")
    q = square_free_part(p)
    s_low, s_high = sign_at(q, low), sign_at(q, high)
    if s_low == 0:
        return (low, low)
    if s_high == 0:
        return (high, high)
    if s_low == s_high:
        raise DomainError("interval does not isolate a sign change of the polynomial")
    return _bisect(q, low, high, width)


def compare_roots(
    p_sf: Poly,
    a: RootInterval,
    q_sf: Poly,
    b: RootInterval,
    max_rounds: int = 256,
) -> tuple[int, RootInterval, RootInterval]:
    """Order the root isolated by ``a`` (of p_sf) against ``b`` (of q_sf).

    Equality is decided exactly through the gcd: the roots coincide iff a
    common factor has a root inside the interval overlap.  Distinct roots are
    then separated by refinement.  Returns (-1 | 0 | 1, refined a, refined b).
    """
    if a.is_exact and b.is_exact:
        return (a.low > b.low) - (a.low < b.low), a, b
    if a.is_exact:
        cmp, b2, a2 = compare_roots(q_sf, b, p_sf, a, max_rounds)
        return -cmp, a2, b2
    if b.is_exact:
        t = b.low
        if a.low < t < a.high and sign_at(p_sf, t) == 0:
            return 0, a, b
        for _ in range(max_rounds):
            if a.high <= t:
                return -1, a, b
            if a.low >= t:
                return 1, a, b
            bounds = _bisect(p_sf, a.low, a.high, a.width / 4)
            a = _with_bounds(a, bounds)
            if a.is_exact:
                return (a.low > t) - (a.low < t), a, b
        raise InternalInconsistencyError("root comparison did not separate")
    overlap_low = max(a.low, b.low)
    overlap_high = min(a.high, b.high)
    if overlap_low < overlap_high:
        common = poly_gcd(p_sf, q_sf)
        if degree(common) >= 1 and count_roots_halfopen(common, overlap_low, overlap_high) >= 1:
            return 0, a, b
    for _ in range(max_rounds):
        if a.high <= b.low:
            return -1, a, b
        if b.high <= a.low:
            return 1, a, b
        a = _with_bounds(a, _bisect(p_sf, a.low, a.high, a.width / 4))
        b = _with_bounds(b, _bisect(q_sf, b.low, b.high, b.width / 4))
        if a.is_exact and b.is_exact:
            return (a.low > b.low) - (a.low < b.low), a, b
    raise InternalInconsistencyError("root comparison did not separate")


# --- report rendering -----------------------------------------------------


def parse_decimal(text: str) -> Fraction:
    """Exact Fraction from a decimal or scientific literal such as '1e-12'."""
    from decimal import Decimal, InvalidOperation

    try:
        return Fraction(Decimal(text.strip()))
    except (InvalidOperation, ValueError):
        raise DomainError(f"not a decimal number: {text!r}") from None


def format_decimal(value: Fraction, places: int = 9) -> str:
    """Fixed-point rendering, trailing zeros stripped but one decimal kept."""
    num, den = value.numerator, value.denominator
    sign = "-" if num < 0 else ""
    num = abs(num)
    scaled, rem = divmod(num * 10 ** places, den)
    if 2 * rem >= den:
        scaled += 1
    digits = str(scaled).rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:]
    frac = frac.rstrip("0") or "0"
    if sign == "-" and whole == "0" and frac == "0":
        sign = ""
    return f"{sign}{whole}.{frac}"
