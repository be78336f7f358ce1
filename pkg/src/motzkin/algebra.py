"""Exact arithmetic for generating functions of Motzkin classes.

Everything lives in the quadratic extension K of the rationals in x by
the element C satisfying x^2*C^2 - C + 1 = 0, whose power series root
is the generating function of paths with no H step.  On top of K sit
polynomials and rational functions in a second variable y used by the
prefix recursions.  All representations are canonical, so structural
equality is mathematical equality.

Layers:
  Poly   dense tuple of Fractions in x, no trailing zeros.
  RatX   reduced fraction of Polys with monic denominator.
  KElem  a + b*C with RatX components.
  YRat   reduced fraction of KElem-coefficient polynomials in y,
         denominator monic in y.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd

Poly = tuple[Fraction, ...]


class NotAPowerSeriesError(ArithmeticError):
    """The element has a pole at x = 0."""


class PoleAtPointError(ArithmeticError):
    """Substitution hit a zero of the denominator."""


def poly(coeffs) -> Poly:
    """Dense polynomial from ascending coefficients."""
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


P_ZERO: Poly = ()
P_ONE: Poly = poly([1])
P_X: Poly = poly([0, 1])


def px_add(p: Poly, q: Poly) -> Poly:
    n = max(len(p), len(q))
    return poly([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                 for i in range(n)])


def px_neg(p: Poly) -> Poly:
    return tuple(-c for c in p)


def px_sub(p: Poly, q: Poly) -> Poly:
    return px_add(p, px_neg(q))


def px_mul(p: Poly, q: Poly) -> Poly:
    if not p or not q:
        return P_ZERO
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly(out)


def px_scale(p: Poly, c) -> Poly:
    c = Fraction(c)
    if c == 0:
        return P_ZERO
    return tuple(a * c for a in p)


def px_divmod(p: Poly, q: Poly) -> tuple[Poly, Poly]:
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    quo = [Fraction(0)] * max(len(p) - len(q) + 1, 0)
    lead = q[-1]
    for i in range(len(rem) - len(q), -1, -1):
        c = rem[i + len(q) - 1] / lead
        if c == 0:
            continue
        quo[i] = c
        for j, b in enumerate(q):
            rem[i + j] -= c * b
    return poly(quo), poly(rem)


def px_gcd(p: Poly, q: Poly) -> Poly:
    """Monic greatest common divisor."""
    while q:
        p, q = q, px_divmod(p, q)[1]
    if not p:
        return P_ZERO
    return px_scale(p, 1 / p[-1])


def px_eval(p: Poly, v: Fraction) -> Fraction:
    out = Fraction(0)
    for c in reversed(p):
        out = out * v + c
    return out


def px_integerize(p: Poly) -> tuple[Poly, Fraction]:
    """Scale to primitive integer coefficients; returns (poly, factor)."""
    if not p:
        return p, Fraction(1)
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    scaled = [c * den for c in p]
    num = 0
    for c in scaled:
        num = gcd(num, int(c))
    factor = Fraction(den, num)
    return tuple(c / num for c in scaled), factor


@dataclass(frozen=True)
class RatX:
    """Reduced rational function of x with monic denominator."""

    num: Poly
    den: Poly

    @staticmethod
    def make(num, den=P_ONE) -> "RatX":
        if not isinstance(num, tuple):
            num = poly([num]) if not isinstance(num, (list,)) else poly(num)
        if not isinstance(den, tuple):
            den = poly([den]) if not isinstance(den, (list,)) else poly(den)
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return RatX(P_ZERO, P_ONE)
        g = px_gcd(num, den)
        if len(g) > 1:
            num = px_divmod(num, g)[0]
            den = px_divmod(den, g)[0]
        lc = den[-1]
        if lc != 1:
            num = px_scale(num, 1 / lc)
            den = px_scale(den, 1 / lc)
        return RatX(num, den)

    def __add__(self, o: "RatX") -> "RatX":
        return RatX.make(px_add(px_mul(self.num, o.den),
                                px_mul(o.num, self.den)),
                         px_mul(self.den, o.den))

    def __neg__(self) -> "RatX":
        return RatX(px_neg(self.num), self.den)

    def __sub__(self, o: "RatX") -> "RatX":
        return self + (-o)

    def __mul__(self, o: "RatX") -> "RatX":
        return RatX.make(px_mul(self.num, o.num), px_mul(self.den, o.den))

    def __truediv__(self, o: "RatX") -> "RatX":
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return RatX.make(px_mul(self.num, o.den), px_mul(self.den, o.num))

    def is_zero(self) -> bool:
        return not self.num


R_ZERO = RatX.make(0)
R_ONE = RatX.make(1)
R_X = RatX.make(P_X)
R_XX = R_X * R_X


def ratx(num, den=1) -> RatX:
    """Rational function from ints, Fractions or coefficient lists."""
    to_poly = lambda v: v if isinstance(v, tuple) else (
        poly(v) if isinstance(v, list) else poly([v]))
    return RatX.make(to_poly(num), to_poly(den))


@dataclass(frozen=True)
class KElem:
    """Element a + b*C of the quadratic extension K."""

    a: RatX
    b: RatX

    @staticmethod
    def of(a, b=0) -> "KElem":
        wrap = lambda v: v if isinstance(v, RatX) else ratx(v)
        return KElem(wrap(a), wrap(b))

    def __add__(self, o: "KElem") -> "KElem":
        return KElem(self.a + o.a, self.b + o.b)

    def __neg__(self) -> "KElem":
        return KElem(-self.a, -self.b)

    def __sub__(self, o: "KElem") -> "KElem":
        return self + (-o)

    def __mul__(self, o: "KElem") -> "KElem":
        # C^2 = (C - 1)/x^2
        bb = self.b * o.b
        cross = self.a * o.b + self.b * o.a
        shift = bb / R_XX
        return KElem(self.a * o.a - shift, cross + shift)

    def inverse(self) -> "KElem":
        # conjugate is (a + b/x^2) - b*C; norm lies in Q(x)
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        norm = self.a * self.a + self.a * self.b / R_XX \
            + self.b * self.b / R_XX
        conj = KElem(self.a + self.b / R_XX, -self.b)
        return KElem(conj.a / norm, conj.b / norm)

    def __truediv__(self, o: "KElem") -> "KElem":
        return self * o.inverse()

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()


K_ZERO = KElem.of(0)
K_ONE = KElem.of(1)
K_C = KElem.of(0, 1)
K_X = KElem(R_X, R_ZERO)


def k_of(a, b=0) -> KElem:
    return KElem.of(a, b)


# polynomials in y with KElem coefficients

KyPoly = tuple[KElem, ...]


def yp(coeffs) -> KyPoly:
    out = list(coeffs)
    while out and out[-1].is_zero():
        out.pop()
    return tuple(out)


def yp_add(p: KyPoly, q: KyPoly) -> KyPoly:
    n = max(len(p), len(q))
    return yp([(p[i] if i < len(p) else K_ZERO)
               + (q[i] if i < len(q) else K_ZERO) for i in range(n)])


def yp_neg(p: KyPoly) -> KyPoly:
    return tuple(-c for c in p)


def yp_mul(p: KyPoly, q: KyPoly) -> KyPoly:
    if not p or not q:
        return ()
    out = [K_ZERO] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return yp(out)


def yp_scale(p: KyPoly, k: KElem) -> KyPoly:
    if k.is_zero():
        return ()
    return tuple(c * k for c in p)


def yp_divmod(p: KyPoly, q: KyPoly) -> tuple[KyPoly, KyPoly]:
    if not q:
        raise ZeroDivisionError("division by zero polynomial in y")
    rem = list(p)
    quo = [K_ZERO] * max(len(p) - len(q) + 1, 0)
    inv_lead = q[-1].inverse()
    for i in range(len(rem) - len(q), -1, -1):
        c = rem[i + len(q) - 1] * inv_lead
        if c.is_zero():
            continue
        quo[i] = c
        for j, b in enumerate(q):
            rem[i + j] = rem[i + j] - c * b
    return yp(quo), yp(rem)


def yp_gcd(p: KyPoly, q: KyPoly) -> KyPoly:
    while q:
        p, q = q, yp_divmod(p, q)[1]
    if not p:
        return ()
    return yp_scale(p, p[-1].inverse())


def yp_eval(p: KyPoly, v: KElem) -> KElem:
    out = K_ZERO
    for c in reversed(p):
        out = out * v + c
    return out


@dataclass(frozen=True)
class YRat:
    """Reduced rational function of y over K, denominator monic in y."""

    num: KyPoly
    den: KyPoly

    @staticmethod
    def make(num: KyPoly, den: KyPoly = (K_ONE,)) -> "YRat":
        if not den:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num:
            return YRat((), (K_ONE,))
        g = yp_gcd(num, den)
        if len(g) > 1:
            num = yp_divmod(num, g)[0]
            den = yp_divmod(den, g)[0]
        lead = den[-1]
        if lead != K_ONE:
            inv = lead.inverse()
            num = yp_scale(num, inv)
            den = yp_scale(den, inv)
        return YRat(num, den)

    def __add__(self, o: "YRat") -> "YRat":
        return YRat.make(yp_add(yp_mul(self.num, o.den),
                                yp_mul(o.num, self.den)),
                         yp_mul(self.den, o.den))

    def __neg__(self) -> "YRat":
        return YRat(yp_neg(self.num), self.den)

    def __sub__(self, o: "YRat") -> "YRat":
        return self + (-o)

    def __mul__(self, o: "YRat") -> "YRat":
        return YRat.make(yp_mul(self.num, o.num), yp_mul(self.den, o.den))

    def __truediv__(self, o: "YRat") -> "YRat":
        if not o.num:
            raise ZeroDivisionError("division by zero rational function")
        return YRat.make(yp_mul(self.num, o.den), yp_mul(self.den, o.num))

    def subst(self, v: KElem) -> KElem:
        """Value at y = v; the denominator must not vanish there."""
        dv = yp_eval(self.den, v)
        if dv.is_zero():
            raise PoleAtPointError("denominator vanishes at the point")
        return yp_eval(self.num, v) / dv

    def is_zero(self) -> bool:
        return not self.num


Y_ZERO = YRat.make(())
Y_ONE = YRat.make((K_ONE,))
Y_VAR = YRat.make((K_ZERO, K_ONE))


def y_series(f: YRat, h_max: int) -> list[KElem]:
    """Coefficients of y^0..y^h_max of f expanded as a series in y."""
    if not f.den or f.den[0].is_zero():
        raise NotAPowerSeriesError("pole at y = 0")
    inv0 = f.den[0].inverse()
    out: list[KElem] = []
    for h in range(h_max + 1):
        acc = f.num[h] if h < len(f.num) else K_ZERO
        for j in range(1, min(h, len(f.den) - 1) + 1):
            acc = acc - f.den[j] * out[h - j]
        out.append(acc * inv0)
    return out


def y_const(k: KElem) -> YRat:
    return YRat.make(yp([k]))


# power series and closed forms

def catalan_coefficients(n_max: int) -> list[Fraction]:
    """Coefficients of the series root of x^2*C^2 - C + 1 = 0."""
    out = [Fraction(0)] * (n_max + 1)
    for k in range(0, n_max // 2 + 1):
        out[2 * k] = Fraction(comb(2 * k, k), k + 1)
    return out


def _px_series_coeffs(p: Poly, n_max: int) -> list[Fraction]:
    return [p[i] if i < len(p) else Fraction(0) for i in range(n_max + 1)]


def _series_divide(num: list[Fraction], den: Poly,
                   n_max: int) -> list[Fraction]:
    d0 = den[0]
    out = []
    for n in range(n_max + 1):
        acc = num[n]
        for j in range(1, min(n, len(den) - 1) + 1):
            acc -= den[j] * out[n - j]
        out.append(acc / d0)
    return out


def series(u: KElem, n_max: int) -> list[Fraction]:
    """Power series coefficients of u at x = 0 up to order n_max.

    Raises NotAPowerSeriesError when u has a pole at the origin.
    """
    # u = (P + R*C)/W with polynomial P, R, W
    p = px_mul(u.a.num, u.b.den)
    r = px_mul(u.b.num, u.a.den)
    w = px_mul(u.a.den, u.b.den)
    shift = 0
    while shift < len(w) and w[shift] == 0:
        shift += 1
    w0 = w[shift:]
    order = n_max + shift
    cat = catalan_coefficients(order)
    pc = _px_series_coeffs(p, order)
    rc = _px_series_coeffs(r, order)
    numc = []
    for n in range(order + 1):
        acc = pc[n]
        for j in range(min(n, len(r) - 1) + 1 if r else 0):
            acc += rc[j] * cat[n - j]
        numc.append(acc)
    if any(c != 0 for c in numc[:shift]):
        raise NotAPowerSeriesError("pole at the origin")
    return _series_divide(numc[shift:], w0, n_max)


def minimal_polynomial(u: KElem) -> tuple[Poly, Poly, Poly]:
    """Primitive integer (c2, c1, c0) with c2*u^2 + c1*u + c0 = 0.

    Degree-one elements get c2 = 0.  The leading nonzero c has positive
    leading coefficient and the joint integer content is 1.
    """
    if u.b.is_zero():
        c2, c1, c0 = P_ZERO, u.a.den, px_neg(u.a.num)
    else:
        a = u.a
        b = u.b
        # eliminate C between t = a + b*C and x^2*C^2 - C + 1 = 0
        c2r = RatX.make(px_mul(P_X, P_X))
        c1r = -(c2r * a + c2r * a) - b
        c0r = c2r * a * a + a * b + b * b
        c2 = px_mul(c2r.num, px_mul(c1r.den, c0r.den))
        c1 = px_mul(c1r.num, px_mul(c2r.den, c0r.den))
        c0 = px_mul(c0r.num, px_mul(c2r.den, c1r.den))
        g = px_gcd(px_gcd(c2, c1), c0)
        if len(g) > 1:
            c2 = px_divmod(c2, g)[0]
            c1 = px_divmod(c1, g)[0]
            c0 = px_divmod(c0, g)[0]
    return _primitive_triple(c2, c1, c0)


def _primitive_triple(c2: Poly, c1: Poly, c0: Poly):
    den = 1
    for p in (c2, c1, c0):
        for c in p:
            den = den * c.denominator // gcd(den, c.denominator)
    num = 0
    for p in (c2, c1, c0):
        for c in p:
            num = gcd(num, int(c * den))
    scale = Fraction(den, num)
    lead = c2 if c2 else c1
    if lead and lead[-1] * scale < 0:
        scale = -scale
    return tuple(px_scale(p, scale) for p in (c2, c1, c0))


def to_sqrt_form(u: KElem) -> tuple[Poly, Poly, Poly]:
    """Integer (n1, n2, d) with u = (n1 + n2*sqrt(1-4x^2))/d.

    Uses C = (1 - sqrt(1-4x^2))/(2x^2); the lowest nonzero coefficient
    of d is positive and the joint content is 1.
    """
    if u.is_zero():
        return (P_ZERO, P_ZERO, P_ONE)
    half = RatX.make(poly([Fraction(1)]), poly([0, 0, 2]))
    big_a = u.a + u.b * half
    big_b = -(u.b * half)
    den = px_mul(big_a.den, big_b.den)
    n1 = px_mul(big_a.num, big_b.den)
    n2 = px_mul(big_b.num, big_a.den)
    g = px_gcd(px_gcd(n1, n2), den)
    if len(g) > 1:
        n1 = px_divmod(n1, g)[0]
        n2 = px_divmod(n2, g)[0]
        den = px_divmod(den, g)[0]
    den_i = 1
    for p in (n1, n2, den):
        for c in p:
            den_i = den_i * c.denominator // gcd(den_i, c.denominator)
    num_i = 0
    for p in (n1, n2, den):
        for c in p:
            num_i = gcd(num_i, int(c * den_i))
    scale = Fraction(den_i, num_i)
    low = next(c for c in den if c != 0)
    if low * scale < 0:
        scale = -scale
    return (px_scale(n1, scale), px_scale(n2, scale), px_scale(den, scale))


def from_sqrt_form(n1: Poly, n2: Poly, den: Poly) -> KElem:
    """KElem equal to (n1 + n2*sqrt(1-4x^2))/den."""
    root = KElem(R_ONE, RatX.make(poly([-2]))
                 * RatX.make(px_mul(P_X, P_X)))
    d = KElem(RatX.make(den), R_ZERO)
    return (KElem(RatX.make(n1), R_ZERO)
            + KElem(RatX.make(n2), R_ZERO) * root) / d


# display helpers

def poly_str(p: Poly, var: str = "x") -> str:
    if not p:
        return "0"
    parts = []
    for i in range(len(p) - 1, -1, -1):
        c = p[i]
        if c == 0:
            continue
        if i == 0:
            term = str(c)
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            if c < 0:
                mag = "-" + mag
            term = f"{mag}{var}" + (f"^{i}" if i > 1 else "")
        if parts and not term.startswith("-"):
            parts.append("+ " + term)
        elif parts:
            parts.append("- " + term[1:])
        else:
            parts.append(term)
    return " ".join(parts)


def ratx_str(r: RatX) -> str:
    if r.is_zero():
        return "0"
    lcm = 1
    for p in (r.num, r.den):
        for c in p:
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ni = [int(c * lcm) for c in r.num]
    di = [int(c * lcm) for c in r.den]
    content = 0
    for c in ni + di:
        content = gcd(content, c)
    ni = poly([Fraction(c, content) for c in ni])
    di = poly([Fraction(c, content) for c in di])
    if di == P_ONE:
        return poly_str(ni)
    return f"({poly_str(ni)})/({poly_str(di)})"


def k_str(u: KElem) -> str:
    b = ratx_str(u.b)
    if not _is_simple_token(b):
        b = f"({b})"
    return f"{ratx_str(u.a)} + {b}*C"


def _is_simple_token(s: str) -> bool:
    # no embedded additive structure that would bind wrong under *C
    return not any(ch in s[1:] for ch in "+-") and "/" not in s


def sqrt_form_str(u: KElem) -> str:
    n1, n2, den = to_sqrt_form(u)
    sign = "+"
    if n2 and all(c <= 0 for c in n2):
        n2 = px_neg(n2)
        sign = "-"
    return (f"({poly_str(n1)} {sign} ({poly_str(n2)})*sqrt(1-4*x^2))"
            f"/({poly_str(den)})")


def minpoly_str(u: KElem) -> str:
    c2, c1, c0 = minimal_polynomial(u)
    return (f"({poly_str(c2)})*D^2 + ({poly_str(c1)})*D"
            f" + ({poly_str(c0)}) = 0")
