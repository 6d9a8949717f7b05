"""Divisor-class arithmetic on a split-model hyperelliptic curve
W: y^2 = F(x), deg F = 2g + 2, lc(F) = 1, over an exact field of
characteristic != 2.

The curve has two rational points at infinity, distinguished by the branch
of sqrt(F): y/x^(g+1) -> +1 at inf+ and -1 at inf-.  A divisor class is
carried as an affine semi-reduced Mumford pair (u, v) plus explicit integer
weights (n+, n-) at the infinite points, normalized so the total degree is
zero.  Composition is the usual ideal product; reduction replaces v by its
representative congruent to the polynomial square root V+ of F, which makes
each step drop deg u below g + 1.

A small Riemann-Roch engine (linear algebra on functions (a + b y)/d with
prescribed vanishing) provides principality tests - used as the independent
oracle for the group law - and the canonical presentation of classes in the
anti-invariant part of the Jacobian of the covering involution
i(x, y) = (-x, -y).
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import (Element, FieldError, Polynomial, RationalFunction,
                      inverse_mod, poly_gcd, poly_xgcd)
from .algebra.linalg import kernel_basis


# ---------------------------------------------------------------------------
# power-series helpers (coefficient lists in the local parameter, lowest first)
# ---------------------------------------------------------------------------


def _series_mul(a, b, prec, field):
    out = [field.zero] * prec
    for i, ai in enumerate(a[:prec]):
        if ai.is_zero():
            continue
        for j, bj in enumerate(b[:prec - i]):
            out[i + j] = out[i + j] + ai * bj
    return out


def _series_inv(a, prec, field):
    if a[0].is_zero():
        raise ZeroDivisionError("series has no inverse")
    inv0 = a[0].inverse()
    out = [inv0] + [field.zero] * (prec - 1)
    for n in range(1, prec):
        s = field.zero
        for k in range(1, n + 1):
            ak = a[k] if k < len(a) else field.zero
            s = s + ak * out[n - k]
        out[n] = -inv0 * s
    return out


def _series_sqrt(a, prec, field):
    """sqrt of a series with a[0] = 1 (Newton iteration)."""
    if not a[0].is_one():
        raise FieldError("series sqrt needs constant term 1")
    out = [field.one]
    half = field(2).inverse()
    n = 1
    while n < prec:
        n = min(2 * n, prec)
        cur = out + [field.zero] * (n - len(out))
        quo = _series_mul(a, _series_inv(cur, n, field), n, field)
        out = [(cur[i] + quo[i]) * half for i in range(n)]
    return out + [field.zero] * (prec - len(out))


# ---------------------------------------------------------------------------
# the curve
# ---------------------------------------------------------------------------


class SplitCurve:
    def __init__(self, F: Polynomial):
        if F.degree % 2 != 0 or F.degree < 4:
            raise FieldError("split model needs even degree >= 4")
        if not F.leading().is_one():
            raise FieldError("leading coefficient must be 1")
        if F.field.char == 2:
            raise FieldError("characteristic 2 is unsupported here")
        from .algebra import squarefree_decomposition
        if any(m > 1 for _, m in squarefree_decomposition(F)):
            raise FieldError("F must be squarefree")
        self.F = F
        self.field = F.field
        self.g = (F.degree - 2) // 2
        self._series_cache = {}
        self.Vplus = self._sqrt_poly_part()

    def _sqrt_poly_part(self) -> Polynomial:
        """V with deg V = g + 1 and deg(F - V^2) <= g (top coefficients of
        the square root at infinity)."""
        S = self.sqrt_series(self.g + 2)
        cs = [self.field.zero] * (self.g + 2)
        for k, s in enumerate(S):
            power = self.g + 1 - k
            if power < 0:
                break
            cs[power] = s
        V = Polynomial(self.field, cs)
        if (self.F - V * V).degree > self.g:
            raise ArithmeticError("polynomial square-root truncation failed")
        return V

    def sqrt_series(self, prec: int):
        """S(T) with S^2 = T^(2g+2) F(1/T), S(0) = 1; y = +-x^(g+1) S(1/x)
        at the two infinite points."""
        if prec in self._series_cache:
            return self._series_cache[prec]
        n = self.F.degree
        G = [self.F[n - j] if n - j >= 0 else self.field.zero for j in range(prec)]
        S = _series_sqrt(G, prec, self.field)
        self._series_cache[prec] = S
        return S

    def is_even_model(self) -> bool:
        return all(self.F[i].is_zero() for i in range(1, self.F.degree + 1, 2))

    def on_curve(self, x0: Element, y0: Element) -> bool:
        return self.F.evaluate(x0) == y0 * y0

    def hensel_v(self, u: Polynomial, v: Polynomial, k: int) -> Polynomial:
        """Lift v with v^2 = F mod u to V with V^2 = F mod u^k (needs
        gcd(u, v) = 1)."""
        target = u ** k
        cur = v % target
        prec = 1
        while prec < k:
            prec = min(2 * prec, k)
            mod = u ** prec
            num = (self.F - cur * cur) % mod
            cur = (cur + num * inverse_mod((2 * cur) % mod, mod)) % mod
        if (cur * cur - self.F) % target != Polynomial.zero(self.field):
            raise ArithmeticError("Hensel lift failed")
        return cur

    def expansion_at_infinity(self, a: Polynomial, b: Polynomial, sign: int,
                              low: int):
        """Laurent coefficients {j: c_j} of a + b*y at inf+- for x^j with
        j >= low (y = sign * x^(g+1) S(1/x))."""
        top = max(a.degree, b.degree + self.g + 1, low)
        prec = top - low + 1
        S = self.sqrt_series(prec + 1)
        out = {}
        for j in range(low, top + 1):
            c = a[j] if 0 <= j <= a.degree else self.field.zero
            # b_m x^(m + g + 1) * s_k x^(-k) lands on x^j when m = j - g - 1 + k
            for k in range(0, prec + 1):
                m = j - self.g - 1 + k
                if 0 <= m <= b.degree and k < len(S):
                    bm = b[m]
                    if not bm.is_zero():
                        term = bm * S[k]
                        c = c + (term if sign > 0 else -term)
            out[j] = c
        return out


# ---------------------------------------------------------------------------
# Mumford classes with infinity weights
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MumfordClass:
    """div(u, v) + n+ inf+ + n- inf- of total degree zero."""
    u: Polynomial
    v: Polynomial
    n_plus: int
    n_minus: int

    def degree_check(self):
        return self.u.degree + self.n_plus + self.n_minus

    def affine_degree(self):
        return self.u.degree


def identity_class(curve: SplitCurve) -> MumfordClass:
    return MumfordClass(Polynomial.one(curve.field),
                        Polynomial.zero(curve.field), 0, 0)


def class_from_pair(curve: SplitCurve, u: Polynomial, v: Polynomial,
                    n_plus: int = None) -> MumfordClass:
    u = u.monic()
    v = v % u
    if (v * v - curve.F) % u != Polynomial.zero(curve.field):
        raise FieldError("v^2 != F mod u")
    if n_plus is None:
        # balanced symmetric weights for even affine degree
        if u.degree % 2 != 0:
            raise FieldError("odd affine degree needs an explicit weight")
        n_plus = -u.degree // 2
    return MumfordClass(u, v, n_plus, -u.degree - n_plus)


def point_class(curve: SplitCurve, x0, y0, mult: int = 1) -> MumfordClass:
    """mult * [(x0, y0) - inf+] as a class (degree balanced at inf+)."""
    field = curve.field
    x0, y0 = field(x0), field(y0)
    if not curve.on_curve(x0, y0):
        raise FieldError("point is not on the curve")
    u = Polynomial(field, [-x0, field.one])
    base = MumfordClass(u, Polynomial.constant(field, y0), -1, 0)
    return mumford_scalar(curve, base, mult)


def point_minus_i_point(curve: SplitCurve, x0, y0) -> MumfordClass:
    """The anti-invariant class [P - i(P)] for P = (x0, y0): supported on
    P + iota(i(P)) = (x0, y0) + (-x0, y0), so u = x^2 - x0^2 and v = y0
    (constant interpolation, valid on an even model)."""
    field = curve.field
    x0, y0 = field(x0), field(y0)
    if not curve.on_curve(x0, y0):
        raise FieldError("point is not on the curve")
    if x0.is_zero():
        raise FieldError("point lies over x = 0")
    u = Polynomial(field, [-x0 * x0, field.zero, field.one])
    v = Polynomial.constant(field, y0)
    if (v * v - curve.F) % u != Polynomial.zero(field):
        raise FieldError("not an even model or point data inconsistent")
    return MumfordClass(u, v, -1, -1)


# -- composition and reduction --------------------------------------------------


def _compose(curve: SplitCurve, D1: MumfordClass, D2: MumfordClass):
    field = curve.field
    u1, v1, u2, v2 = D1.u, D1.v, D2.u, D2.v
    g0, e1, e2 = poly_xgcd(u1, u2)
    s, c1, c3 = poly_xgcd(g0, v1 + v2)
    # s = c1*(e1 u1 + e2 u2) + c3 (v1 + v2)
    u3 = (u1 * u2).exact_div(s * s)
    num = c1 * e1 * u1 * v2 + c1 * e2 * u2 * v1 + c3 * (v1 * v2 + curve.F)
    v3 = (num.exact_div(s)) % u3
    u3 = u3.monic()
    if not u3.is_constant() and (v3 * v3 - curve.F) % u3 != Polynomial.zero(field):
        raise ArithmeticError("composition broke the Mumford invariant")
    ds = s.degree
    return MumfordClass(u3, v3 % u3 if not u3.is_constant() else Polynomial.zero(field),
                        D1.n_plus + D2.n_plus + ds, D1.n_minus + D2.n_minus + ds)


def _reduce_once(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    """One V+-adapted reduction step for deg u >= g + 1."""
    field = curve.field
    u, v = D.u, D.v
    r = (curve.Vplus - v) % u
    vt = curve.Vplus - r          # = v mod u, monic of degree g + 1
    diff = curve.F - vt * vt
    w_full = diff.exact_div(u)
    lc = w_full.leading()
    w = w_full.monic()
    v_new = (-vt) % w if not w.is_constant() else Polynomial.zero(field)
    deg_r = r.degree if not r.is_zero() else 0
    if r.is_zero():
        raise ArithmeticError("reduction degenerated (F a perfect square?)")
    n_plus = D.n_plus + deg_r - w.degree
    n_minus = D.n_minus + (curve.g + 1) - w.degree
    return MumfordClass(w, v_new, n_plus, n_minus)


def _reduced(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    while D.u.degree > curve.g:
        D = _reduce_once(curve, D)
    return D


def mumford_add(curve: SplitCurve, D1: MumfordClass, D2: MumfordClass) -> MumfordClass:
    return _reduced(curve, _compose(curve, D1, D2))


def mumford_neg(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    field = curve.field
    u = D.u
    if u.is_constant():
        return MumfordClass(u, D.v, -D.n_plus, -D.n_minus)
    v = (-D.v) % u
    return MumfordClass(u, v, -u.degree - D.n_plus, -u.degree - D.n_minus)


def mumford_scalar(curve: SplitCurve, D: MumfordClass, n: int) -> MumfordClass:
    if n == 0:
        return identity_class(curve)
    if n < 0:
        return mumford_scalar(curve, mumford_neg(curve, D), -n)
    result = None
    base = D
    while n:
        if n & 1:
            result = base if result is None else mumford_add(curve, result, base)
        n >>= 1
        if n:
            base = mumford_add(curve, base, base)
    return result


def i_star(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    """Pushforward under i(x, y) = (-x, -y); needs an even model."""
    if not curve.is_even_model():
        raise FieldError("the covering involution needs an even F")
    field = curve.field
    u = D.u.compose(Polynomial(field, [field.zero, -field.one])).monic()
    v = (-D.v.compose(Polynomial(field, [field.zero, -field.one]))) % u \
        if not u.is_constant() else Polynomial.zero(field)
    return MumfordClass(u, v, D.n_minus, D.n_plus)


def iota_star(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    """Pushforward under the hyperelliptic involution (x, y) -> (x, -y)."""
    field = curve.field
    u = D.u
    v = (-D.v) % u if not u.is_constant() else Polynomial.zero(field)
    return MumfordClass(u, v, D.n_minus, D.n_plus)


# ---------------------------------------------------------------------------
# Riemann-Roch spaces: the independent class-group oracle
# ---------------------------------------------------------------------------


def _normalize_bundles(curve: SplitCurve, bundles):
    """Split a list of (u, v, mult) into pairwise coprime-or-equal atoms with
    gcd(u, v) = 1 or v = 0, merging equal (u, v)."""
    field = curve.field
    work = [(u.monic(), v % u, m) for (u, v, m) in bundles
            if m != 0 and u.degree >= 1]
    changed = True
    while changed:
        changed = False
        # peel off Weierstrass content
        for idx, (u, v, m) in enumerate(work):
            if v.is_zero():
                continue
            w = poly_gcd(u, v)
            if w.degree >= 1:
                rest = u.exact_div(w)
                new = [(w, Polynomial.zero(field), m)]
                if rest.degree >= 1:
                    new.append((rest, v % rest, m))
                work[idx:idx + 1] = new
                changed = True
                break
        if changed:
            continue
        # split on common factors of distinct u's
        n = len(work)
        for i in range(n):
            for j in range(i + 1, n):
                ui, vi, mi = work[i]
                uj, vj, mj = work[j]
                if ui == uj:
                    continue
                g = poly_gcd(ui, uj)
                if g.degree >= 1:
                    def split(u, v, m):
                        parts = []
                        a = g
                        b = u.exact_div(g) if u != g else Polynomial.one(field)
                        if a.degree >= 1:
                            parts.append((a, v % a, m))
                        if b.degree >= 1:
                            parts.append((b, v % b, m))
                        return parts
                    repl_i = split(ui, vi, mi)
                    repl_j = split(uj, vj, mj)
                    work = (work[:i] + repl_i + work[i + 1:j] + repl_j
                            + work[j + 1:])
                    changed = True
                    break
            if changed:
                break
        if changed:
            continue
        # same u, incompatible v: split where the two v's agree/anti-agree
        n = len(work)
        for i in range(n):
            for j in range(i + 1, n):
                ui, vi, mi = work[i]
                uj, vj, mj = work[j]
                if ui != uj or vi == vj:
                    continue
                if (vi + vj) % ui == Polynomial.zero(field):
                    continue
                g = poly_gcd(ui, vi - vj)
                if g.degree < 1:
                    g = poly_gcd(ui, vi + vj)
                if 1 <= g.degree < ui.degree:
                    rest = ui.exact_div(g)
                    work[j:j + 1] = [(g, vj % g, mj), (rest, vj % rest, mj)]
                    work[i:i + 1] = [(g, vi % g, mi), (rest, vi % rest, mi)]
                    changed = True
                    break
            if changed:
                break
    # merge identical (u, v)
    merged = {}
    order = []
    for u, v, m in work:
        key = (hash(u), hash(v))
        if key not in merged:
            merged[key] = [u, v, 0]
            order.append(key)
        merged[key][2] += m
    return [tuple(merged[k]) for k in order if merged[k][2] != 0]


@dataclass
class WDivisor:
    """A divisor on the curve as normalized bundles plus infinity weights."""
    bundles: list          # (u, v, mult)
    n_plus: int
    n_minus: int

    def degree(self):
        return sum(u.degree * m for u, v, m in self.bundles) + self.n_plus + self.n_minus


def divisor_of_class(curve: SplitCurve, D: MumfordClass) -> WDivisor:
    bundles = []
    if D.u.degree >= 1:
        bundles.append((D.u, D.v, 1))
    return WDivisor(_normalize_bundles(curve, bundles), D.n_plus, D.n_minus)


def divisor_difference(curve: SplitCurve, D1: MumfordClass, D2: MumfordClass) -> WDivisor:
    bundles = []
    if D1.u.degree >= 1:
        bundles.append((D1.u, D1.v, 1))
    if D2.u.degree >= 1:
        bundles.append((D2.u, D2.v, -1))
    return WDivisor(_normalize_bundles(curve, bundles),
                    D1.n_plus - D2.n_plus, D1.n_minus - D2.n_minus)


def rr_space(curve: SplitCurve, div: WDivisor):
    """Basis of L(div) = {h : (h) + div >= 0} as triples (a, b, den) with
    h = (a + b y)/den."""
    field = curve.field
    bundles = _normalize_bundles(curve, div.bundles)
    den = Polynomial.one(field)
    for u, v, m in bundles:
        if m > 0:
            den = den * u ** m
    # the denominator also has poles along the iota-conjugates of the pole
    # bundles; register them (weight 0) so the no-pole conditions apply there
    extra = []
    for u, v, m in bundles:
        if m > 0 and not v.is_zero():
            vc = (-v) % u
            if not any(u2 == u and v2 == vc for u2, v2, _ in bundles):
                extra.append((u, vc, 0))
    bundles = bundles + extra
    # conjugate-side multiplicity lookup
    def conj_mult(u, v):
        for (u2, v2, m2) in bundles:
            if u2 == u and v2 == ((-v) % u):
                return max(m2, 0)
        return 0

    na = den.degree + max(0, div.n_plus, div.n_minus)
    nb = na - (curve.g + 1)
    cols = (na + 1) + (nb + 1 if nb >= 0 else 0)
    if cols <= 0:
        return []

    def coeff_vec(poly_for_a, poly_for_b, modulus):
        """Row entries of (a + b*V) mod modulus per basis monomial."""
        rows = [[field.zero] * cols for _ in range(modulus.degree)]
        for i in range(na + 1):
            rem = (Polynomial(field, [field.zero] * i + [field.one]) * poly_for_a) % modulus
            for d in range(modulus.degree):
                rows[d][i] = rem[d]
        for i in range(nb + 1 if nb >= 0 else 0):
            rem = (Polynomial(field, [field.zero] * i + [field.one]) * poly_for_b) % modulus
            for d in range(modulus.degree):
                rows[d][na + 1 + i] = rem[d]
        return rows

    rows = []
    one = Polynomial.one(field)
    for u, v, m in bundles:
        if v.is_zero():
            # Weierstrass bundle: den ord (point units) = 2*max(m,0);
            # required ord of a + b y = 2*max(m,0) - m
            k = 2 * max(m, 0) - m
            if k <= 0:
                continue
            ka = (k + 1) // 2
            kb = k // 2
            if ka > 0:
                rows += coeff_vec(one, Polynomial.zero(field), u ** ka)
            if kb > 0:
                rows += coeff_vec(Polynomial.zero(field), one, u ** kb)
            continue
        k = max(m, 0) + conj_mult(u, v) - m
        if k <= 0:
            continue
        vlift = curve.hensel_v(u, v, k)
        rows += coeff_vec(one, vlift, u ** k)
    # infinity conditions
    for sign, weight in ((1, div.n_plus), (-1, div.n_minus)):
        w = -weight - den.degree
        top = max(na, nb + curve.g + 1) if nb >= 0 else na
        jmin = -w + 1
        if top < jmin:
            continue
        S = curve.sqrt_series(top - jmin + curve.g + 3)
        for j in range(jmin, top + 1):
            row = [field.zero] * cols
            for i in range(na + 1):
                if i == j:
                    row[i] = field.one
            for i in range(nb + 1 if nb >= 0 else 0):
                k = i + curve.g + 1 - j
                if 0 <= k < len(S):
                    row[na + 1 + i] = S[k] if sign > 0 else -S[k]
            rows.append(row)
    kern = kernel_basis(rows, cols, field)
    out = []
    for vec in kern:
        a = Polynomial(field, vec[:na + 1])
        b = Polynomial(field, vec[na + 1:]) if nb >= 0 else Polynomial.zero(field)
        out.append((a, b, den))
    return out


def is_principal(curve: SplitCurve, div: WDivisor) -> bool:
    if div.degree() != 0:
        return False
    return len(rr_space(curve, div)) == 1


def classes_equal(curve: SplitCurve, D1: MumfordClass, D2: MumfordClass) -> bool:
    if (D1.u, D1.v, D1.n_plus, D1.n_minus) == (D2.u, D2.v, D2.n_plus, D2.n_minus):
        return True
    return is_principal(curve, divisor_difference(curve, D1, D2))


# ---------------------------------------------------------------------------
# canonical symmetric presentation of anti-invariant classes
# ---------------------------------------------------------------------------


def canonicalize_prym(curve: SplitCurve, D: MumfordClass) -> MumfordClass:
    """The representative (x^2 - A, const, -1, -1) of an anti-invariant class
    (i_* D = -D), via one interpolation in L(D + inf+ + inf-)."""
    field = curve.field
    if not curve.is_even_model():
        raise FieldError("anti-invariant classes need an even model")
    base = divisor_of_class(curve, D)
    if is_principal(curve, base):
        return identity_class(curve)
    lifted = WDivisor(base.bundles, base.n_plus + 1, base.n_minus + 1)
    space = rr_space(curve, lifted)
    if len(space) != 1:
        raise ArithmeticError("class has no unique degree-2 presentation")
    a, b, den = space[0]
    # push forward along x: the affine support of D + inf's + div(h)
    norm = a * a - b * b * curve.F
    prod = RationalFunction(norm, den * den)
    for u, v, m in base.bundles:
        prod = prod * RationalFunction(u) ** m
    if not prod.den.is_constant():
        raise ArithmeticError("unexpected denominator in the norm quotient")
    u_s = prod.num.monic()
    if u_s.degree != 2 or not u_s[1].is_zero():
        raise ArithmeticError("class is not anti-invariant (or is special)")
    rem = curve.F % u_s
    if not rem.is_constant():
        raise ArithmeticError("even-model reduction failed")
    val = rem.constant_coeff()
    b0 = _const_sqrt(field, val)
    for cand in (b0, -b0):
        candidate = MumfordClass(u_s, Polynomial.constant(field, cand), -1, -1)
        if classes_equal(curve, D, candidate):
            return candidate
    raise ArithmeticError("no matching square root for the symmetric form")


def _const_sqrt(field, val: Element) -> Element:
    if field.order is not None:
        from .algebra import sqrt
        return sqrt(val)
    from .quadratic import _sqrt_const
    return _sqrt_const(val)
