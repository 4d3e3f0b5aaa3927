"""Univariate polynomial factorization: GF(p) and Q.

GF(p) polynomials are ascending lists of ints in [0, p).  Rational
factorization runs squarefree decomposition, factors the squarefree
part modulo a good prime by Cantor-Zassenhaus, Hensel-lifts past the
coefficient bound, and recombines modular factors by trial division
(small subsets first).  Every returned factor is certified by exact
division, so the modular steps carry no trust.
"""

import random
from math import gcd, isqrt

from gmpy2 import mpq, mpz

from .exact import RatPoly


# ---------------------------------------------------------------------------
# GF(p)[x]

def gf_trim(f, p):
    f = [c % p for c in f]
    while f and f[-1] == 0:
        f.pop()
    return f


def gf_add(f, g, p):
    if len(f) < len(g):
        f, g = g, f
    out = list(f)
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return gf_trim(out, p)


def gf_sub(f, g, p):
    out = list(f) + [0] * max(0, len(g) - len(f))
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return gf_trim(out, p)


def gf_mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return gf_trim(out, p)


def gf_divmod(f, g, p):
    if not g:
        raise ZeroDivisionError
    f = list(f)
    dg = len(g) - 1
    df = len(f) - 1
    if df < dg:
        return [], gf_trim(f, p)
    inv = pow(g[-1], p - 2, p)
    quo = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        c = f[k + dg] % p * inv % p
        if c:
            quo[k] = c
            for j, b in enumerate(g):
                f[k + j] = (f[k + j] - c * b) % p
    return gf_trim(quo, p), gf_trim(f[:dg], p)


def gf_gcd(f, g, p):
    while g:
        f, g = g, gf_divmod(f, g, p)[1]
    return gf_monic(f, p)


def gf_monic(f, p):
    if not f:
        return f
    inv = pow(f[-1], p - 2, p)
    return [c * inv % p for c in f]


def gf_pow_mod(base, e, mod, p):
    result = [1]
    base = gf_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = gf_divmod(gf_mul(result, base, p), mod, p)[1]
        base = gf_divmod(gf_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def gf_derivative(f, p):
    return gf_trim([i * c for i, c in enumerate(f)][1:], p)


def gf_is_squarefree(f, p):
    return len(gf_gcd(f, gf_derivative(f, p), p)) == 1


def gf_factor_squarefree(f, p, rng=None):
    """Irreducible factors of a squarefree monic polynomial over GF(p)."""
    if rng is None:
        rng = random.Random(20210 + p % 1000)
    f = gf_monic(f, p)
    # distinct-degree splitting
    stages = []
    h = [0, 1]  # x
    v = list(f)
    d = 0
    while len(v) - 1 > 2 * (d + 1) - 1:
        d += 1
        h = gf_pow_mod(h, p, v, p)
        g = gf_gcd(gf_sub(h, [0, 1], p), v, p)
        if len(g) > 1:
            stages.append((g, d))
            v, _ = gf_divmod(v, g, p)
            h = gf_divmod(h, v, p)[1]
    if len(v) > 1:
        stages.append((v, len(v) - 1))
    # equal-degree splitting (Cantor-Zassenhaus)
    factors = []
    for g, d in stages:
        work = [g]
        while work:
            u = work.pop()
            if len(u) - 1 == d:
                factors.append(gf_monic(u, p))
                continue
            while True:
                r = [rng.randrange(p) for _ in range(len(u) - 1)]
                r = gf_trim(r, p)
                if len(r) < 2:
                    continue
                t = gf_pow_mod(r, (p ** d - 1) // 2, u, p)
                t = gf_sub(t, [1], p)
                w = gf_gcd(t, u, p)
                if 1 < len(w) < len(u):
                    work.append(w)
                    work.append(gf_divmod(u, w, p)[0])
                    break
    factors.sort(key=lambda h: (len(h), h))
    return factors


# ---------------------------------------------------------------------------
# Z[x] helpers

def int_content(f):
    c = 0
    for a in f:
        c = gcd(c, abs(int(a)))
    return c or 1


def int_primitive(f):
    c = int_content(f)
    out = [int(a) // c for a in f]
    if out and out[-1] < 0:
        out = [-a for a in out]
    return out


def ratpoly_to_int(f):
    """Clear denominators: returns integer coefficient list (ascending)."""
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // gcd(den, int(c.denominator))
    return [int(c * den) for c in f.coeffs]


def int_mul(f, g):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def int_divmod_exact(f, g):
    """Exact division in Z[x]; None if not divisible."""
    f = list(f)
    dg = len(g) - 1
    if not f:
        return []
    df = len(f) - 1
    if df < dg:
        return None
    quo = [0] * (df - dg + 1)
    for k in range(df - dg, -1, -1):
        if f[k + dg] % g[-1] != 0:
            return None
        c = f[k + dg] // g[-1]
        quo[k] = c
        if c:
            for j, b in enumerate(g):
                f[k + j] -= c * b
    if any(x != 0 for x in f[:dg]):
        return None
    return quo


# ---------------------------------------------------------------------------
# Hensel lifting

def _zip_pad(f, g, fill):
    n = max(len(f), len(g))
    return zip(f + [fill] * (n - len(f)), g + [fill] * (n - len(g)))


def _poly_mul_mod(f, g, m):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % m
    while out and out[-1] % m == 0:
        out.pop()
    return [c % m for c in out]


def _poly_divmod_mod(f, g, m):
    """Division mod m assuming lc(g) invertible mod m."""
    f = [c % m for c in f]
    while f and f[-1] == 0:
        f.pop()
    dg = len(g) - 1
    if not f or len(f) - 1 < dg:
        return [], f
    inv = pow(g[-1], -1, m)
    quo = [0] * (len(f) - dg)
    for k in range(len(f) - dg - 1, -1, -1):
        c = f[k + dg] * inv % m
        if c:
            quo[k] = c
            for j, b in enumerate(g):
                f[k + j] = (f[k + j] - c * b) % m
    rem = f[:dg]
    while rem and rem[-1] == 0:
        rem.pop()
    return quo, rem


def hensel_lift_factors(f, factors, p, target):
    """Lift a coprime factorization of monic f mod p to mod p^k >= target.

    Linear (per-prime-power) lifting of the full system; simple and
    adequate for the degrees in play here.
    """
    k = 1
    q = p
    lifted = [list(h) for h in factors]
    while q < target:
        q_next = q * p
        # current error
        prod = [1]
        for h in lifted:
            prod = int_mul(prod, h)
        err = [(a - b) % q_next for a, b in _zip_pad(list(f), prod, 0)]
        err = [c // q for c in err]  # divisible by q by construction
        # distribute error: e = sum delta_i * prod/h_i  mod p, deg delta_i < deg h_i
        for i, h in enumerate(lifted):
            others = [1]
            for j, g in enumerate(lifted):
                if j != i:
                    others = int_mul(others, g)
            others_mod = [c % p for c in others]
            # delta_i = err * inv(others) mod (h, p)
            inv = _gf_inverse_mod(others_mod, [c % p for c in h], p)
            delta = _poly_divmod_mod(_poly_mul_mod([c % p for c in err], inv, p),
                                     [c % p for c in h], p)[1]
            for d_idx, dc in enumerate(delta):
                if d_idx < len(h):
                    h[d_idx] = (h[d_idx] + q * dc) % q_next
        q = q_next
        k += 1
    return lifted, q


def _gf_inverse_mod(a, m, p):
    """Inverse of a modulo m over GF(p) by extended Euclid."""
    r0, r1 = gf_trim(m, p), gf_trim(a, p)
    t0, t1 = [], [1]
    while r1:
        qq, rr = gf_divmod(r0, r1, p)
        r0, r1 = r1, rr
        t0, t1 = t1, gf_sub(t0, gf_mul(qq, t1, p), p)
    if len(r0) != 1:
        raise ArithmeticError("not invertible")
    inv = pow(r0[0], p - 2, p)
    return [c * inv % p for c in t0]


# ---------------------------------------------------------------------------
# factorization over Q

def factor_rational(f):
    """Factor a RatPoly over Q.

    Returns (constant, [(monic irreducible RatPoly, multiplicity), ...])
    with constant * product == f exactly (verified).
    """
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    constant = f.leading()
    work = f.monic()
    factors = []
    # squarefree decomposition by repeated gcd with the derivative
    mult = 1
    sqfree_parts = []
    while work.degree > 0:
        g = _ratpoly_gcd(work, work.derivative())
        sqfree = work.divmod(g)[0]
        sqfree_parts.append((sqfree, mult))
        work = g
        mult += 1
    # consolidate: the classical output gives parts with ascending multiplicity
    pieces = {}
    for i in range(len(sqfree_parts)):
        part = sqfree_parts[i][0]
        nxt = sqfree_parts[i + 1][0] if i + 1 < len(sqfree_parts) else None
        exact = part if nxt is None else part.divmod(nxt)[0]
        if exact.degree > 0:
            pieces[i + 1] = exact
    for m, piece in sorted(pieces.items()):
        for irr in _factor_squarefree(piece):
            factors.append((irr, m))
    factors.sort(key=lambda fm: (fm[0].degree, fm[0].coeffs))
    # certification
    check = RatPoly((constant,))
    for irr, m in factors:
        for _ in range(m):
            check = check * irr
    if check != f:
        raise AssertionError("factorization failed certification")
    return constant, factors


def _ratpoly_gcd(f, g):
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def _factor_squarefree(f, rng=None):
    """Monic irreducible factors of a squarefree monic RatPoly."""
    if f.degree <= 0:
        return []
    if f.degree == 1:
        return [f]
    if rng is None:
        rng = random.Random(91)
    F = int_primitive(ratpoly_to_int(f))
    n = len(F) - 1
    lc = F[-1]
    # choose a prime keeping F squarefree with unit leading coefficient
    p = 2 ** 30 + 3
    while True:
        while not _probable_prime(p) or lc % p == 0:
            p += 2
        Fp = gf_monic([c % p for c in F], p)
        if len(Fp) == n + 1 and gf_is_squarefree(Fp, p):
            break
        p += 2
    modular = gf_factor_squarefree(Fp, p, rng)
    if len(modular) == 1:
        return [f]
    # Hensel lift past twice the Mignotte-style bound
    norm2 = isqrt(sum(int(c) * int(c) for c in F)) + 1
    bound = 2 ** (n + 1) * norm2 * abs(lc)
    lifted, q = hensel_lift_factors([c % p for c in F], modular, p, 2 * bound + 1)
    # recombine by increasing subset size
    import itertools
    remaining = list(range(len(lifted)))
    poly = list(F)
    found = []
    size = 1
    while 2 * size <= len(remaining):
        progress = False
        for subset in itertools.combinations(remaining, size):
            cand = [poly[-1] % q]  # leading coefficient of the current poly
            for idx in subset:
                cand = _poly_mul_mod(cand, lifted[idx], q)
            cand = [_centered(c, q) for c in cand]
            cand = int_primitive(cand)
            quo = int_divmod_exact(poly, cand)
            if quo is not None:
                found.append(cand)
                poly = int_primitive(quo)
                remaining = [i for i in remaining if i not in subset]
                progress = True
                break
        if not progress:
            size += 1
    if len(poly) > 1:
        found.append(int_primitive(poly))
    out = [RatPoly([mpq(c) for c in h]).monic() for h in found]
    out.sort(key=lambda h: (h.degree, h.coeffs))
    return out


def _centered(c, q):
    c %= q
    return c - q if c > q // 2 else c


def _probable_prime(n):
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
