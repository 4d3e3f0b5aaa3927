"""Sparse multivariate polynomial arithmetic and Groebner machinery.

Used by the representation solver: polynomials live either over Q
(gmpy2 rationals) or over a prime field GF(p) (plain ints mod p).
Monomials are exponent tuples; the order is graded reverse
lexicographic throughout.

The modular route runs Buchberger over GF(p) for several primes,
extracts a univariate eliminant and coordinate parametrizations by
linear algebra in the quotient algebra, and lifts them to Q by CRT plus
rational reconstruction.  Nothing computed modularly is trusted: the
caller re-verifies every lifted object exactly over Q.
"""

import heapq
import time

from gmpy2 import mpq


class SolveResourceError(RuntimeError):
    """An elimination resource cap (time or size) was exceeded."""


# ---------------------------------------------------------------------------
# coefficient domains

class GFDomain:
    """Prime field GF(p), elements stored as ints in [0, p)."""

    def __init__(self, p):
        self.p = p
        self.one = 1

    def normalize(self, c):
        return int(c) % self.p

    def neg(self, c):
        return (-c) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, c):
        return pow(c, self.p - 2, self.p)


class QQDomain:
    """The rationals via gmpy2.mpq."""

    one = mpq(1)

    def normalize(self, c):
        return mpq(c)

    def neg(self, c):
        return -c

    def mul(self, a, b):
        return a * b

    def inv(self, c):
        return 1 / c


# ---------------------------------------------------------------------------
# monomials (exponent tuples), grevlex order

def grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """Does a divide b?"""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def poly_lm(f):
    return max(f, key=grevlex_key)


def poly_eval(f, values, domain):
    """Evaluate a polynomial dict at a point (list of domain values)."""
    total = domain.normalize(0)
    for m, c in f.items():
        term = c
        for e, v in zip(m, values):
            if e:
                term = domain.mul(term, v ** e if not isinstance(domain, GFDomain)
                                  else pow(v, e, domain.p))
        total = total + term if not isinstance(domain, GFDomain) else (total + term) % domain.p
    return total


def poly_map_coeffs(f, fn):
    out = {}
    for m, c in f.items():
        c2 = fn(c)
        if c2:
            out[m] = c2
    return out


# ---------------------------------------------------------------------------
# normal form and Buchberger

def normal_form(f, reducers, domain):
    """Fully reduce f by a list of (poly, lm, lc_inv) reducers."""
    h = dict(f)
    result = {}
    # max-heap over grevlex via negated keys
    heap = [(_negkey(m)) + (m,) for m in h]
    heapq.heapify(heap)
    seen_dup = set()
    mul = domain.mul
    neg = domain.neg
    while heap:
        item = heapq.heappop(heap)
        m = item[2]
        c = h.get(m)
        if c is None:
            continue
        del h[m]
        red = None
        for g, lmg, lcinv in reducers:
            if mono_divides(lmg, m):
                red = (g, lmg, lcinv)
                break
        if red is None:
            result[m] = c
            continue
        g, lmg, lcinv = red
        q = mono_div(m, lmg)
        factor = mul(c, lcinv)
        nfactor = neg(factor)
        for mg, cg in g.items():
            if mg == lmg:
                continue
            mm = mono_mul(mg, q)
            prev = h.get(mm)
            if prev is None:
                cc = mul(nfactor, cg)
                if cc:
                    h[mm] = cc
                    heapq.heappush(heap, _negkey(mm) + (mm,))
            else:
                cc = prev + mul(nfactor, cg)
                if isinstance(domain, GFDomain):
                    cc %= domain.p
                if cc:
                    h[mm] = cc
                else:
                    del h[mm]
    return result


def _negkey(m):
    return (-sum(m), tuple(e for e in reversed(m)))


def _spoly(fi, fj, domain):
    (f, lmf, lcf_inv) = fi
    (g, lmg, lcg_inv) = fj
    L = mono_lcm(lmf, lmg)
    qf = mono_div(L, lmf)
    qg = mono_div(L, lmg)
    mul = domain.mul
    r = {}
    for m, c in f.items():
        mm = mono_mul(m, qf)
        r[mm] = mul(c, lcf_inv)
    for m, c in g.items():
        mm = mono_mul(m, qg)
        prev = r.get(mm, 0)
        cc = prev - mul(c, lcg_inv)
        if isinstance(domain, GFDomain):
            cc %= domain.p
        if cc:
            r[mm] = cc
        elif mm in r:
            del r[mm]
    return r


def buchberger(polys, domain, time_cap=None, pair_cap=200000):
    """Groebner basis (grevlex), Gebauer-Moeller pair pruning.

    Returns the interreduced basis as a list of (poly, lm, lc_inv)
    triples with monic leading coefficients.
    """
    t0 = time.time()
    basis = []          # list of (poly, lm, lc_inv); poly scaled monic
    pairs = []          # heap of (key, i, j) with key = grevlex key of lcm

    def monicify(f):
        lm = poly_lm(f)
        inv = domain.inv(f[lm])
        if f[lm] != domain.one:
            f = poly_map_coeffs(f, lambda c: domain.mul(c, inv))
        return (f, lm, domain.one)

    def update_pairs(k):
        # Gebauer-Moeller update for new element index k
        lmk = basis[k][1]
        cand = []
        for i in range(k):
            if basis[i] is None:
                continue
            cand.append((i, mono_lcm(basis[i][1], lmk)))
        kept = []
        for idx, (i, L) in enumerate(cand):
            dominated = False
            for jdx, (j, L2) in enumerate(cand):
                if jdx == idx:
                    continue
                if mono_divides(L2, L) and L2 != L:
                    dominated = True
                    break
                if L2 == L and jdx < idx:
                    dominated = True  # keep only one pair per lcm
                    break
            if not dominated:
                kept.append((i, L))
        # drop old pairs covered by the new element
        survivors = []
        for key, i, j, L in pairs:
            if (mono_divides(lmk, L)
                    and mono_lcm(basis[i][1], lmk) != L
                    and mono_lcm(basis[j][1], lmk) != L):
                continue
            survivors.append((key, i, j, L))
        pairs[:] = survivors
        for i, L in kept:
            if mono_coprime(basis[i][1], lmk):
                continue  # Buchberger's coprimality criterion
            pairs.append((grevlex_key(L), i, k, L))
        heapq.heapify(pairs)

    for f in polys:
        if not f:
            continue
        f = normal_form(f, [b for b in basis if b is not None], domain)
        if f:
            basis.append(monicify(f))
            update_pairs(len(basis) - 1)

    while pairs:
        if time_cap is not None and time.time() - t0 > time_cap:
            raise SolveResourceError("Groebner time cap exceeded (%.0fs)" % time_cap)
        if len(pairs) > pair_cap:
            raise SolveResourceError("Groebner pair cap exceeded")
        _, i, j, _L = heapq.heappop(pairs)
        if basis[i] is None or basis[j] is None:
            continue
        s = _spoly(basis[i], basis[j], domain)
        if not s:
            continue
        s = normal_form(s, [b for b in basis if b is not None], domain)
        if not s:
            continue
        basis.append(monicify(s))
        k = len(basis) - 1
        lmk = basis[k][1]
        # retire basis elements whose lead is now reducible (pairs only)
        for idx in range(k):
            if basis[idx] is not None and mono_divides(lmk, basis[idx][1]) and idx != k:
                pass  # keep as reducer; GM handles pair pruning
        update_pairs(k)

    # final interreduction
    live = [b for b in basis if b is not None]
    # drop elements whose lm is divisible by another's lm
    minimal = []
    for idx, (f, lm, inv) in enumerate(live):
        if any(jdx != idx and mono_divides(live[jdx][1], lm)
               and (live[jdx][1] != lm or jdx < idx) for jdx in range(len(live))):
            continue
        minimal.append((f, lm, inv))
    reduced = []
    for idx, (f, lm, inv) in enumerate(minimal):
        others = [minimal[j] for j in range(len(minimal)) if j != idx]
        g = normal_form(f, others, domain)
        if g:
            reduced.append(monicify(g))
    reduced.sort(key=lambda b: grevlex_key(b[1]))
    return reduced


# ---------------------------------------------------------------------------
# zero-dimensional quotient algebra over GF(p)

def quotient_monomial_basis(gb, nvars):
    """Standard monomials under the leading-term staircase.

    Returns None when the ideal is not zero-dimensional.
    """
    lms = [b[1] for b in gb]
    bounds = []
    for v in range(nvars):
        pure = [m[v] for m in lms
                if all(e == 0 for i, e in enumerate(m) if i != v) and m[v] > 0]
        if not pure:
            if any(sum(m) == 0 for m in lms):
                return []  # ideal is the whole ring
            return None
        bounds.append(min(pure))
    out = []
    stack = [()]
    while stack:
        prefix = stack.pop()
        v = len(prefix)
        if v == nvars:
            if not any(mono_divides(lm, prefix) for lm in lms):
                out.append(prefix)
            continue
        for e in range(bounds[v] + 1):
            stack.append(prefix + (e,))
    out.sort(key=grevlex_key)
    return out


class QuotientAlgebra:
    """GF(p)[x]/I for a zero-dimensional ideal, as explicit linear algebra."""

    def __init__(self, gb, nvars, p):
        self.gb = gb
        self.nvars = nvars
        self.p = p
        self.domain = GFDomain(p)
        basis = quotient_monomial_basis(gb, nvars)
        if basis is None:
            raise SolveResourceError("ideal is not zero-dimensional")
        self.monomials = basis
        self.index = {m: i for i, m in enumerate(basis)}
        self.dim = len(basis)
        self._mul_cache = {}

    def nf_vector(self, poly):
        """Normal form of a polynomial as a dense coefficient vector."""
        nf = normal_form(poly, self.gb, self.domain)
        v = [0] * self.dim
        for m, c in nf.items():
            v[self.index[m]] = c
        return v

    def multiply_by_var(self, vec, var):
        """Image of a quotient-algebra vector under multiplication by x_var."""
        cache = self._mul_cache.setdefault(var, {})
        out = [0] * self.dim
        p = self.p
        for i, c in enumerate(vec):
            if not c:
                continue
            col = cache.get(i)
            if col is None:
                m = self.monomials[i]
                shifted = list(m)
                shifted[var] += 1
                col = self.nf_vector({tuple(shifted): 1})
                cache[i] = col
            for j, a in enumerate(col):
                if a:
                    out[j] = (out[j] + c * a) % p
        return out

    def multiply_by_form(self, vec, weights):
        """Multiplication by the linear form sum_i weights[i] * x_i."""
        p = self.p
        out = [0] * self.dim
        for var, w in enumerate(weights):
            if not w:
                continue
            img = self.multiply_by_var(vec, var)
            for j, a in enumerate(img):
                if a:
                    out[j] = (out[j] + w * a) % p
        return out


class _LinearSolver:
    """Incremental Gaussian elimination over GF(p) for Krylov sequences."""

    def __init__(self, dim, p):
        self.dim = dim
        self.p = p
        self.rows = []      # echelonized rows
        self.pivots = []    # pivot index per row
        self.history = []   # combination over the inserted vectors

    def insert(self, vec):
        """Insert a vector; returns None if independent, else the
        coefficients expressing it over previously inserted vectors."""
        p = self.p
        v = list(vec)
        comb = [0] * len(self.history) + [1]
        for row, piv, hist in zip(self.rows, self.pivots, self.history):
            c = v[piv]
            if c:
                for j, a in enumerate(row):
                    if a:
                        v[j] = (v[j] - c * a) % p
                for j, a in enumerate(hist):
                    comb[j] = (comb[j] - c * a) % p
        piv = next((j for j, a in enumerate(v) if a), None)
        if piv is None:
            return comb
        inv = pow(v[piv], p - 2, p)
        v = [a * inv % p for a in v]
        comb = [a * inv % p for a in comb]
        for j in range(len(comb), len(self.history) + 1):
            comb.append(0)
        self.rows.append(v)
        self.pivots.append(piv)
        # pad histories to uniform length
        self.history = [h + [0] for h in self.history]
        self.history.append(comb)
        return None


def krylov_min_poly(algebra, weights):
    """Minimal polynomial of the linear form s = sum w_i x_i acting on 1.

    Returns (coeffs ascending, krylov_vectors) where coeffs is monic and
    m(s) * 1 = 0 in the quotient algebra.  The Krylov vectors span the
    cyclic subalgebra s generates.
    """
    p = algebra.p
    solver = _LinearSolver(algebra.dim, p)
    v = algebra.nf_vector({(0,) * algebra.nvars: 1})
    vectors = []
    while True:
        comb = solver.insert(v)
        if comb is not None:
            # v_k = sum comb[i] v_i  ->  min poly = x^k - sum comb[i] x^i
            k = len(vectors)
            coeffs = [(-comb[i]) % p for i in range(k)] + [1]
            return coeffs, vectors
        vectors.append(v)
        v = algebra.multiply_by_form(v, weights)


def express_in_krylov(algebra, vectors, target_vec):
    """Write target as sum c_k vectors[k] over GF(p); None if impossible."""
    p = algebra.p
    solver = _LinearSolver(algebra.dim, p)
    for v in vectors:
        if solver.insert(v) is not None:
            raise AssertionError("Krylov vectors are not independent")
    comb = solver.insert(target_vec)
    if comb is None:
        return None
    # target = sum comb[i] * vectors[i] ... comb includes target itself
    return [c % p for c in comb[:-1]]


# ---------------------------------------------------------------------------
# CRT and rational reconstruction

def crt_pair(a1, m1, a2, m2):
    """Combine x = a1 (mod m1), x = a2 (mod m2) for coprime moduli."""
    inv = pow(m1 % m2, m2 - 2, m2) if _is_prime_cached(m2) else pow(m1 % m2, -1, m2)
    t = (a2 - a1) % m2 * inv % m2
    return a1 + m1 * t


def _is_prime_cached(n, _cache={}):
    if n not in _cache:
        _cache[n] = _miller_rabin(n)
    return _cache[n]


def _miller_rabin(n):
    if n < 2:
        return False
    for sp in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % sp == 0:
            return n == sp
    d = n - 1
    r = 0
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


def rational_reconstruct(a, m):
    """Find n/d = a (mod m) with |n|, d <= sqrt(m/2); None if impossible."""
    a %= m
    if a == 0:
        return mpq(0)
    bound = int((m // 2) ** 0.5)
    r0, r1 = m, a
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if r1 == 0 or abs(s1) > bound:
        return None
    from math import gcd
    if gcd(r1, abs(s1)) != 1:
        return None
    if s1 < 0:
        return mpq(-r1, -s1)
    return mpq(r1, s1)


def primes_above(start, count):
    """Deterministic list of `count` primes >= start."""
    out = []
    n = start | 1
    while len(out) < count:
        if _miller_rabin(n):
            out.append(n)
        n += 2
    return out
