"""SL(2) trace identities for groups of rank at most three.

The trace of any word in three 2x2 unimodular matrices is a universal
integer polynomial in the seven coordinates

    x1 = tr(a), x2 = tr(b), x3 = tr(c),
    y1 = tr(bc), y2 = tr(ca), y3 = tr(ab), s = tr(abc),

subject to one quadratic relation s^2 - P s + Q = 0 (the rank-three
character relation).  The reduction uses only

    tr(1) = 2,   tr(u^-1) = tr(u),   tr(uv) = tr(vu),
    tr(uv) = tr(u) tr(v) - tr(u v^-1),

and terminates because each step shortens the word or removes an
inverse letter.  Everything here is exact and has a direct randomized
check against explicit matrix products in the test suite.

Words are tuples of signed integers: generator i+1 for presentation
generator number i, negated for the inverse.
"""

NVARS = 7
X1, X2, X3, Y1, Y2, Y3, S = range(NVARS)

_TRACE_VAR = {1: X1, 2: X2, 3: X3}
_PAIR_VAR = {(1, 2): Y3, (2, 3): Y1, (1, 3): Y2}

_ZERO_MONO = (0,) * NVARS


def _pconst(c):
    return {_ZERO_MONO: c} if c else {}


def _pvar(i):
    e = [0] * NVARS
    e[i] = 1
    return {tuple(e): 1}


def p_add(f, g):
    r = dict(f)
    for m, c in g.items():
        c2 = r.get(m, 0) + c
        if c2:
            r[m] = c2
        elif m in r:
            del r[m]
    return r


def p_sub(f, g):
    return p_add(f, {m: -c for m, c in g.items()})


def p_mul(f, g):
    r = {}
    for m1, c1 in f.items():
        for m2, c2 in g.items():
            m = tuple(a + b for a, b in zip(m1, m2))
            c = r.get(m, 0) + c1 * c2
            if c:
                r[m] = c
            elif m in r:
                del r[m]
    return r


def word_to_ints(word, generators):
    index = {g: i + 1 for i, g in enumerate(generators)}
    return tuple(index[name] * exp for name, exp in word)


def free_reduce_ints(w):
    out = []
    for l in w:
        if out and out[-1] == -l:
            out.pop()
        else:
            out.append(l)
    return tuple(out)


def _cyclic_reduce(w):
    w = list(free_reduce_ints(w))
    while len(w) >= 2 and w[0] == -w[-1]:
        w = w[1:-1]
    return tuple(w)


def _canonical(w):
    # trace is invariant under cyclic rotation and inversion; prefer the
    # representative with the fewest inverse letters so that inverse
    # elimination strictly decreases the (length, inverses) measure
    w = _cyclic_reduce(w)
    if not w:
        return w
    cands = []
    for ww in (w, tuple(-l for l in reversed(w))):
        ninv = sum(1 for l in ww if l < 0)
        for i in range(len(ww)):
            cands.append((ninv, ww[i:] + ww[:i]))
    return min(cands)[1]


def fricke_p_poly():
    """P with tr(abc) + tr(acb) = P."""
    out = {}
    for xv, yv in ((X1, Y1), (X2, Y2), (X3, Y3)):
        out = p_add(out, p_mul(_pvar(xv), _pvar(yv)))
    return p_sub(out, p_mul(p_mul(_pvar(X1), _pvar(X2)), _pvar(X3)))


def fricke_relation():
    """s^2 - P s + Q: vanishes on every rank-three character."""
    P = fricke_p_poly()
    Q = _pconst(-4)
    for v in (X1, X2, X3, Y1, Y2, Y3):
        Q = p_add(Q, p_mul(_pvar(v), _pvar(v)))
    Q = p_add(Q, p_mul(p_mul(_pvar(Y1), _pvar(Y2)), _pvar(Y3)))
    Q = p_sub(Q, p_mul(p_mul(_pvar(X1), _pvar(X2)), _pvar(Y3)))
    Q = p_sub(Q, p_mul(p_mul(_pvar(X2), _pvar(X3)), _pvar(Y1)))
    Q = p_sub(Q, p_mul(p_mul(_pvar(X3), _pvar(X1)), _pvar(Y2)))
    return p_add(p_sub(p_mul(_pvar(S), _pvar(S)), p_mul(fricke_p_poly(), _pvar(S))), Q)


_memo = {}


def trace_poly(word):
    """The trace of `word` as a polynomial in the seven coordinates."""
    w = _canonical(word)
    cached = _memo.get(w)
    if cached is None:
        cached = _memo[w] = _reduce(w)
    return cached


def _reduce(w):
    n = len(w)
    if n == 0:
        return _pconst(2)
    if n == 1:
        return _pvar(_TRACE_VAR[abs(w[0])])
    # cyclically adjacent equal letters: tr(g g R) = tr(g) tr(gR) - tr(R)
    for i in range(n):
        if w[i] == w[(i + 1) % n]:
            ww = w[i:] + w[:i]
            g = ww[0]
            t_g = _pvar(_TRACE_VAR[abs(g)])
            return p_sub(p_mul(t_g, trace_poly((g,) + ww[2:])), trace_poly(ww[2:]))
    # an inverse letter: tr(g^-1 R) = tr(g) tr(R) - tr(g R)
    for i in range(n):
        if w[i] < 0:
            ww = w[i:] + w[:i]
            g = -ww[0]
            rest = ww[1:]
            t_g = _pvar(_TRACE_VAR[g])
            return p_sub(p_mul(t_g, trace_poly(rest)), trace_poly((g,) + rest))
    # positive and cyclically square-free
    if n == 2:
        i, j = abs(w[0]), abs(w[1])
        return _pvar(_PAIR_VAR[(min(i, j), max(i, j))])
    if n == 3:
        if w in ((1, 2, 3), (2, 3, 1), (3, 1, 2)):
            return _pvar(S)
        # tr(acb) = P - tr(abc)
        return p_sub(fricke_p_poly(), _pvar(S))
    # length >= 4 over 3 letters: some letter repeats; split there
    for i in range(n):
        for j in range(i + 1, n):
            if w[i] == w[j]:
                ww = w[i:] + w[:i]
                k = ww.index(ww[0], 1)
                gX, gY = ww[:k], ww[k:]
                X, Y = ww[1:k], ww[k + 1:]
                return p_sub(p_mul(trace_poly(gX), trace_poly(gY)),
                             trace_poly(X + tuple(-l for l in reversed(Y))))
    raise AssertionError("irreducible trace word %r" % (w,))


def substitute_values(poly, fixed):
    """Substitute integer values for some variables (index -> value)."""
    out = {}
    for m, c in poly.items():
        mm = list(m)
        for vi, val in fixed.items():
            e = mm[vi]
            if e:
                c = c * val ** e
                mm[vi] = 0
        mm = tuple(mm)
        c2 = out.get(mm, 0) + c
        if c2:
            out[mm] = c2
        elif mm in out:
            del out[mm]
    return out


def compress_variables(poly, keep):
    """Project monomials onto the kept variable positions."""
    out = {}
    for m, c in poly.items():
        mm = tuple(m[v] for v in keep)
        c2 = out.get(mm, 0) + c
        if c2:
            out[mm] = c2
        elif mm in out:
            del out[mm]
    return out


# test words multiplying the relator: enough to force R = I on every
# irreducible character (some pair of generators acts irreducibly, and
# {1, g, h, gh} then spans the matrix algebra)
RELATOR_TEST_WORDS = ((), (1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))


def relator_equations(relator_ints, ngens):
    """tr(R w) - tr(w) for the standard test words."""
    eqs = []
    for tw in RELATOR_TEST_WORDS:
        if any(abs(l) > ngens for l in tw):
            continue
        lhs = trace_poly(free_reduce_ints(relator_ints + tw))
        rhs = trace_poly(tw)
        eq = p_sub(lhs, rhs)
        if eq:
            eqs.append(eq)
    return eqs


def eval_trace_poly(poly, values, field):
    """Evaluate a trace polynomial at field values for the 7 coordinates."""
    total = field.zero
    for m, c in poly.items():
        term = field.from_rational(c)
        for e, v in zip(m, values):
            for _ in range(e):
                term = term * v
        total = total + term
    return total
