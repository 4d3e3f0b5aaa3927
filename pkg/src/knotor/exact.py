"""Exact arithmetic: rationals, Q[x], number fields Q[x]/(p), polynomials
in t over a number field, and exact matrix determinants and ranks.

Everything here is exact; no floating point enters the computation
path.  Rationals are gmpy2.mpq (arbitrary precision, canonical form,
positive denominator).  Number field elements store their coordinates
in the internal ascending basis 1, w, ..., w^(deg-1); the descending
display order used in output files is applied only at serialization
boundaries.
"""

from gmpy2 import mpq

Rational = mpq

QZERO = mpq(0)
QONE = mpq(1)


class ReducibleModulusError(ArithmeticError):
    """A zero divisor turned up: the field modulus is not irreducible."""


def rational(num, den=1):
    return mpq(num, den)


def parse_rational(text):
    try:
        return mpq(text.strip())
    except ValueError:
        raise ValueError("not a rational: %r" % (text,)) from None


# ---------------------------------------------------------------------------
# Univariate polynomials over Q (ascending coefficients)

class RatPoly:
    """Dense univariate polynomial over Q, coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [mpq(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x_power(cls, k, c=1):
        return cls((0,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else QZERO

    def __eq__(self, other):
        return isinstance(other, RatPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    def __neg__(self):
        return RatPoly([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return RatPoly()
        out = [QZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    def scale(self, c):
        c = mpq(c)
        return RatPoly([a * c for a in self.coeffs])

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        return self if lc == 1 else self.scale(1 / lc)

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return RatPoly(), self
        quo = [QZERO] * (dq + 1)
        inv_lc = 1 / other.leading()
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            if c:
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] -= c * b
        return RatPoly(quo), RatPoly(rem)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def derivative(self):
        return RatPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def eval(self, x):
        acc = QZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "RatPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if c:
                parts.append("%s*x^%d" % (c, i) if i else str(c))
        return "RatPoly(%s)" % " + ".join(parts)


def ratpoly_gcd(f, g):
    """Monic gcd over Q by the Euclidean algorithm."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def ratpoly_squarefree_part(f):
    if f.is_zero():
        return f
    return f.divmod(ratpoly_gcd(f, f.derivative()))[0].monic()


def ratpoly_resultant(f, g):
    """Resultant of f and g via the Euclidean remainder recursion."""
    if f.is_zero() or g.is_zero():
        return QZERO
    res = QONE
    while True:
        if g.degree == 0:
            return res * g.leading() ** f.degree
        r = f % g
        if r.is_zero():
            return QZERO
        res *= g.leading() ** (f.degree - r.degree)
        if (f.degree * g.degree) % 2 == 1:
            res = -res
        f, g = g, r


# ---------------------------------------------------------------------------
# Number fields Q[x]/(modulus)

class NumberField:
    """The field Q[x]/(modulus) for a monic modulus of degree >= 1.

    Irreducibility is not verified at construction: a reducible modulus
    surfaces deterministically as ReducibleModulusError the moment a
    zero divisor is inverted.
    """

    def __init__(self, modulus):
        if not isinstance(modulus, RatPoly):
            modulus = RatPoly(modulus)
        if modulus.degree < 1:
            raise ValueError("modulus must have degree >= 1")
        if modulus.leading() != 1:
            raise ValueError("modulus must be monic")
        self.modulus = modulus
        self.degree = modulus.degree
        d = self.degree
        # reduction[i] = coordinates of x^(d+i) for i = 0 .. d-2
        rows = []
        prev = [-c for c in modulus.coeffs[:d]]  # x^d
        rows.append(tuple(prev))
        for _ in range(d - 2):
            nxt = [QZERO] + prev[: d - 1]
            top = prev[d - 1]
            if top:
                for j in range(d):
                    nxt[j] += top * rows[0][j]
            rows.append(tuple(nxt))
            prev = nxt
        self._reduction = rows
        self.zero = NumberFieldElement(self, (QZERO,) * d)
        self.one = self.from_rational(1)

    def __eq__(self, other):
        return isinstance(other, NumberField) and self.modulus == other.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return "NumberField(deg %d)" % self.degree

    def element(self, coords):
        coords = tuple(mpq(c) for c in coords)
        if len(coords) != self.degree:
            raise ValueError("expected %d coordinates, got %d" % (self.degree, len(coords)))
        return NumberFieldElement(self, coords)

    def from_rational(self, c):
        return NumberFieldElement(self, (mpq(c),) + (QZERO,) * (self.degree - 1))

    def gen(self):
        """The class of x: the root w the field is generated by."""
        if self.degree == 1:
            return self.from_rational(-self.modulus.coeffs[0])
        coords = [QZERO] * self.degree
        coords[1] = QONE
        return NumberFieldElement(self, tuple(coords))


def rationals_field():
    """Q presented as the degree-1 number field Q[x]/(x)."""
    return NumberField(RatPoly((0, 1)))


class NumberFieldElement:
    __slots__ = ("field", "coords")

    def __init__(self, field, coords):
        self.field = field
        self.coords = coords

    def is_zero(self):
        return all(c == 0 for c in self.coords)

    def is_rational(self):
        return all(c == 0 for c in self.coords[1:])

    def __eq__(self, other):
        if not isinstance(other, NumberFieldElement):
            return NotImplemented
        return self.field == other.field and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def _check(self, other):
        if self.field is not other.field and self.field != other.field:
            raise ValueError("number field mismatch")

    def __add__(self, other):
        self._check(other)
        return NumberFieldElement(self.field,
                                  tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other):
        self._check(other)
        return NumberFieldElement(self.field,
                                  tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self):
        return NumberFieldElement(self.field, tuple(-a for a in self.coords))

    def __mul__(self, other):
        self._check(other)
        d = self.field.degree
        a, b = self.coords, other.coords
        if d == 1:
            return NumberFieldElement(self.field, (a[0] * b[0],))
        conv = [QZERO] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    conv[i + j] += ai * bj
        out = conv[:d]
        reduction = self.field._reduction
        for i in range(d, 2 * d - 1):
            ci = conv[i]
            if ci:
                row = reduction[i - d]
                for j in range(d):
                    out[j] += ci * row[j]
        return NumberFieldElement(self.field, tuple(out))

    def scale(self, c):
        c = mpq(c)
        return NumberFieldElement(self.field, tuple(a * c for a in self.coords))

    def lift(self):
        """The representative polynomial in Q[x] of degree < deg."""
        return RatPoly(self.coords)

    def inverse(self):
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in number field")
        # extended gcd of lift and modulus
        r0, r1 = self.field.modulus, self.lift()
        t0, t1 = RatPoly(), RatPoly((1,))
        while not r1.is_zero():
            q, r = r0.divmod(r1)
            r0, r1 = r1, r
            t0, t1 = t1, t0 - q * t1
        if r0.degree != 0:
            raise ReducibleModulusError(
                "zero divisor: modulus is reducible (gcd degree %d)" % r0.degree)
        inv = t0.scale(1 / r0.leading())
        coords = list(inv.coeffs) + [QZERO] * (self.field.degree - len(inv.coeffs))
        return NumberFieldElement(self.field, tuple(coords[: self.field.degree]))

    def __truediv__(self, other):
        return self * other.inverse()

    def __pow__(self, n):
        if n < 0:
            return self.inverse() ** (-n)
        acc = self.field.one
        base = self
        while n:
            if n & 1:
                acc = acc * base
            base = base * base
            n >>= 1
        return acc

    def __repr__(self):
        d = self.field.degree
        parts = []
        for i in range(d - 1, -1, -1):
            c = self.coords[i]
            if c:
                if i == 0:
                    parts.append(str(c))
                elif i == 1:
                    parts.append("%s*w" % c if c != 1 else "w")
                else:
                    parts.append("%s*w^%d" % (c, i) if c != 1 else "w^%d" % i)
        return " + ".join(parts) if parts else "0"


def nf_add(x, y):
    return x + y


def nf_mul(x, y):
    return x * y


def nf_neg(x):
    return -x


def nf_inv(x):
    return x.inverse()


# ---------------------------------------------------------------------------
# Polynomials in t over a number field

class NFPoly:
    """Polynomial in t with NumberFieldElement coefficients, ascending."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs=()):
        coeffs = list(coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        self.field = field
        self.coeffs = tuple(coeffs)

    @classmethod
    def constant(cls, x):
        return cls(x.field, (x,))

    @classmethod
    def t_power(cls, field, k, coeff=None):
        c = field.one if coeff is None else coeff
        return cls(field, (field.zero,) * k + (c,))

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def is_zero(self):
        return not self.coeffs

    def leading(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    def __eq__(self, other):
        return (isinstance(other, NFPoly) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return NFPoly(self.field, out)

    def __neg__(self):
        return NFPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return NFPoly(self.field)
        zero = self.field.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a.is_zero():
                for j, b in enumerate(other.coeffs):
                    out[i + j] = out[i + j] + a * b
        return NFPoly(self.field, out)

    def scale(self, c):
        return NFPoly(self.field, [a * c for a in self.coeffs])

    def shift(self, k):
        """Multiply by t^k (k >= 0)."""
        if self.is_zero():
            return self
        return NFPoly(self.field, (self.field.zero,) * k + self.coeffs)

    def monic(self):
        if self.is_zero():
            return self
        lc = self.leading()
        if lc == self.field.one:
            return self
        return self.scale(lc.inverse())

    def divmod(self, other):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return NFPoly(self.field), self
        inv_lc = other.leading().inverse()
        quo = [self.field.zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + other.degree] * inv_lc
            if not c.is_zero():
                quo[k] = c
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        return NFPoly(self.field, quo), NFPoly(self.field, rem)

    def exact_div(self, other):
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("division was not exact")
        return q

    def eval(self, x):
        """Horner evaluation at a NumberFieldElement (or rational)."""
        if not isinstance(x, NumberFieldElement):
            x = self.field.from_rational(x)
        acc = self.field.zero
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self):
        if self.is_zero():
            return "NFPoly(0)"
        parts = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c.is_zero():
                parts.append("(%r)*t^%d" % (c, i) if i else "(%r)" % (c,))
        return " + ".join(parts)


def poly_gcd(f, g):
    """Monic gcd of two NFPoly by the Euclidean algorithm."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not g.is_zero():
        f, g = g, f.divmod(g)[1]
        g = g.monic() if not g.is_zero() else g  # tame coefficient growth
    return f.monic()


def nfpoly_eval(f, t0):
    return f.eval(t0)


# ---------------------------------------------------------------------------
# Matrices

class BaseMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        entries = [list(row) for row in entries]
        if not entries or not entries[0]:
            raise ValueError("matrix dimensions must be positive")
        self.rows = len(entries)
        self.cols = len(entries[0])
        if any(len(r) != self.cols for r in entries):
            raise ValueError("matrix is not rectangular")
        self.entries = entries

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]

    def __eq__(self, other):
        return (type(self) is type(other) and self.rows == other.rows
                and self.cols == other.cols and self.entries == other.entries)

    def __repr__(self):
        return "%s(%dx%d)" % (type(self).__name__, self.rows, self.cols)


class NFMatrix(BaseMatrix):
    """Rectangular matrix over a number field."""

    @property
    def field(self):
        return self.entries[0][0].field

    @classmethod
    def identity(cls, field, n):
        return cls([[field.one if i == j else field.zero for j in range(n)]
                    for i in range(n)])

    def __mul__(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        zero = self.field.zero
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = zero
                for k in range(self.cols):
                    a = self.entries[i][k]
                    if not a.is_zero():
                        acc = acc + a * other.entries[k][j]
                row.append(acc)
            out.append(row)
        return NFMatrix(out)

    def __add__(self, other):
        return NFMatrix([[a + b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other):
        return NFMatrix([[a - b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self):
        return NFMatrix([[-a for a in row] for row in self.entries])

    def scale(self, c):
        return NFMatrix([[a * c for a in row] for row in self.entries])

    def trace(self):
        if self.rows != self.cols:
            raise ValueError("trace of a non-square matrix")
        acc = self.field.zero
        for i in range(self.rows):
            acc = acc + self.entries[i][i]
        return acc

    def is_identity(self):
        if self.rows != self.cols:
            return False
        one, f = self.field.one, self.field
        return all(self.entries[i][j] == (one if i == j else f.zero)
                   for i in range(self.rows) for j in range(self.cols))

    def inverse2x2(self):
        """Inverse of a determinant-1 2x2 matrix: [[s,-q],[-r,p]]."""
        if self.rows != 2 or self.cols != 2:
            raise ValueError("inverse2x2 needs a 2x2 matrix")
        (p, q), (r, s) = self.entries
        return NFMatrix([[s, -q], [-r, p]])


class NFPolyMatrix(BaseMatrix):
    """Rectangular matrix of polynomials in t over a number field."""

    @property
    def field(self):
        return self.entries[0][0].field


def _bareiss_det(entries, n, one, is_zero, mul, sub, exact_div, neg):
    """Fraction-free Bareiss elimination; exact over an integral domain."""
    a = [row[:] for row in entries]
    sign = 1
    prev = one
    for k in range(n - 1):
        if is_zero(a[k][k]):
            pivot_row = None
            for i in range(k + 1, n):
                if not is_zero(a[i][k]):
                    pivot_row = i
                    break
            if pivot_row is None:
                return None, 0  # det is zero
            a[k], a[pivot_row] = a[pivot_row], a[k]
            sign = -sign
        pkk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                num = sub(mul(pkk, row_i[j]), mul(aik, row_k[j]))
                row_i[j] = exact_div(num, prev)
            row_i[k] = None
        prev = pkk
    det = a[n - 1][n - 1]
    return (det if sign == 1 else neg(det)), sign


def det(m):
    """Exact determinant of a square NFMatrix or NFPolyMatrix."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    field = m.field
    if isinstance(m, NFMatrix):
        one = field.one
        value, _ = _bareiss_det(
            m.entries, n, one,
            lambda x: x.is_zero(),
            lambda x, y: x * y,
            lambda x, y: x - y,
            lambda x, y: x * y.inverse(),
            lambda x: -x)
        return field.zero if value is None else value
    if isinstance(m, NFPolyMatrix):
        one = NFPoly.constant(field.one)
        value, _ = _bareiss_det(
            m.entries, n, one,
            lambda x: x.is_zero(),
            lambda x, y: x * y,
            lambda x, y: x - y,
            lambda x, y: x.exact_div(y),
            lambda x: -x)
        return NFPoly(field) if value is None else value
    raise TypeError("det expects NFMatrix or NFPolyMatrix")


def det_cofactor(m):
    """Cofactor (Laplace) expansion; test oracle for det()."""
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    field = m.field
    poly = isinstance(m, NFPolyMatrix)
    zero = NFPoly(field) if poly else field.zero

    def rec(rows, cols):
        if len(cols) == 1:
            return m.entries[rows[0]][cols[0]]
        acc = zero
        r = rows[0]
        rest = rows[1:]
        for idx, c in enumerate(cols):
            entry = m.entries[r][c]
            if entry.is_zero():
                continue
            sub_det = rec(rest, cols[:idx] + cols[idx + 1:])
            term = entry * sub_det
            acc = acc + term if idx % 2 == 0 else acc - term
        return acc

    idx = tuple(range(m.rows))
    return rec(idx, idx)


def _row_echelon(m):
    """Reduced rows of an NFMatrix by exact Gaussian elimination.

    Returns (rows, pivot_columns) with rows over the field.
    """
    a = [row[:] for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if not a[i][c].is_zero():
                pivot = i
                break
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = a[r][c].inverse()
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and not a[i][c].is_zero():
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return a[:r], pivots


def rank(m):
    """Row rank by exact Gaussian elimination."""
    return len(_row_echelon(m)[1])


def kernel_basis(m):
    """Basis of the right kernel of an NFMatrix, as coordinate lists."""
    field = m.field
    rows, pivots = _row_echelon(m)
    free = [c for c in range(m.cols) if c not in pivots]
    basis = []
    for fc in free:
        v = [field.zero] * m.cols
        v[fc] = field.one
        for r, pc in zip(rows, pivots):
            v[pc] = -r[fc]
        basis.append(v)
    return basis
