"""SL(2) representations of presented groups over a number field.

A representation maps each generator to an exact determinant-1 2x2
matrix; relators must land on the identity exactly (an SL(2) lift, not
merely PSL(2)).  The two lifts of a holonomy differ by the epsilon
twist g -> (-1)^alpha(g) rho(g), which flips the meridian trace between
+2 and -2 and fixes every relator image.
"""

from math import comb

from .exact import (NFMatrix, NumberField, RatPoly, parse_rational)
from .words import Word, parse_word, render_word

LIFT_PLUS = "plus"
LIFT_MINUS = "minus"


def check_lift_sign(lift):
    if lift not in (LIFT_PLUS, LIFT_MINUS):
        raise ValueError("lift must be %r or %r, got %r" % (LIFT_PLUS, LIFT_MINUS, lift))
    return lift


class Representation:
    """Generator images in SL(2) over a number field, tied to a presentation."""

    def __init__(self, presentation, field, images, meridian=None):
        self.presentation = presentation
        self.field = field
        self.images = dict(images)
        for g in presentation.generators:
            if g not in self.images:
                raise ValueError("no image for generator %r" % g)
            m = self.images[g]
            if m.rows != 2 or m.cols != 2:
                raise ValueError("image of %r is not 2x2" % g)
        if isinstance(meridian, str):
            meridian = parse_word(meridian)
        self.meridian = meridian

    def __repr__(self):
        return "Representation(<%s> over deg-%d field)" % (
            " ".join(self.presentation.generators), self.field.degree)


def word_image(rep, w):
    """Product of the generator images along the word."""
    acc = NFMatrix.identity(rep.field, 2)
    for name, exp in w:
        if name not in rep.images:
            raise ValueError("undeclared generator %r" % name)
        m = rep.images[name]
        acc = acc * (m if exp == 1 else m.inverse2x2())
    return acc


def trace_of(rep, w):
    return word_image(rep, w).trace()


class RepresentationReport:
    def __init__(self, det_ok, relator_status):
        self.det_ok = det_ok            # generator -> bool
        self.relator_status = relator_status  # list of "ok" | "minus_identity" | "fail"

    @property
    def ok(self):
        return all(self.det_ok.values()) and all(s == "ok" for s in self.relator_status)

    @property
    def psl_only(self):
        """True when some relator lands on -I: a PSL(2) but not SL(2) lift."""
        return (all(self.det_ok.values())
                and any(s == "minus_identity" for s in self.relator_status)
                and all(s in ("ok", "minus_identity") for s in self.relator_status))

    def __repr__(self):
        return "RepresentationReport(ok=%s, relators=%s)" % (self.ok, self.relator_status)


def check_representation(presentation, rep):
    """Verify det = 1 on generators and relator images = I, exactly."""
    field = rep.field
    det_ok = {}
    for g in presentation.generators:
        (p, q), (r, s) = rep.images[g].entries
        det_ok[g] = (p * s - q * r) == field.one
    status = []
    minus_identity = NFMatrix.identity(field, 2).scale(field.from_rational(-1))
    for rel in presentation.relators:
        img = word_image(rep, rel)
        if img.is_identity():
            status.append("ok")
        elif img == minus_identity:
            status.append("minus_identity")
        else:
            status.append("fail")
    return RepresentationReport(det_ok, status)


def sym_power(m, dim):
    """Action of a 2x2 matrix on homogeneous polynomials of degree dim-1.

    Basis e1^(dim-1), e1^(dim-2) e2, ..., e2^(dim-1); the matrix acts on
    (e1, e2) in the column convention m.e_j = sum_i m_ij e_i.  For
    dim = 2 this is the matrix itself; it is multiplicative and lands in
    SL(dim) for determinant-1 input.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    field = m.field
    if dim == 2:
        return m
    (a, b), (c, d) = m.entries
    D = dim - 1
    zero = field.zero
    # powers are reused across entries, so precompute them
    pa = _powers(a, D, field)
    pb = _powers(b, D, field)
    pc = _powers(c, D, field)
    pd = _powers(d, D, field)
    out = [[zero] * dim for _ in range(dim)]
    for k in range(dim):           # image of e1^(D-k) e2^k
        for i in range(dim):       # coefficient of e1^(D-i) e2^i
            acc = zero
            for j in range(max(0, i - k), min(D - k, i) + 1):
                coeff = comb(D - k, j) * comb(k, i - j)
                term = pa[D - k - j] * pc[j] * pb[k - i + j] * pd[i - j]
                acc = acc + term.scale(coeff)
            out[i][k] = acc
    return NFMatrix(out)


def _powers(x, n, field):
    out = [field.one]
    for _ in range(n):
        out.append(out[-1] * x)
    return out


def epsilon_twist(rep, alpha):
    """Tensor with the sign character (-1)^alpha: switches the lift.

    Relators have zero alpha-weight, so their images are unchanged and
    the result is again a valid representation.
    """
    minus_one = rep.field.from_rational(-1)
    images = {}
    for g in rep.presentation.generators:
        m = rep.images[g]
        images[g] = m.scale(minus_one) if alpha[g] % 2 else m
    return Representation(rep.presentation, rep.field, images, meridian=rep.meridian)


# ---------------------------------------------------------------------------
# Representation files

def _render_field_header(field):
    # monic modulus, leading coefficient first
    return "field: " + " ".join(str(c) for c in reversed(field.modulus.coeffs))


def _parse_field_header(body):
    coeffs = [parse_rational(tok) for tok in body.split()]
    if not coeffs:
        raise ValueError("empty field header")
    return NumberField(RatPoly(list(reversed(coeffs))))


def _render_element(x):
    # display order w^(deg-1), ..., w, 1
    return ",".join(str(c) for c in reversed(x.coords))


def _parse_element(field, text):
    parts = [parse_rational(tok) for tok in text.split(",")]
    if len(parts) != field.degree:
        raise ValueError("expected %d coordinates, got %d" % (field.degree, len(parts)))
    return field.element(list(reversed(parts)))


def render_representation(rep):
    lines = [_render_field_header(rep.field)]
    for g in rep.presentation.generators:
        (p, q), (r, s) = rep.images[g].entries
        lines.append("gen %s: %s %s %s %s" % (
            g, _render_element(p), _render_element(q),
            _render_element(r), _render_element(s)))
    if rep.meridian is not None:
        lines.append("meridian: " + render_word(rep.meridian))
    return "\n".join(lines) + "\n"


def parse_representation(text, presentation):
    field = None
    images = {}
    meridian = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("field:"):
            field = _parse_field_header(line[len("field:"):])
        elif line.startswith("gen "):
            if field is None:
                raise ValueError("line %d: gen line before field header" % lineno)
            body = line[len("gen "):]
            name, _, rest = body.partition(":")
            name = name.strip()
            entries = rest.split()
            if len(entries) != 4:
                raise ValueError("line %d: expected 4 matrix entries" % lineno)
            p, q, r, s = (_parse_element(field, e) for e in entries)
            images[name] = NFMatrix([[p, q], [r, s]])
        elif line.startswith("meridian:"):
            meridian = parse_word(line[len("meridian:"):].strip())
        else:
            raise ValueError("line %d: unrecognized line %r" % (lineno, raw))
    if field is None:
        raise ValueError("missing field header")
    return Representation(presentation, field, images, meridian=meridian)


def load_representation(path, presentation):
    with open(path, encoding="utf-8") as f:
        return parse_representation(f.read(), presentation)


def save_representation(rep, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(render_representation(rep))
