"""Free-group words, knot-group presentations, and abelianization.

Words are written in the compact letter convention: a lowercase letter
is a generator, the corresponding capital letter is its inverse.  Words
are stored exactly as written; free reduction is always an explicit
step, never a side effect of construction.
"""

import random
from math import gcd


class WordParseError(ValueError):
    def __init__(self, message, position=None):
        self.position = position
        if position is not None:
            message = "%s (position %d)" % (message, position)
        super().__init__(message)


class Word:
    """A word in a free group: a sequence of (generator, +1/-1) letters."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        letters = tuple(letters)
        for name, exp in letters:
            if not (len(name) == 1 and "a" <= name <= "z"):
                raise WordParseError("generator names are single letters a-z, got %r" % (name,))
            if exp not in (1, -1):
                raise WordParseError("letter exponents are +1/-1, got %r" % (exp,))
        self.letters = letters

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __eq__(self, other):
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return "Word(%r)" % (render_word(self),)

    def __mul__(self, other):
        return word_multiply(self, other)

    def inverse(self):
        return word_invert(self)

    def generators(self):
        return sorted({name for name, _ in self.letters})


def parse_word(text):
    """Parse a word: lowercase letter = generator, capital = its inverse.

    The empty string is the identity.  Any non-alphabetic character is
    rejected with its position.
    """
    letters = []
    for i, ch in enumerate(text):
        if "a" <= ch <= "z":
            letters.append((ch, 1))
        elif "A" <= ch <= "Z":
            letters.append((ch.lower(), -1))
        else:
            raise WordParseError("invalid character %r in word" % (ch,), position=i)
    return Word(letters)


def render_word(w):
    """Inverse of parse_word: capital letters denote inverse generators."""
    return "".join(name if exp == 1 else name.upper() for name, exp in w)


def free_reduce(w):
    """Cancel all adjacent (g, g^-1) pairs; the result is freely reduced."""
    out = []
    for name, exp in w:
        if out and out[-1][0] == name and out[-1][1] == -exp:
            out.pop()
        else:
            out.append((name, exp))
    return Word(out)


def word_multiply(u, v):
    """Concatenate and freely reduce."""
    return free_reduce(tuple(u) + tuple(v))


def word_invert(u):
    """Reverse the letters and flip every exponent, then freely reduce."""
    return free_reduce((name, -exp) for name, exp in reversed(tuple(u)))


def exponent_sum(w, gen):
    """Total signed exponent of the generator `gen` in w."""
    return sum(exp for name, exp in w if name == gen)


def is_reduced(w):
    letters = tuple(w)
    return all(not (letters[i][0] == letters[i + 1][0] and letters[i][1] == -letters[i + 1][1])
               for i in range(len(letters) - 1))


class Presentation:
    """A finite group presentation over single-letter generators.

    Relators are kept as written.  Deficiency one (one fewer relator
    than generators, the shape of knot-group presentations) is checked
    on demand, not at construction.
    """

    def __init__(self, generators, relators):
        generators = tuple(generators)
        seen = set()
        for g in generators:
            if not (len(g) == 1 and "a" <= g <= "z"):
                raise WordParseError("generator names are single letters a-z, got %r" % (g,))
            if g in seen:
                raise WordParseError("duplicate generator %r" % (g,))
            seen.add(g)
        relators = tuple(r if isinstance(r, Word) else parse_word(r) for r in relators)
        for r in relators:
            for name, _ in r:
                if name not in seen:
                    raise WordParseError("relator uses undeclared generator %r" % (name,))
        self.generators = generators
        self.relators = relators

    def deficiency_one(self):
        return len(self.relators) == len(self.generators) - 1

    def __eq__(self, other):
        return (isinstance(other, Presentation)
                and self.generators == other.generators
                and self.relators == other.relators)

    def __repr__(self):
        rels = ", ".join(render_word(r) for r in self.relators)
        return "Presentation(<%s | %s>)" % (" ".join(self.generators), rels)

    def exponent_matrix(self):
        """Relator-by-generator matrix of exponent sums (rows = relators)."""
        return [[exponent_sum(r, g) for g in self.generators] for r in self.relators]


def parse_presentation(text):
    """Read the presentation file format.

    Line `gens: a b c` declares generators; each `rel: <word>` line adds
    one relator.  Blank lines and `#` comments are ignored.
    """
    generators = None
    relators = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("gens:"):
            if generators is not None:
                raise WordParseError("line %d: duplicate gens: line" % lineno)
            generators = line[len("gens:"):].split()
        elif line.startswith("rel:"):
            body = line[len("rel:"):].strip()
            try:
                relators.append(parse_word(body))
            except WordParseError as e:
                raise WordParseError("line %d: %s" % (lineno, e)) from None
        else:
            raise WordParseError("line %d: expected 'gens:' or 'rel:', got %r" % (lineno, raw))
    if generators is None:
        raise WordParseError("missing gens: line")
    return Presentation(generators, relators)


def render_presentation(p):
    lines = ["gens: " + " ".join(p.generators)]
    lines.extend("rel: " + render_word(r) for r in p.relators)
    return "\n".join(lines) + "\n"


def load_presentation(path):
    with open(path, encoding="utf-8") as f:
        return parse_presentation(f.read())


# ---------------------------------------------------------------------------
# Group-ring elements (integral coefficients, freely reduced words)

class GroupRingElement:
    """Finite formal integer combination of freely reduced words."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        clean = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for w, c in items:
            w = free_reduce(w)
            c = clean.get(w, 0) + c
            if c:
                clean[w] = c
            else:
                clean.pop(w, None)
        self.terms = clean

    @classmethod
    def one(cls):
        return cls([(Word(), 1)])

    @classmethod
    def of_word(cls, w, coeff=1):
        return cls([(w, coeff)])

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, GroupRingElement) and self.terms == other.terms

    def __add__(self, other):
        merged = dict(self.terms)
        for w, c in other.terms.items():
            c2 = merged.get(w, 0) + c
            if c2:
                merged[w] = c2
            else:
                del merged[w]
        out = GroupRingElement()
        out.terms = merged
        return out

    def __neg__(self):
        out = GroupRingElement()
        out.terms = {w: -c for w, c in self.terms.items()}
        return out

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        acc = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = word_multiply(w1, w2)
                c = acc.get(w, 0) + c1 * c2
                if c:
                    acc[w] = c
                else:
                    del acc[w]
        out = GroupRingElement()
        out.terms = acc
        return out

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for w, c in sorted(self.terms.items(), key=lambda t: (len(t[0]), render_word(t[0]))):
            name = render_word(w) or "1"
            if c == 1:
                parts.append("+ %s" % name)
            elif c == -1:
                parts.append("- %s" % name)
            elif c > 0:
                parts.append("+ %d*%s" % (c, name))
            else:
                parts.append("- %d*%s" % (-c, name))
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


# ---------------------------------------------------------------------------
# Smith normal form over the integers and abelianization

def smith_normal_form(mat, nrows, ncols):
    """Return (d, U, V) with U*mat*V diagonal d, U and V unimodular.

    Plain row/column gcd elimination; fine for the small exponent
    matrices that arise from presentations.
    """
    A = [list(map(int, row)) for row in mat]
    U = [[int(i == j) for j in range(nrows)] for i in range(nrows)]
    V = [[int(i == j) for j in range(ncols)] for i in range(ncols)]

    def row_op(i, j, q):  # row_i -= q * row_j
        for k in range(ncols):
            A[i][k] -= q * A[j][k]
        for k in range(nrows):
            U[i][k] -= q * U[j][k]

    def col_op(i, j, q):  # col_i -= q * col_j
        for k in range(nrows):
            A[k][i] -= q * A[k][j]
        for k in range(ncols):
            V[k][i] -= q * V[k][j]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for k in range(nrows):
            A[k][i], A[k][j] = A[k][j], A[k][i]
        for k in range(ncols):
            V[k][i], V[k][j] = V[k][j], V[k][i]

    t = 0
    while t < min(nrows, ncols):
        # find a pivot
        pivot = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if A[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])
        while True:
            moved = False
            for i in range(t + 1, nrows):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    row_op(i, t, q)
                    if A[i][t]:
                        swap_rows(t, i)
                    moved = True
            for j in range(t + 1, ncols):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    col_op(j, t, q)
                    if A[t][j]:
                        swap_cols(t, j)
                    moved = True
            if not moved:
                break
        if A[t][t] < 0:
            for k in range(ncols):
                A[t][k] = -A[t][k]
            for k in range(nrows):
                U[t][k] = -U[t][k]
        t += 1
    # enforce divisibility d_i | d_{i+1}
    rank = min(nrows, ncols)
    for i in range(rank - 1):
        for j in range(i + 1, rank):
            if A[i][i] and A[j][j] % A[i][i] != 0:
                # fold column j into column i and re-eliminate the 2x2 block
                col_op(i, j, -1)
                while A[j][i] or A[i][j] or A[j][j]:
                    if A[i][i] == 0:
                        swap_rows(i, j)
                        continue
                    q = A[j][i] // A[i][i]
                    row_op(j, i, q)
                    if A[j][i]:
                        swap_rows(i, j)
                        continue
                    q = A[i][j] // A[i][i]
                    col_op(j, i, q)
                    if A[i][j]:
                        swap_cols(i, j)
                        continue
                    break
                if A[i][i] < 0:
                    for k in range(ncols):
                        A[i][k] = -A[i][k]
                    for k in range(nrows):
                        U[i][k] = -U[i][k]
                if A[j][j] < 0:
                    for k in range(ncols):
                        A[j][k] = -A[j][k]
                    for k in range(nrows):
                        U[j][k] = -U[j][k]
    return A, U, V


class AbelianizationMap:
    """Map generator -> integer giving the isomorphism H_1 = Z.

    Every relator must have total weight zero and the generator images
    must generate Z (their gcd is 1).
    """

    def __init__(self, values):
        self.values = dict(values)
        g = 0
        for v in self.values.values():
            g = gcd(g, v)
        if g != 1:
            raise ValueError("abelianization images do not generate Z (gcd %d)" % g)

    def __getitem__(self, gen):
        return self.values[gen]

    def weight(self, w):
        """Total abelianized weight of a word."""
        return sum(exp * self.values[name] for name, exp in w)

    def __repr__(self):
        return "AbelianizationMap(%s)" % (self.values,)


def abelianization(p):
    """Abelianization map of a knot-like presentation.

    Computes the Smith normal form of the relator exponent matrix and
    requires the cokernel to be infinite cyclic.  The sign convention
    makes the first generator with nonzero image positive.
    """
    g = len(p.generators)
    r = len(p.relators)
    E = p.exponent_matrix()
    if r == 0:
        if g != 1:
            raise ValueError("not a knot-like presentation: cokernel is Z^%d" % g)
        return AbelianizationMap({p.generators[0]: 1})
    # cokernel of E^T : Z^r -> Z^g
    ET = [[E[i][j] for i in range(r)] for j in range(g)]
    D, U, _V = smith_normal_form(ET, g, r)
    diag = [D[i][i] for i in range(min(g, r))]
    rank = sum(1 for d in diag if d != 0)
    torsion = [d for d in diag if d not in (0, 1)]
    free_rank = g - rank
    if free_rank != 1 or torsion:
        raise ValueError("not a knot-like presentation: cokernel is not Z "
                         "(free rank %d, torsion %s)" % (free_rank, torsion))
    # the free coordinate of the cokernel is the last row of U
    alpha = {gen: U[g - 1][j] for j, gen in enumerate(p.generators)}
    for gen in p.generators:
        if alpha[gen] != 0:
            if alpha[gen] < 0:
                alpha = {k: -v for k, v in alpha.items()}
            break
    amap = AbelianizationMap(alpha)
    for rel in p.relators:
        if amap.weight(rel) != 0:
            raise AssertionError("abelianization does not kill relator %r" % rel)
    return amap


# ---------------------------------------------------------------------------
# Tietze moves

def tietze_perturb(p, seed, steps):
    """Random walk over elementary moves that preserve the group.

    Moves: conjugate a relator by a generator, invert a relator,
    multiply a relator by another, and cyclically permute a relator.
    The generator set is kept fixed so representations transport
    verbatim; see stabilize()/destabilize() for the move that adds a
    redundant generator.
    """
    if steps < 0:
        raise ValueError("steps must be >= 0")
    rng = random.Random(seed)
    relators = list(p.relators)
    for _ in range(steps):
        if not relators:
            break
        i = rng.randrange(len(relators))
        move = rng.choice(("conjugate", "invert", "multiply", "cycle"))
        if move == "conjugate":
            g = rng.choice(p.generators)
            e = rng.choice((1, -1))
            u = Word([(g, e)])
            relators[i] = word_multiply(word_multiply(u, relators[i]), word_invert(u))
        elif move == "invert":
            relators[i] = word_invert(relators[i])
        elif move == "multiply" and len(relators) > 1:
            j = rng.randrange(len(relators) - 1)
            if j >= i:
                j += 1
            relators[i] = word_multiply(relators[i], relators[j])
        else:
            r = tuple(relators[i])
            if r:
                k = rng.randrange(len(r))
                relators[i] = Word(r[k:] + r[:k])
    return Presentation(p.generators, relators)


def stabilize(p, defining_word, new_gen=None):
    """Add a redundant generator z with defining relator z * w^-1.

    Returns (presentation, new_gen).  The group is unchanged; a
    representation extends by sending z to the image of w.
    """
    if new_gen is None:
        used = set(p.generators)
        for ch in "abcdefghijklmnopqrstuvwxyz":
            if ch not in used:
                new_gen = ch
                break
        else:
            raise ValueError("no unused generator letter available")
    defining_word = free_reduce(defining_word)
    rel = word_multiply(Word([(new_gen, 1)]), word_invert(defining_word))
    return Presentation(p.generators + (new_gen,), p.relators + (rel,)), new_gen


def destabilize(p, gen):
    """Undo stabilize(): remove `gen` using its defining relator."""
    defining = None
    for r in p.relators:
        red = free_reduce(r)
        if red and red.letters[0] == (gen, 1) and all(name != gen for name, _ in red.letters[1:]):
            defining = red
            break
    if defining is None:
        raise ValueError("no defining relator for generator %r" % gen)
    w = word_invert(Word(defining.letters[1:]))  # gen = w in the group
    def substitute(word):
        out = []
        for name, exp in word:
            if name == gen:
                out.extend(tuple(w if exp == 1 else word_invert(w)))
            else:
                out.append((name, exp))
        return free_reduce(out)
    new_rels = tuple(substitute(r) for r in p.relators if r is not defining and free_reduce(r) != defining)
    return Presentation(tuple(g for g in p.generators if g != gen), new_rels)
