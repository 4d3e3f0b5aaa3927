"""Fox free differential calculus over the integral group ring.

The derivative d/dg satisfies dg/dg = 1, dh/dg = 0 for h != g,
d(g^-1)/dg = -g^-1 and the product rule d(uv)/dg = du/dg + u dv/dg.
The fundamental identity

    sum_j (dr/dx_j) (x_j - 1) = r - 1

holds exactly in the group ring for every word r and is this module's
master correctness check.
"""

from .words import GroupRingElement, Word, word_multiply


def fox_derivative(w, gen):
    """Fox derivative of a word with respect to a generator.

    Computed in one left-to-right sweep over the letters, accumulating
    the prefix product; the result is in reduced group-ring form.
    """
    terms = []
    prefix = Word()
    for name, exp in w:
        if name == gen:
            if exp == 1:
                terms.append((prefix, 1))
            else:
                terms.append((word_multiply(prefix, Word([(name, -1)])), -1))
        prefix = word_multiply(prefix, Word([(name, exp)]))
    return GroupRingElement(terms)


class FoxJacobian:
    """Matrix of Fox derivatives: rows = relators, columns = generators."""

    def __init__(self, presentation):
        self.presentation = presentation
        self.entries = [[fox_derivative(r, g) for g in presentation.generators]
                        for r in presentation.relators]
        self.rows = len(presentation.relators)
        self.cols = len(presentation.generators)

    def __getitem__(self, ij):
        return self.entries[ij[0]][ij[1]]


def fox_jacobian(p):
    return FoxJacobian(p)


def fundamental_identity_holds(w):
    """Check sum_j (dw/dx_j)(x_j - 1) == w - 1 in the group ring."""
    total = GroupRingElement()
    for g in sorted({name for name, _ in w}):
        xj = GroupRingElement.of_word(Word([(g, 1)]))
        total = total + fox_derivative(w, g) * (xj - GroupRingElement.one())
    return total == GroupRingElement.of_word(w) - GroupRingElement.one()
