"""cfindep: exact continued fractions with algebraic partial quotients.

The library builds convergents exactly over Q or a real number field,
checks the hypotheses of a linear-independence criterion on finite
prefixes, verifies the supporting lemmas on concrete and randomized
inputs, and probes the independence conclusions empirically with an
exact-integer LLL relation search.
"""

__version__ = "0.1.0"
