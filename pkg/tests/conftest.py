"""Shared fixtures and frozen reference values.

The two solution constants below were established independently of the
package: lexicographic Groebner elimination of the quadratic system yields
q^2 * (288 q^6 + 864 q^5 + 1512 q^4 + 2400 q^3 + 2205 q^2 + 600 q - 125)
as the eliminant, whose only nonzero real roots are q ~ 0.133029 and
q ~ -0.857420; back-substitution at 60-digit precision gives the values
here, rounded to float64.  The geometric constants follow by direct
evaluation of the drawing at those roots.
"""

import pytest

from unitdist.graph import bipartition, generalized_petersen
from unitdist.layout import rhombus_layout
from unitdist.solver import enumerate_solutions

KNOWN_SOLUTION = (1.133692560712488, 1.6476471642269659,
                  0.8574195636268543, 0.13302915841106489)
REFLECTED_SOLUTION = (1.6476471642269659, 1.133692560712488,
                      -0.13302915841106489, -0.8574195636268543)

# 6-decimal reference values quoted in the acceptance criteria
REFERENCE_6DP = (1.133693, 1.647647, 0.857420, 0.133029)

# frozen regression constants of the faithful drawing (unit-edge units)
MIN_NONEDGE_GAP = 0.06924361979757983
MIN_NONEDGE_GAP_ORBIT = ((1, 10), (3, 10), (5, 14), (7, 14))
MIN_VERTEX_SEPARATION = 0.26605831682212978


@pytest.fixture(scope="session")
def solutions():
    """Both non-degenerate roots via a moderate multistart sweep."""
    found = enumerate_solutions(seed_count=2000, rng_seed=7)
    assert len(found) == 2
    return found


@pytest.fixture(scope="session")
def main_solution(solutions):
    """The root with h < k (first in lexicographic order)."""
    return solutions[0]


@pytest.fixture(scope="session")
def faithful_drawing(main_solution):
    return rhombus_layout(main_solution)


@pytest.fixture(scope="session")
def gp83():
    return generalized_petersen(8, 3)


@pytest.fixture(scope="session")
def gp83_bipartition(gp83):
    return bipartition(gp83)
