"""The finiteness trichotomy for 3x3 arrangement matrices.

A symmetric matrix with diagonal 2 records three reflections by their
mutual pairings.  Its braid orbit is finite or infinite depending only
on the entries; this walks the three characteristic situations.
"""

from fractions import Fraction

from braidrefl.arrangement import ArrangementMatrix
from braidrefl.exactnum import ExactNumber, two_cos
from braidrefl.orbits import classify_3x3, matrix_orbit
from braidrefl.realization import degenerate_3x3


def mk(a, b, c):
    two = ExactNumber.from_rational(2)
    return ArrangementMatrix([[two, a, b], [a, two, c], [b, c, two]])


def show(title, B):
    r = classify_3x3(B)
    print(f"{title}: {r.kind}  ({r.reason})")
    if r.kind == "Finite":
        print(f"  orbit size {matrix_orbit(B).size}")


one = ExactNumber.one()
print("-- unit pairings: the A3 Cartan matrix up to sign --")
show("B(A_3)", mk(one, one, one))

print()
print("-- golden-ratio pairings: still finite --")
g = two_cos(1, 5)  # 2 cos(pi/5)
show("H3-flavoured", mk(g, one, g))

print()
print("-- a degenerate rank-2 family: finite for periodic angles --")
show("angles (pi/3, pi/5)", degenerate_3x3(Fraction(1, 3), Fraction(1, 5)))

print()
print("-- entries of absolute value > 2 force an infinite orbit --")
show("all entries -2", mk(*[-ExactNumber.from_rational(2)] * 3))
show("an aperiodic entry 5/2", mk(ExactNumber.from_rational(Fraction(5, 2)), one, one))
