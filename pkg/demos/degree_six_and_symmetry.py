"""
Degree 6 and the u -> -u symmetry
=================================

The two halves of the pipeline are swapped by u -> -u.  The x coordinate
is carried across unchanged, the y coordinate picks up a sign.
"""

from inose import example, run_pipeline

ex = example("d6")
run = run_pipeline(ex.e1, ex.e2, ex.phi)

plus, minus = run.lifted[1], run.lifted[-1]
print("x- == sigma(x+):", minus.x == plus.x.negate_var())
print("y- == -sigma(y+):", minus.y == -plus.y.negate_var())
print("ninth points swap:", run.ninth[-1] == run.ninth[1].negate_var())

# the sum P+ + P- is invariant, so it descends to s = u^6
print("X =", run.section.X)
print("height:", run.section.height, "expected:", 2 * ex.degree)
