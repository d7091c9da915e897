"""
A degree-5 isogeny, stage by stage
==================================

Follow one isogeny through the whole construction and look at what each
stage produces.
"""

from inose import example, run_pipeline, verify_isogeny

# the input: two curves and an isogeny between them
ex = example("d5")
print("E1:", ex.e1)
print("E2:", ex.e2)
print("isogeny valid:", verify_isogeny(ex.e1, ex.e2, ex.phi).passed)

run = run_pipeline(ex.e1, ex.e2, ex.phi)

# the Weierstrass data of the Inose surface
print("A =", run.data.A, " B =", run.data.B)

# the graph of the isogeny splits into two halves over Q(u)
print("p+ =", run.pair.p_plus)
print("degree of p+ in x1:", run.pair.p_plus.degree)

# the third point of the tangent line at O
print("O_bar =", run.origin_bar)

# a cubic through the zeros of p+, and the extra point it meets
print("fitted cubic:", run.fitted[1])
print("ninth point:", run.ninth[1])

# the section on the surface, back over Q(s)
sec = run.section
print("X =", sec.X)
print("Y =", sec.Y)
print("(P.O) =", sec.intersection, " height =", sec.height)
