"""Explicit sections of Inose surfaces attached to isogenies of elliptic curves.

Everything is exact: rationals are ``gmpy2.mpq`` and the coefficient field is
``Q(u)`` (or ``Q(s)`` with ``s = u**6``).

>>> from inose import example, compute_section
>>> ex = example("d6")
>>> compute_section(ex.e1, ex.e2, ex.phi).height
mpq(12,1)
"""

from .algebra import RatFunc, UniPoly, descend_to_s, lift_from_s, poly_gcd, rational
from .catalog import WorkedExample, example
from .core import (InoseData, PipelineRun, SectionF1, SplitPair, TransformTables,
                   assemble_section, build_cubic, build_model, compute_section, fit_curve,
                   inose_coefficients, ninth_point, origin, origin_bar, psi_transform,
                   run_pipeline, section_height, split_divisor)
from .elliptic import (ECPoint, EllipticCurve, RationalMap, WeierstrassModel, discriminant,
                       ec_add, ec_mul, ec_neg, ec_sub, verify_isogeny)
from .errors import *  # noqa: F401,F403
from .linsolve import FFMatrix, det_bareiss, nullspace, reduce_basis
from .plane import ProjPoint, TriPoly, evaluate, resultant_x2, tangent_third_point

__version__ = "0.1.0"
