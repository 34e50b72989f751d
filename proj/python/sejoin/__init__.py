"""Exact invariants of Sasakian-Einstein joins.

Thin package around the compiled extension.  The useful entry points:

    sphere(n), circle(), del_pezzo_bundle(k), fermat_link(d, n),
    three_sasakian(p1, p2, p3), toric_omega(k, order=None)
    join(a, b), n_fold_join([...]), eval_expr("S3 * T(1,2,3)")
    smoothness_certificate(a, b), integral_model(space)
    lattice_point(s1, s2, l, k), enumerate_smooth(...), scaling_solution(n1, n2)
    cor418_triples(rmax), validate_space(space), report_json(expr)
"""

from sejoin._core import *  # noqa: F401,F403
from sejoin._core import __doc__  # noqa: F401
