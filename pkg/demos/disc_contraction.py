"""
Flattening the hyperbolic disc bracket
======================================

A one-parameter family of Poisson structures on the plane interpolates
between the coadjoint-orbit bracket of the disc (epsilon = 1, curvature
-1 at the origin) and the flat translation-invariant bracket (epsilon = 0).
"""

import numpy as np

from orbitkit.poisson import (
    ContractionModel, contraction_bracket, model_metric_and_curvature,
)

for eps in (1.0, 0.5, 0.1, 0.0):
    m = ContractionModel(eps)
    k = [model_metric_and_curvature(m, z)[1] for z in (0.25, 0.5, 2.0)]
    b = [contraction_bracket(m, x, 0.3) for x in (0.0, 1.0, 2.0)]
    print(f"eps = {eps:4.2f}   curvature {np.round(k, 6)}   bracket {np.round(b, 6)}")

# at eps = 0 the curvature vanishes identically away from the puncture
# and the bracket becomes the radius function of the flat cone
