"""
Classifying nilpotent cone elements by signed rank
==================================================

Pick a representative for each orbit type, scramble it with random
group conjugations, and check the classifier recovers the type.
"""

import numpy as np

from orbitkit.classify import admissible_types, classify_nilpotent, random_conjugate
from orbitkit.liealg import make_algebra
from orbitkit.triples import orbit_rep

rng = np.random.default_rng(0)

for family, params in (("sp", (3,)), ("u", (2, 2)), ("sostar", (4,)), ("so2q", (5,))):
    desc = make_algebra(family, params)
    print(f"\n{desc.name()}   rank r = {desc.r}")
    for t, u in admissible_types(desc):
        X = orbit_rep(desc, t, u)
        hits = sum(
            classify_nilpotent(desc, random_conjugate(desc, X, rng=rng)) == (t, u)
            for _ in range(20)
        )
        tag = "holomorphic" if u == 0 else ("anti" if t == 0 else "mixed")
        print(f"  type ({t},{u})  {tag:<12} recovered {hits}/20")
