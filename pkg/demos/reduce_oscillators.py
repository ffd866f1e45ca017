"""
Momentum-map reduction of coupled oscillators
=============================================

s copies of a classical oscillator in R^l carry commuting actions of
O(s) and Sp(l,R).  Sampling the zero level of the O(s) momentum map and
pushing through the Sp(l,R) momentum map lands in the nilpotent cone;
the histogram of orbit types shows the rank saturate at min(l, s).
"""

import orbitkit.dualpair as dp

l = 3
for s in range(1, l + 2):
    cfg = dp.make_dual_pair("o-sp", s, 0, (l,))
    hist = dp.reduce_and_classify(cfg, 400, seed=5)
    row = "  ".join(f"({t},{u}):{n}" for (t, u), n in sorted(hist.items()))
    print(f"O({s}) x Sp({l},R)   {row}")

# an indefinite source group reaches both signs
print()
cfg = dp.make_dual_pair("o-sp", 1, 1, (1,))
hist = dp.reduce_and_classify(cfg, 400, seed=5)
row = "  ".join(f"({t},{u}):{n}" for (t, u), n in sorted(hist.items()))
print(f"O(1,1) x Sp(1,R)    {row}")
