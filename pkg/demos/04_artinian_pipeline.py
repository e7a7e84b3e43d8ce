# coding: utf-8

# # The full pipeline, with pure powers
#
# Adding x_i^{n_i} for every variable gives an Artinian ideal. The pure
# powers never act as bridges, so only the orderings of the original
# generators matter.

# In[1]:

import random

from bmres import artinian_reduction, betti_oracle, main_theorem_pipeline, minimalize

J = minimalize([(2, 1, 0), (1, 2, 0), (0, 1, 1), (1, 0, 1)])  # x^2y, xy^2, yz, xz
I = artinian_reduction(J, [3, 3, 2])
print(I)
print("J-part", I.jpart, "pure powers", I.pure_powers)


# In[2]:

rep = main_theorem_pipeline(J, [3, 3, 2])
print("matching size", len(rep.matching))
print("ranks", rep.ranks, "betti", rep.betti.totals)
print("certified", rep.certified, "resolution", bool(rep.resolution))


# The matching restricted to subsets of J is a matching for J on its own,
# and gives a minimal resolution of J too.

# In[3]:

r = rep.restriction
print("valid", r.valid, "same as rerun", r.same_as_rerun, "minimal", r.minimal)


# A batch of random ideals with at most five generators.

# In[4]:

rng = random.Random(0)
certified = 0
for _ in range(200):
    N = rng.randint(2, 4)
    gens = [tuple(rng.randint(0, 2) for _ in range(N)) for _ in range(5)]
    gens = [g for g in gens if any(g)] or [(1,) * N]
    J = minimalize(gens)
    n = [rng.randint(1, 3) for _ in range(N)]
    rep = main_theorem_pipeline(J, n)
    certified += rep.certified and rep.ranks == betti_oracle(rep.ideal).totals
print(certified, "of 200 certified minimal")
