# coding: utf-8

# # The Taylor complex and Betti numbers
#
# A monomial is a tuple of exponents. Generators of an ideal are indexed
# 0, 1, 2, ... and a subset of generators is an int whose bit i means
# "generator i is in".

# In[1]:

from bmres import betti_oracle, build_taylor, check_resolution, is_minimal, minimalize

I = minimalize([(1, 1, 0), (0, 1, 1), (1, 0, 1)])  # xy, yz, xz
print(I)


# The lcm lattice groups subsets by their lcm. The top point xyz has four
# subsets over it: the whole triangle and its three edges.

# In[2]:

lat = I.lattice
for p, fiber in zip(lat.points, lat.fibers):
    print(p, [bin(s) for s in fiber])


# The Taylor complex has one basis element per subset, so ranks 1, 3, 3, 1.
# It resolves S/I but is not minimal: some entries are plain signs.

# In[3]:

T = build_taylor(I)
print("ranks", T.ranks)
print("resolution", bool(check_resolution(I, T)))
print("minimal", is_minimal(T))


# Betti numbers come from the homology of each fiber. Here b_2 = 2, both in
# degree xyz, so the minimal resolution has ranks 1, 3, 2.

# In[4]:

B = betti_oracle(I)
for i, p, v in B.rows():
    print(i, p, v)
print("totals", B.totals)
