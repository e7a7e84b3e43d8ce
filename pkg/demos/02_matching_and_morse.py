# coding: utf-8

# # From a matching to a smaller resolution
#
# Pick one total ordering of the generators for each lcm-lattice point
# (greatest first). Inside each fiber the matching pairs a set with the set
# missing its smallest bridge, when that is allowed.

# In[1]:

from bmres import (
    OrderingFamily,
    TotalOrdering,
    build_morse,
    check_resolution,
    critical_cells,
    generalized_bm,
    gradient_paths,
    is_minimal,
    minimalize,
)

I = minimalize([(1, 1, 0), (0, 1, 1), (1, 0, 1)])
family = OrderingFamily.uniform(I, TotalOrdering([0, 1, 2]))
A = generalized_bm(I, family)
print(A.edges)  # the triangle is matched with the edge {xy, yz}


# Unmatched subsets are critical and index the new basis.

# In[2]:

crit = critical_cells(I, A)
print([len(c) for c in crit])


# Differential entries sum signed gradient paths. From {xy, yz} the only way
# to {xy, xz} goes up through the triangle and back down.

# In[3]:

for path in gradient_paths(0b011, 0b101, A):
    print(path.cells, path.sign)


# In[4]:

C = build_morse(I, A)
print("ranks", C.ranks)
print("resolution", bool(check_resolution(I, C)))
print("minimal", is_minimal(C))
for r, col in zip(C.basis[2], C.diffs[2]):
    print(bin(r), col)
