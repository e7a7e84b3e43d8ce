# coding: utf-8

# # When an ordering goes wrong
#
# With four generators the identity ordering can leave a gradient path
# between two critical sets of the same lcm. That path shows up as a unit
# entry, so the complex is not minimal.

# In[1]:

from bmres import (
    OrderingFamily,
    TotalOrdering,
    betti_oracle,
    build_morse,
    find_bad_paths,
    generalized_bm,
    is_minimal,
    minimalize,
    search_family,
)

I = minimalize([(2, 2, 0, 1), (2, 0, 0, 2), (2, 2, 2, 0), (1, 1, 2, 2)])
A = generalized_bm(I, OrderingFamily.uniform(I, TotalOrdering(range(I.q))))
C = build_morse(I, A)
print("ranks", C.ranks, "betti", betti_oracle(I).totals, "minimal", is_minimal(C))


# In[2]:

top = (2, 2, 2, 2)
for path in find_bad_paths(I, A, top).paths:
    print(path.cells, path.sign)


# Bad paths of type p live in the fiber of p, so each lattice point gets
# its own search. Candidates from the structural argument come first, then
# plain permutations.

# In[3]:

out = search_family(I)
print("certified", out.certified)
log = out.per_point_log[top]
print("chosen", log.chosen, "via", log.source, "after", len(log.tried), "tries")


# In[4]:

A = generalized_bm(I, out.family)
C = build_morse(I, A)
print("ranks", C.ranks, "minimal", is_minimal(C))
