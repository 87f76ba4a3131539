"""
Degree sequences: tests and operations
======================================

"""

from topcoding import degseq as ds
from topcoding.solver import realize

d = ds.DegreeSequence((4, 2, 2, 2, 2, 2, 1, 1, 1, 1))
print(d, "graphical:", ds.is_graphical(d))
print("realized by", realize(d).edges)
print((3, 3), "graphical:", ds.is_graphical((3, 3)))

# coinciding one entry of each sequence, and joining two entries with an edge
a, b = (2, 2, 2), (1, 1)
print("coincide:", ds.coincide(a, b, [(0, 0)]), ds.is_graphical(ds.coincide(a, b, [(0, 0)])))
print("join:", ds.join(a, b, 0, 0), ds.is_graphical(ds.join(a, b, 0, 0)))

# merging two pairs at once can break graphicality
bad = ds.coincide((1, 1), (1, 1), [(0, 0), (1, 1)])
print("two-pair coincide of (1,1) with (1,1):", bad, ds.is_graphical(bad))
# and neither operand needs to be graphical for a single merge to be
print("(1) with (1,1,1):", ds.coincide((1,), (1, 1, 1), [(0, 0)]))

print("complement of K1,3:", ds.complement((3, 1, 1, 1)))
