"""
From a labeled graph to a number string and back
================================================

"""

from topcoding import topcode as tc
from topcoding.graph import Graph
from topcoding.labelings import Labeling, VerifierSpec, verify

# an odd-graceful graph on seven vertices; vertex colors are the labels
edges = [(4, 5), (3, 4), (0, 2), (0, 3), (1, 5), (1, 6), (0, 6)]
colors = (0, 2, 5, 7, 10, 11, 13)
G = Graph(7, tuple(edges))
f = Labeling(colors)
print("odd-graceful:", verify(G, f, VerifierSpec("odd-graceful")).passed)

# one column per edge, sorted by edge color
T = tc.from_labeled_graph(G, f)
print("X", T.X)
print("E", T.E)
print("Y", T.Y)
print("tags:", sorted(map(str, tc.classify(T))))

# the same matrix read along four routes
for route in tc.ROUTES:
    print(route, tc.emit_string(T, route))

# reading a string back is ambiguous: count the cuts, then keep the odd-graceful ones
s = tc.emit_string(T, "O1")
print("cuts of the O1 string into 21 numbers:", tc.count_segmentations(s, 21))
found = tc.partition_string(s, 7, kind="odd-graceful", cap=7)
print("odd-graceful matrices among them:", len(found), "| original recovered:", T in found)
