"""
Every-zero graphic groups
=========================

"""

from topcoding import groups as gr
from topcoding.graph import Graph, path_graph
from topcoding.labelings import VerifierSpec
from topcoding.solver import find_labeling

# base: an odd-graceful path, translated through 2q offsets
P = path_graph(5)
f = find_labeling(P, VerifierSpec("odd-graceful"))
G = gr.build_group(P, f, n=2 * P.q)
for i in (1, 2, 8):
    print(f"H{i}:", G.labeling(i))

# any element can be the zero; the sum moves with it
for zero in (1, 4):
    print(f"zero H{zero}: H3 + H6 = H{gr.add(G, 3, 6, zero)}, inverse of H3 = H{gr.inverse(G, 3, zero)}")

rep = gr.check_axioms(G)
print("axioms under every zero:", rep.passed)

# color a tree's edges with chosen elements, then solve for the vertices
T = Graph(5, ((0, 1), (0, 2), (2, 3), (2, 4)))
F = gr.tree_group_coloring(T, G, {0: 1, 1: 2, 2: 3, 3: 4})
print("vertex elements:", F)
enc = gr.encrypt_graph(T, G, F)
print("edge elements:", enc.edge, "graceful group-labeling:", enc.graceful)
