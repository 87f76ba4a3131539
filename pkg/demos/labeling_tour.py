"""
One graceful tree, many labelings
=================================

"""

from topcoding.graph import Graph
from topcoding.labelings import VerifierSpec, magic_profile, verify
from topcoding.solver import count_labelings, search
from topcoding import transforms as tf

# a caterpillar: spine 0-1-2 with leaves on the spine
T = Graph(7, ((0, 1), (1, 2), (0, 3), (1, 4), (2, 5), (2, 6)))

print("graceful labelings:", count_labelings(T, VerifierSpec("graceful")))
sog = VerifierSpec("set-ordered-graceful")
f = next(search(T, sog))
print("first set-ordered graceful:", f.vertex)

# the theorem's family, each output checked against its own kind
for member in ("g1", "g2", "g3", "g5"):
    g = tf.harmonious_family(T, f, member)
    print(f"{member} -> {tf.HARMONIOUS_TARGETS[member]:<22} {g.vertex}")
g = tf.harmonious_family(T, f, "g7", k=3, d=2)
print("g7 (k=3, d=2)", g.vertex)

# equivalent total labelings
odd = tf.equivalent_transform(T, f, "odd-graceful")
print("odd-graceful edges:", sorted(odd.edge))
emt = tf.equivalent_transform(T, f, "edge-magic-total")
print("edge-magic constant:", magic_profile(T, emt).sum)

# (k,d)-graceful images and a dual
for k, d in ((1, 1), (2, 3)):
    g = tf.kd_graceful_from_graceful(T, f, k, d)
    print(f"({k},{d})-graceful:", g.vertex, verify(T, g, VerifierSpec("kd-graceful", k=k, d=d)).passed)
print("dual:", tf.dual(f).vertex)
