"""
Matchings and triangulations
============================

Walk through the encoding that ties plane perfect matchings on 2n points
to triangulations of the (n+2)-gon.
"""

# %%
# A matching is a set of non-crossing arcs on the points 1..2n.
from flipcat import core

m = core.matching_from_arcs(3, [(1, 6), (2, 3), (4, 5)])
print(m)

# %%
# Read every arc from its lower endpoint: 1 where an arc starts, 0 where it ends.
bits = core.matching_outdegrees(m)
print("bits   ", core.format_bits(bits))

# %%
# Grouping the bits into runs of 1s, one run per 0, gives a degree sequence.
degrees = core.degrees_from_bits(bits)
print("degrees", core.format_degrees(degrees))

# %%
# The degree sequence pins down exactly one triangulation of the pentagon.
t = core.triangulation_from_outdegrees(degrees)
print(t.diagonals)
assert core.triangulation_to_matching(t) == m

# %%
# Every arc has a diagonal of its own; the arc at vertex 1 maps to the hull edge.
for arc, diag in sorted(core.arc_diagonals(m).items()):
    print(f"arc {arc} -> {diag}")

# %%
# Both sides are counted by the Catalan numbers.
for n in range(1, 9):
    ms = core.enumerate_matchings(n)
    ts = {core.matching_to_triangulation(x) for x in ms}
    print(n, len(ms), len(ts), core.catalan(n))
