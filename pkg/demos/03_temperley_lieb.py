"""
Temperley-Lieb diagrams
=======================

Diagrams of TL_n are matchings too, so every word in the generators names
a triangulation.
"""

# %%
from flipcat import core, tl

u2 = tl.generator_diagram(6, 2)
print(u2.pairing.arcs)

# %%
# Stacking u_2 on itself closes one loop.
sq = u2 * u2
print("loops", sq.loops, "same pairing", sq.pairing == u2.pairing)

# %%
# The defining relations, checked on diagrams.
n = 5
print(tl.evaluate_word((1, 2, 1), n) == tl.evaluate_word((1,), n))
print(tl.evaluate_word((1, 3), n) == tl.evaluate_word((3, 1), n))

# %%
# Products of generators reach C_n loop-free diagrams.
for n in range(2, 8):
    print(n, len(tl.reachable_diagrams(n)), core.catalan(n))

# %%
# The identity is the fan at p_1; each generator has an explicit triangulation.
print(tl.word_to_triangulation((), 5)[0].diagonals)
for i in range(1, 5):
    t = tl.generator_triangulation(5, i)
    assert t == tl.word_to_triangulation((i,), 5)[0]
    print(f"u{i}", t.diagonals, core.format_degrees(core.triangulation_outdegrees(t)))

# %%
print(tl.format_word(tl.parse_word("u4 u3 u2")), tl.shift_word((2, 1, 5, 4)))
