"""
Flips as merges and splits
==========================

A diagonal flip in the polygon shows up as a small local rotation of the
bit sequence of the matching.
"""

# %%
from flipcat import core, flips

fan = core.triangulation_from_diagonals(3, [(1, 3), (1, 4)])
f = flips.find_diagonal_flip(fan, (1, 3))
print("quad", f.quad, "old", f.old_diagonal, "new", f.new_diagonal)

# %%
# The same step seen on the matching side.
move = flips.transport_diagonal_flip(fan, f)
m = core.triangulation_to_matching(fan)
after = flips.apply_arc_move(m, move)
print(move.kind, "of arc", move.arc)
print(core.format_bits(core.matching_outdegrees(m)), "->", core.format_bits(core.matching_outdegrees(after)))
assert core.matching_to_triangulation(after) == flips.diagonal_flip(fan, (1, 3))

# %%
# Each of the n-1 diagonals gives one move, and they are all distinct.
t = core.triangulation_from_outdegrees((2, 0, 2, 0, 1, 1))
for d in t.diagonals:
    mv = flips.transport_diagonal_flip(t, d)
    print(d, "->", flips.find_diagonal_flip(t, d).new_diagonal, ":", mv.kind, mv.arc)

# %%
# Matching flips swap two arcs sharing a face.  In general position the
# new degree sequence is predicted without running the bijection.
m6 = core.matching_from_arcs(6, [(1, 10), (4, 7), (2, 3), (5, 6), (8, 9), (11, 12)])
mf = flips.MatchingFlip((1, 4, 7, 10), flips.NEST_TO_SEQ)
effect = flips.matching_flip_deffect(m6, mf)
print("p, q =", effect.p, effect.q)
print(core.format_degrees(effect.before), "->", core.format_degrees(effect.after))
m6b = flips.apply_matching_flip(m6, mf)
print("check", core.format_degrees(core.degrees_from_bits(core.matching_outdegrees(m6b))))

# %%
# When the three right-hand indices are adjacent and the left pair is not,
# the matching flip moves two diagonals, not one.
m3 = core.matching_from_arcs(3, [(1, 6), (2, 3), (4, 5)])
g = flips.MatchingFlip((1, 4, 5, 6), flips.NEST_TO_SEQ)
before = set(core.matching_to_triangulation(m3).diagonals)
after = set(core.matching_to_triangulation(flips.apply_matching_flip(m3, g)).diagonals)
print(flips.special_cases(g), "changed:", sorted(before ^ after))
