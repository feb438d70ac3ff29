"""Intersecting families of integer sequences.

Two sequences "meet" where they agree. A per-symbol threshold asks for at
least t_i agreements equal to symbol i.
"""

from xfam.seqfam import (
    SeqFamily,
    correlation_check,
    is_cross_tvec_intersecting,
    meet,
    p_complete_closure,
    seq_dual,
)

print("meet of (1,2,3) and (1,3,3):", meet((1, 2, 3), (1, 3, 3)))

# Over {1,2} a (1,1) threshold means: share a 1 somewhere and a 2 somewhere.
H = SeqFamily.from_seqs(2, 3, [(1, 2, 1), (1, 2, 2)])
print("(1,1)-intersecting:", is_cross_tvec_intersecting(H, H, (1, 1)))
print("its largest (1,1) partner:", seq_dual(H, (1, 1)).seqs())

# Plain threshold: at least one agreeing coordinate.
x = SeqFamily.from_seqs(3, 2, [(1, 1)])
print("partners of (1,1) in [3]^2:", seq_dual(x, 1).seqs())

# Closing under P frees every coordinate whose symbol is outside P.
h1 = p_complete_closure(SeqFamily.from_seqs(3, 2, [(1, 2)]), {1})
h2 = p_complete_closure(SeqFamily.from_seqs(3, 2, [(3, 2)]), {2})
print("{1}-closure of (1,2):", h1.seqs())
print("{2}-closure of (3,2):", h2.seqs())
common = len(set(h1.members) & set(h2.members))
print(f"|H1 & H2| * 9 = {common * 9} <= |H1| * |H2| = {len(h1) * len(h2)}:",
      correlation_check(h1, h2, {1}, {2}))
