"""
Braid classes inside a Matsumoto graph
======================================

The longest element of A_3 has sixteen reduced words.  Commutation moves
and braid moves both connect them; keeping one kind of edge at a time
splits the sixteen words into classes.
"""
# %%
from braidgraphs import enumerate_braid_class, enumerate_matsumoto, rank, standard_family
from braidgraphs.classes import class_shadows
from braidgraphs.words import word_str

a3 = standard_family("A", 3)
mg = enumerate_matsumoto(a3, (1, 2, 3, 1, 2, 1))
kinds = [k for _, _, k, _ in mg.edges]
print(len(mg), "reduced words,", kinds.count("braid"), "braid edges,", kinds.count("commutation"), "commutation edges")

# %%
# Braid-only components are the braid classes.  Four have three members,
# four are singletons with no braid move available at all.
for cls in mg.braid_classes():
    print("braid      ", " ".join(word_str(w) for w in sorted(cls)))
for cls in mg.commutation_classes():
    print("commutation", " ".join(word_str(w) for w in sorted(cls)))

# %%
# A single braid class carries its own graph.  In D_4 the class of 2321434
# has five members; its shadows are the places any member admits a move.
d4 = standard_family("D", 4)
c = enumerate_braid_class(d4, (2, 3, 2, 1, 4, 3, 4))
print(c)
print("shadows:", " ".join(str(iv) for iv in sorted(class_shadows(c))))
for i, j, lo in c.edges:
    print(f"  {word_str(c.members[i])} -- {word_str(c.members[j])}  move at {lo}")
print("rank", rank(c), "so at most", 2 ** rank(c), "members")
