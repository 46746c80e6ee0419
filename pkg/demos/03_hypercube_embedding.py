"""
Braid graphs as partial cubes
=============================

Each member of a link class is labelled by the letters at its even
positions, compared against a fixed base member.  Graph distance equals
Hamming distance between labels, so the braid graph sits isometrically in
a hypercube whose dimension is the rank.
"""
# %%
from braidgraphs import braid_graph, enumerate_braid_class, phi, standard_family, verify_isometric
from braidgraphs.cube import automorphism_shift, embed_class, isometric_dimension, theta_classes
from braidgraphs.words import word_str

d4 = standard_family("D", 4)
c = enumerate_braid_class(d4, (2, 3, 2, 1, 4, 3, 4))
bg = braid_graph(c)
for base in [(2, 3, 2, 1, 4, 3, 4), (3, 2, 3, 1, 3, 4, 3)]:
    labels = {m: phi(c, base, m) for m in c.members}
    print("base", word_str(base), {word_str(m): b for m, b in labels.items()})
    print("  isometric:", verify_isometric(bg, labels).isometric)

# %%
# Changing the base flips a fixed set of bits on every label.
a, b = (2, 3, 2, 1, 4, 3, 4), (3, 2, 3, 1, 3, 4, 3)
print("shift between the two bases:", automorphism_shift(c, a, b))

# %%
# The Djokovic-Winkler classes give the isometric dimension without
# searching over embeddings.  Here there are three, one per shadow.
print("theta classes:", len(theta_classes(bg)), "| dimension:", isometric_dimension(bg))

# %%
# Words that are not links get one label block per factor.
a6 = standard_family("A", 6)
c6 = enumerate_braid_class(a6, (1, 2, 1, 3, 2, 4, 3, 5, 6, 5))
labels = embed_class(c6)
print({word_str(m): v for m, v in sorted(labels.items())})
print("isometric:", verify_isometric(braid_graph(c6), labels).isometric)
