"""
Probing open questions
======================

A few checks go beyond what is proven: whether Theta classes line up with
shadows, whether braid graphs are median graphs, and what happens to the
labelling on a Coxeter graph with a triangle.  Results are printed, not
asserted.
"""
# %%
from braidgraphs import braid_graph, enumerate_braid_class, is_median_graph, standard_family, verify_isometric
from braidgraphs.cube import dimension_probe, embed_class, theta_shadow_probe
from braidgraphs.links import is_link_class, y_subgraph_probe
from braidgraphs.words import reduced_words


def link_classes(g, max_len):
    """Every link class of positive rank with words of at most ``max_len`` letters."""
    seen = set()
    for w in reduced_words(g, max_len, min_len=3):
        if len(w) % 2 == 0 or w in seen:
            continue
        c = enumerate_braid_class(g, w)
        seen.update(c.members)
        if is_link_class(c) and len(c) > 1:
            yield c


for name, max_len in (("A", 9), ("D", 9), ("D~", 7)):
    g = standard_family(name, 5)
    tally = {"links": 0, "theta": 0, "median": 0, "dimension": 0}
    for c in link_classes(g, max_len):
        tally["links"] += 1
        tally["theta"] += theta_shadow_probe(c)["match"]
        tally["median"] += is_median_graph(braid_graph(c))
        tally["dimension"] += dimension_probe(c)["equal"]
    print(f"{name}5, words up to {max_len} letters:", tally)

# %%
# The rank-4 Fibonacci chain: does its Y part look like a smaller link's graph?
c = enumerate_braid_class(standard_family("D", 4), (3, 4, 3, 1, 3, 2, 3, 4, 3))
print(y_subgraph_probe(c))

# %%
# A~_2 is not triangle free.  The library refuses to label this class
# unless asked, and the forced labelling is not isometric.
g = standard_family("A~", 2)
c = enumerate_braid_class(g, (1, 2, 1, 3, 1, 2, 1))
labels = embed_class(c, unchecked=True)
report = verify_isometric(braid_graph(c), labels)
print("isometric:", report.isometric, report.violations[:1])
