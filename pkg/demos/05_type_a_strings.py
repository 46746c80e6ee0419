"""
Strings are the links of type A
===============================

In A_n every link is one of the explicit strings indexed by (l, k, m, eps).
The six strings with l = 6, m = 4 form a single class whose braid graph is
a path.
"""
# %%
from braidgraphs import StringSpec, braid_graph, enumerate_braid_class, is_link, standard_family, type_a_string
from braidgraphs.links import all_strings, string_graph
from braidgraphs.words import reduced_words, word_str

six = [type_a_string(StringSpec(6, k, 4, "+")) for k in range(6)]
print([word_str(w) for w in six])
c = enumerate_braid_class(standard_family("A", 9), six[0])
print("one class:", set(c.members) == set(six), "| path:", braid_graph(c) == string_graph(StringSpec(6, 0, 4, "+")))

# %%
# Exhaustive check in A_5 up to nine letters.
a5 = standard_family("A", 5)
strings = all_strings(5, 9)
links = [w for w in reduced_words(a5, 9) if is_link(a5, w)]
print(len(links), "links,", len(strings), "strings, equal sets:", set(links) == set(strings))
