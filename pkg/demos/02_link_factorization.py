"""
Cutting words into links
========================

Class shadows either overlap in one position or not at all.  Runs of
overlapping shadows mark the links; everything else is a one-letter
factor.  The braid graph is then the box product of the factor graphs.
"""
# %%
from braidgraphs import link_factorization, standard_family, verify_box_product
from braidgraphs.io import parse_word

a6 = standard_family("A", 6)
w = parse_word("1213243565")
print(link_factorization(a6, w))
report = verify_box_product(a6, w)
print("sizes", report.factor_sizes, "->", report.size, "| ranks", report.factor_ranks, "->", report.rank)
print("isomorphism check:", "ok" if report.passed else report.failures)

# %%
# The witness is just the split along factor spans.
for member, parts in sorted(report.isomorphism.items())[:4]:
    print("".join(map(str, member)), "->", " | ".join("".join(map(str, p)) for p in parts))

# %%
# A longer D_7 word with two rank-3 links separated by five letters that
# never take part in a braid move.
d7 = standard_family("D", 7)
w = parse_word("3231343567543231343")
print(link_factorization(d7, w))
report = verify_box_product(d7, w)
print("class size", report.size, "= 5 * 5, rank", report.rank)
