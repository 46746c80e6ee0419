"""
Fibonacci links in D_4
======================

When every shadow of the class already appears in one word, that word
alternates a hub letter with its neighbours.  The class sizes climb the
Fibonacci numbers and the braid graphs are Fibonacci cubes.
"""
# %%
from braidgraphs import (
    braid_graph,
    choose_sigma,
    enumerate_braid_class,
    fibonacci_cube,
    fibonacci_form,
    partition_xy,
    rank,
    standard_family,
)
from braidgraphs.cube import image_is_fibonacci
from braidgraphs.oracle import small_iso
from braidgraphs.words import word_str

d4 = standard_family("D", 4)
for text in ["343", "34313", "3431323", "343132343", "34313234313"]:
    w = tuple(map(int, text))
    c = enumerate_braid_class(d4, w)
    s, ts = fibonacci_form(d4, w)
    iso = small_iso(braid_graph(c), fibonacci_cube(rank(c))) is not None
    print(f"{text:>12}  rank {rank(c)}  size {len(c):>2}  hub {s} spokes {ts}  cube iso {iso}  image ok {image_is_fibonacci(c)}")

# %%
# Splitting the rank-4 chain by the letter at position 8.  The smaller
# part is a copy of the rank-2 chain with four letters appended.
c = enumerate_braid_class(d4, (3, 4, 3, 1, 3, 2, 3, 4, 3))
x, y = partition_xy(c, choose_sigma(c, rank(c) - 1))
print("X:", sorted(map(word_str, x)))
print("Y:", sorted(map(word_str, y)))

# %%
# D_5 has no star on this support, so the chain below has no Fibonacci
# member; its 18 vertices match a Lucas number instead.
from braidgraphs import star_criterion
from braidgraphs.links import fibonacci_members

d5 = standard_family("D", 5)
w = tuple(map(int, "4534313234313"))
c = enumerate_braid_class(d5, w)
print(len(c), "members, rank", rank(c), "| star:", star_criterion(d5, w), "| Fibonacci members:", fibonacci_members(c))
