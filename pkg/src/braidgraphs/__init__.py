"""Braid classes and braid graphs of simply-laced Coxeter systems."""
from .classes import (
    BraidClass,
    MatsumotoGraph,
    braid_distance,
    braid_graph,
    class_shadows,
    class_support,
    commutation_class,
    enumerate_braid_class,
    enumerate_matsumoto,
    rank,
)
from .coxeter import CoxeterGraph, build_graph, induced_support_subgraph, is_star, is_triangle_free, standard_family
from .cube import (
    automorphism_shift,
    embed_word,
    fibonacci_cube,
    hypercube,
    image_is_fibonacci,
    is_median_graph,
    isometric_dimension,
    phi,
    theta_classes,
    verify_isometric,
)
from .errors import BraidError
from .graph import SimpleGraph, box_product
from .links import (
    LinkFactorization,
    StringSpec,
    choose_sigma,
    fibonacci_form,
    is_fibonacci_link,
    is_link,
    link_factorization,
    partition_xy,
    star_criterion,
    type_a_string,
    verify_box_product,
)
from .words import Interval, apply_braid_move, apply_commutation_move, braid_shadows, is_reduced

__version__ = "0.1.0"
