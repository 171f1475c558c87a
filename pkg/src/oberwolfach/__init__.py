"""Constructive solver and verifier for the Oberwolfach problem.

Builds graceful and alpha labelings of cycles-plus-one-path graphs, doubles
them into 2-starters over Z_2n, develops starters into explicit
2-factorizations of lambda K_v (or K_v with a perfect matching removed or
added), and independently verifies every artifact it emits.
"""

from .alpha import al_chain, base_even_cycle, build_al, build_al_for_path, even_cycle_path
from .extensions import JoinBudget, extend_even, extend_high, extend_low, join_al_gl, join_budget
from .graceful import (
    add_odd_cycle,
    base_odd,
    base_odd2,
    build_gl,
    build_gl_odd,
    gl_even2,
)
from .graphs import (
    INF,
    INF2,
    CycleMultiset,
    GraphSpec,
    LabeledGraph,
    Refused,
    SingleFlip,
    affine_map,
    classify_single_flip,
    cycle_type,
    difference_list,
    graph_from_json,
    graph_to_json,
    path_difference_list,
    translate,
)
from .labelings import (
    Alpha,
    ALParams,
    Graceful,
    GLParams,
    Report,
    Violation,
    bipartite_shift,
    fold,
    necessary_conditions,
    normalize_al,
    reflect,
    verify_al,
    verify_gl,
)
from .opsolve import (
    OPInstance,
    Solution,
    compose_lambda,
    develop,
    solution_from_json,
    solution_to_json,
    solve,
    thresholds,
    to_covering,
    to_packing,
    twofold,
    verify_solution,
)
from .oracle import SearchResult, search
from .paths import path_al, zigzag_path
from .starters import (
    Starter,
    double_quad,
    double_simple,
    halve_pairs,
    starter_from_json,
    starter_to_json,
    verify_starter,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
