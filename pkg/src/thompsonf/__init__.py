"""Thompson's group F through pointed forest diagrams, with an explicit
Ponzi flow on the subgraphs Gamma_k^l of its Cayley graph."""

from .complexity import (
    GammaParams,
    NotInGamma,
    complexity,
    in_gamma,
    min_pointed_position,
    phi,
    s_forest,
    s_tree,
    skeleton,
)
from .forest import (
    LEAF,
    Caret,
    Forest,
    Leaf,
    OriginTag,
    ParseError,
    PointedForest,
    Tree,
    apply_generator,
    apply_generator_inverse,
    canonicalize,
    carets,
    equals,
    graft,
    identity,
    leaves,
    multiply,
    parse_forest,
    parse_pforest,
    parse_tree,
)
from .kernel import BACKEND
from .ponzi import VerificationReport, c_value, divergence, flow_value, verify_ball
from .words import (
    apply_word,
    build_fixed_pointer_word,
    build_tree_word,
    check_relation,
    decompose,
    evaluate,
    format_word,
    parse_word,
    shift_word,
)

__version__ = "0.1.0"
