from .pd import (
    LinkDiagram,
    PDError,
    SignedGaussSequence,
    add_clasp,
    add_curl,
    bridge_length,
    bridges,
    faces,
    gauss_sequence,
    parse_pd,
    parse_pd_file,
    perturb,
    render_pd,
    simplify,
    split_pieces,
)
from .signature import goeritz_matrix, matrix_signature, signature
from .skein import (
    BudgetExceeded,
    QAtMinusOne,
    QResult,
    SkeinEngine,
    q_at_minus_one,
    q_polynomial,
)
from .unknotting import UnknottingBound, unknotting_bound_from_bridge
