"""Leavitt path algebras of finite graphs, computed exactly as Steinberg
algebras of graph groupoids, together with normalizers, the Weyl groupoid and
the groupoid isomorphisms induced by diagonal preserving *-isomorphisms."""

from __future__ import annotations

from .action import (IsolatedPoint, PartialMap, alpha, apply_alpha, compress, compress_scalar, dom,
                     is_normalizer, isolate, ran)
from .errors import LeavittError, ParseError
from .graph import (Arrow, Cylinder, Graph, Lasso, Path, compose_arrows, concat,
                    cylinder_membership, invert_arrow, lag_equivalent, shift, validate_graph)
from .iso import (GroupoidIso, IsoSpec, extend_pi, groupoid_iso_from_pi, pi_from_groupoid_iso,
                  psi, validate_pi)
from .rings import ZI, ZZ, Gaussian, Ring
from .steinberg import (Element, add, degree, evaluate, from_terms, homogeneous_component,
                        is_diagonal, mul, scalar_mul, star, support_units)
from .stone import (CompactOpen, FilterChain, check_kappa_linearity, idempotent_to_set,
                    induce_kappa, join, leq, meet, rho, rho_inverse, set_to_idempotent)
from .weyl import (WeylClass, equivalent, lag_decompose, phi, phi_inverse, weyl_compose,
                   weyl_inverse, weyl_range, weyl_source)

__version__ = "0.1.0"

__all__ = [
    "Arrow", "CompactOpen", "Cylinder", "Element", "FilterChain", "Gaussian", "Graph",
    "GroupoidIso", "IsoSpec", "IsolatedPoint", "Lasso", "LeavittError", "ParseError",
    "PartialMap", "Path", "Ring", "WeylClass", "ZI", "ZZ",
    "add", "alpha", "apply_alpha", "check_kappa_linearity", "compose_arrows", "compress",
    "compress_scalar", "concat", "cylinder_membership", "degree", "dom", "equivalent",
    "evaluate", "extend_pi", "from_terms", "groupoid_iso_from_pi", "homogeneous_component",
    "idempotent_to_set", "induce_kappa", "invert_arrow", "is_diagonal", "is_normalizer",
    "isolate", "join", "lag_decompose", "lag_equivalent", "leq", "meet", "mul", "phi",
    "phi_inverse", "pi_from_groupoid_iso", "psi", "ran", "rho", "rho_inverse",
    "scalar_mul", "set_to_idempotent", "shift", "star", "support_units", "validate_graph",
    "validate_pi", "weyl_compose", "weyl_inverse", "weyl_range", "weyl_source",
]
