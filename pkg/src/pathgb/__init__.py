"""Noncommutative Gröbner bases over path algebras, and left Kan extensions.

Typical use::

    from pathgb import parse_presentation, buchberger, irreducible_terms
    pf = parse_presentation(open("hecke.kan").read())
    report = buchberger(pf.system())
    basis = report.system
"""
from .errors import (
    DanglingEndpoint, DuplicateName, Incomplete, InternalLimit, InvalidPresentation, NotComplete,
    NotComposable, PathGBError, PresentationSyntaxError, QuiverError, SemanticError, TypeMismatch,
    ZeroPolynomial,
)
from .quiver import (
    Arrow, Ordering, Path, PathOrder, Quiver, compare, compose, enumerate_paths, identity, make_quiver,
)
from .algebra import (
    PathPolynomial, add, format_polynomial, leading_term, monic, mul, sandwich, scalar_mul, zero,
)
from .rewriting import (
    Rule, RewriteSystem, Status, empty_system, is_congruent, is_irreducible, normal_form, reduce_once,
)
from .completion import (
    CompletionReport, Limits, Match, MatchKind, buchberger, find_matches, interreduce, is_groebner,
    s_polynomial,
)
from .nfenum import Finite, HomSet, Infinite, finiteness, hom_table, irreducible_terms
from .kan import (
    KanExtensionResult, KanPresentation, MixedSystem, TaggedTerm, act, build_system, complete_mixed,
    congruent_mod_right, kan_extension,
)
from .textio import parse_path, parse_polynomial
from .presentation import (
    PresentationFile, dump_basis, format_presentation, load_basis, parse_presentation,
)

__version__ = "0.1.0"
