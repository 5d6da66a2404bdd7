"""Paths, descents and descent polynomials on the hook-partition Bratteli diagram for an odd prime p."""

from .core import Block, HookPartition, IncomparableError, IndexSplit, add_block, dominates, j_number, remove_block, split_base_p
from .diagram import DiagramParams, Edge, InvalidPrimeError, VertexLabel, edges_between, predecessors, vertices_on_floor
from .eulerian import FloorPolynomials, eulerian_bruteforce, eulerian_dp, eulerian_inductive, initial_closed_form
from .fibonacci import (
    FibTable,
    IntervalClass,
    derivative_identity_check,
    fib_bruteforce,
    fib_closed_form,
    fib_recursive,
    interval_classes,
)
from .genfun import RationalSeries, genfun_for_class, recurrence_check, series_coefficients
from .paths import BlockAt, Path, blocks_of, count_paths, enumerate_paths
from .poly import IntPolynomial
from .stats import (
    DescentProfile,
    block_greater,
    descent_set,
    inversion_set,
    predicted_descents_general,
    predicted_descents_special,
    sign_balance,
)

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockAt",
    "DescentProfile",
    "DiagramParams",
    "Edge",
    "FibTable",
    "FloorPolynomials",
    "HookPartition",
    "IncomparableError",
    "IndexSplit",
    "IntPolynomial",
    "IntervalClass",
    "InvalidPrimeError",
    "Path",
    "RationalSeries",
    "VertexLabel",
    "add_block",
    "block_greater",
    "blocks_of",
    "count_paths",
    "derivative_identity_check",
    "descent_set",
    "dominates",
    "edges_between",
    "enumerate_paths",
    "eulerian_bruteforce",
    "eulerian_dp",
    "eulerian_inductive",
    "fib_bruteforce",
    "fib_closed_form",
    "fib_recursive",
    "genfun_for_class",
    "initial_closed_form",
    "interval_classes",
    "inversion_set",
    "j_number",
    "predecessors",
    "predicted_descents_general",
    "predicted_descents_special",
    "recurrence_check",
    "remove_block",
    "series_coefficients",
    "sign_balance",
    "split_base_p",
    "vertices_on_floor",
]
