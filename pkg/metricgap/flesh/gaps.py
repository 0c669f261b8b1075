"""Commands for single gap computations."""

__all__ = ["register"]

import sys

from . import GapCommand, print_json, report_error
from ..enum import ExitCode
from ..errors import BudgetExceeded
from ..exact_gap import lambda_exact
from ..harness.corpus import graph_label, read_graph
from ..spectral import lambda_R
from ..utils import fraction_to_json


class cmd_compute(GapCommand):
    """Compute lambda(G, H) exactly.

    Every nonconstant assignment of the vertices of G to the vertices of H is
    scanned and the smallest quotient is printed as an exact rational,
    together with the lexicographically smallest assignment attaining it.
    When the assignment space is larger than the budget, the best bound
    found without searching is printed and the command exits with 3.
    """

    def __init__(self, parser):
        super(cmd_compute, self).__init__(parser)
        parser.add_argument(
            "--g", required=True, metavar="GRAPH", help="The source graph G."
        )
        parser.add_argument(
            "--h", required=True, metavar="GRAPH", help="The target graph H."
        )
        parser.add_argument(
            "--no-prune",
            dest="prune",
            action="store_false",
            default=True,
            help=(
                "Scan every image of vertex 0 instead of one per orbit of "
                "the automorphisms of H. The answer is the same."
            ),
        )

    def __call__(self, options):
        g, h = read_graph(options.g), read_graph(options.h)
        settings = self.settings(options)
        document = {"g": graph_label(g), "h": options.h}
        try:
            result = lambda_exact(g, h, settings, prune=options.prune)
        except BudgetExceeded as error:
            document["partial_upper_bound"] = fraction_to_json(
                error.partial_upper_bound
            )
            document["witness"] = None if error.witness is None else list(error.witness)
            print_json(document)
            report_error(error)
            return ExitCode.BUDGET
        document["lambda"] = fraction_to_json(result.value)
        document["witness"] = list(result.witness)
        document["evaluated"] = result.assignments_evaluated
        document["skipped"] = result.assignments_skipped_zero_denominator
        print_json(document)
        return ExitCode.PASS


class cmd_spectrum(GapCommand):
    """Show the normalized Laplacian spectrum of a graph.

    Eigenvalues come from cyclic Jacobi rotations. The trace check compares
    their sum with the number of vertices of positive degree.
    """

    def __init__(self, parser):
        super(cmd_spectrum, self).__init__(parser)
        parser.add_argument(
            "--g", required=True, metavar="GRAPH", help="The graph to analyse."
        )

    def __call__(self, options):
        g = read_graph(options.g)
        tolerance = self.settings(options).tolerance
        result = lambda_R(g)
        trace = sum(1 for degree in g.degrees if degree > 0)
        error = abs(sum(result.eigenvalues) - trace)
        print_json(
            {
                "g": graph_label(g),
                "eigenvalues": list(result.eigenvalues),
                "lambda1": result.lambda1,
                "residual": result.residual,
                "trace": trace,
                "trace_error": error,
            }
        )
        if error > tolerance * max(1, g.n) or result.residual > tolerance:
            print("Spectrum fails its trace or residual check.", file=sys.stderr)
            return ExitCode.CHECK_FAILURE
        return ExitCode.PASS


def register(parser):
    """Register commands with the given parser."""
    cmd_compute.register(parser)
    cmd_spectrum.register(parser)
