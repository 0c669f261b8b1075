"""Commands for non-monotonicity searches."""

__all__ = ["register"]

from . import colorized, tables
from .. import utils
from ..bounds import make_gap
from ..enum import ExitCode
from ..graph_core.families import complete, complete_multipartite
from ..harness import edge_chain, search_monotonic
from ..harness.corpus import parse_h_list, read_graph
from ..harness.searches import OPERATIONS
from .campaigns import split_names, CorpusCommand


class cmd_search_monotonic(CorpusCommand):
    """Find graphs where the gap is not monotone.

    Three operations are scanned: adding an edge to G, adding a vertex
    adjacent to every vertex of G, and enlarging the target H to a graph
    that contains it. Every strict increase or decrease is listed with the
    exact values before and after.

    With --chain N the edges of K_2N missing from K_N,N are added one at a
    time and the gap after each step is shown.
    """

    corpus_required = False

    def __init__(self, parser):
        super(cmd_search_monotonic, self).__init__(parser)
        parser.add_argument(
            "--g",
            action="append",
            default=[],
            metavar="GRAPH",
            help="A source graph to scan; may be repeated.",
        )
        parser.add_argument(
            "--operations",
            default=",".join(OPERATIONS),
            metavar="NAMES",
            help="Comma-separated operations to scan. Default: %(default)s.",
        )
        parser.add_argument(
            "--chain",
            type=int,
            metavar="N",
            help="Add the edges of K_2N to K_N,N one at a time.",
        )

    def __call__(self, options):
        settings = self.settings(options)
        spec = self.corpus(options, settings)
        graphs = [read_graph(text) for text in options.g]
        if spec is not None:
            graphs.extend(spec.graphs())
        if not graphs and options.chain is None:
            self.parser.error("Give a corpus, --g or --chain.")
        h_list = spec.h_list if spec is not None else parse_h_list(options.h)
        gap = make_gap(settings)
        with utils.Spinner() as context:
            context.msg = colorized("{automagenta}Searching{/automagenta}")
            witnesses = search_monotonic(
                graphs, h_list, split_names(options.operations), gap=gap
            )
            chains = []
            if options.chain is not None:
                start = complete_multipartite(options.chain, 2)
                target = complete(2 * options.chain)
                for label, h in h_list:
                    steps, first = edge_chain(start, target, h, label, gap=gap)
                    chains.append((label, steps))
                    if first is not None:
                        witnesses.append(first)
        for label, steps in chains:
            print(colorized("{autoblue}Chain into{/autoblue} %s") % label)
            print(tables.ChainTable().render(options.format, steps))
        print(tables.WitnessesTable().render(options.format, witnesses))
        return ExitCode.PASS


def register(parser):
    """Register commands with the given parser."""
    cmd_search_monotonic.register(parser)
