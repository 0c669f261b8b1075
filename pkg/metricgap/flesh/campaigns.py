"""Commands for verification campaigns and the worked examples."""

__all__ = ["CorpusCommand", "register", "split_names"]

from . import colorized, GapCommand, TableCommand, tables
from .. import utils
from ..enum import ExitCode
from ..harness import example_rows, run_verify
from ..harness.corpus import CorpusSpec, FAMILY_LISTS, parse_h_list


def split_names(text):
    return [name.strip() for name in text.split(",") if name.strip()]


class CorpusCommand(GapCommand, TableCommand):
    """A command that runs over a corpus of graphs into a list of targets."""

    corpus_required = True

    def __init__(self, parser):
        super(CorpusCommand, self).__init__(parser)
        corpus = parser.add_argument_group("corpus")
        modes = corpus.add_mutually_exclusive_group(required=self.corpus_required)
        modes.add_argument(
            "--exhaustive",
            type=int,
            metavar="N",
            help="Every labeled graph on 2 to N vertices (N at most 6).",
        )
        modes.add_argument(
            "--families",
            metavar="NAMES",
            help=(
                "Comma-separated family specs such as cycle:5, or the lists "
                "%s." % ", ".join(sorted(FAMILY_LISTS))
            ),
        )
        modes.add_argument(
            "--random",
            nargs=3,
            metavar=("N", "COUNT", "P"),
            help="COUNT random graphs on N vertices with edge probability P.",
        )
        corpus.add_argument(
            "--h",
            default="K2",
            metavar="GRAPHS",
            help="Comma-separated target graphs. Default: %(default)s.",
        )
        corpus.add_argument(
            "--all-graphs",
            dest="connected",
            action="store_false",
            default=True,
            help="Keep disconnected graphs in exhaustive and random corpora.",
        )
        self.parser.add_argument_group("settings").add_argument(
            "--seed",
            type=int,
            default=None,
            metavar="N",
            help="Seed for random corpora.",
        )

    def settings(self, options, **updates):
        return super(CorpusCommand, self).settings(
            options, seed=options.seed, **updates
        )

    def corpus(self, options, settings):
        """The `CorpusSpec` the options describe, or `None` if none is given."""
        h_list = parse_h_list(options.h)
        if options.exhaustive is not None:
            return CorpusSpec(
                "exhaustive", (options.exhaustive,), h_list, options.connected
            )
        elif options.families is not None:
            return CorpusSpec("families", split_names(options.families), h_list)
        elif options.random is not None:
            n, count, edge_prob = options.random
            try:
                params = (int(n), int(count), float(edge_prob), settings.seed)
            except ValueError:
                self.parser.error(
                    "--random expects N COUNT P, got %s." % " ".join(options.random)
                )
            return CorpusSpec("random", params, h_list, options.connected)
        else:
            return None


class cmd_verify(CorpusCommand):
    """Check every bound and identity over a corpus of graphs.

    Each graph is checked against each target: the extremes of the gap, the
    classical comparison, every lower and upper bound whose hypotheses hold,
    the denominator bounds on sampled assignments, and the complete-graph
    chain. With --families the family-level identities run as well. The
    command exits with 1 if any check fails.
    """

    def __init__(self, parser):
        super(cmd_verify, self).__init__(parser)
        parser.add_argument(
            "--samples",
            type=int,
            default=1000,
            metavar="N",
            help="Random assignments per pair for the denominator checks.",
        )
        parser.add_argument(
            "--chain-budget",
            type=int,
            default=10 ** 6,
            metavar="N",
            help=(
                "Largest assignment space for the complete-graph chain and "
                "comparisons. Default: %(default)s."
            ),
        )
        parser.add_argument(
            "--output",
            metavar="PREFIX",
            help="Write the report to PREFIX.json and PREFIX.csv.",
        )
        parser.other.add_argument(
            "--records",
            action="store_true",
            default=False,
            help="List every record, not only the failures.",
        )

    def __call__(self, options):
        settings = self.settings(options)
        spec = self.corpus(options, settings)
        with utils.Spinner() as context:
            verifying = colorized("{automagenta}Verifying{/automagenta} %r")
            context.msg = verifying % (spec,)
            report = run_verify(
                spec,
                settings,
                samples=options.samples,
                chain_budget=options.chain_budget,
            )
        if options.output:
            json_path, csv_path = report.write(options.output)
            wrote = colorized("{autoblue}Wrote{/autoblue} %s, %s")
            print(wrote % (json_path, csv_path))
        print(tables.CampaignSummaryTable().render(options.format, report))
        shown = report.records if options.records else report.failed
        if shown:
            print(tables.CampaignRecordsTable().render(options.format, shown))
        return report.exit_code


class cmd_examples(GapCommand, TableCommand):
    """Recompute every worked example and compare with its documented value.

    The command exits with 1 if any row does not match.
    """

    def __call__(self, options):
        with utils.Spinner() as context:
            context.msg = colorized("{automagenta}Recomputing{/automagenta} examples")
            rows = example_rows(self.settings(options))
        print(tables.ExamplesTable().render(options.format, rows))
        if all(row.match for row in rows):
            return ExitCode.PASS
        return ExitCode.CHECK_FAILURE


def register(parser):
    """Register commands with the given parser."""
    cmd_verify.register(parser)
    cmd_examples.register(parser)
