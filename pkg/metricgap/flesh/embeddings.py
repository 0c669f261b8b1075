"""Commands for embedding graph metrics."""

__all__ = ["register"]

from fractions import Fraction
import math

from . import Command, print_json
from ..embedding import (
    bourgain_embed,
    distortion,
    distortion_summary,
    project_line,
    projection_slack,
)
from ..enum import ExitCode
from ..errors import PreconditionError
from ..graph_core import apsp
from ..harness.corpus import graph_label, read_graph
from ..utils import fraction_to_json
from ..utils.settings import load_settings


def _number(value):
    """JSON for a stretch: exact rationals as num/den, infinity as a string."""
    if isinstance(value, (int, Fraction)):
        return fraction_to_json(value)
    if math.isinf(value):
        return "inf"
    return value


class cmd_embed(Command):
    """Embed the shortest-path metric of a graph and measure its distortion.

    Coordinates are distances to random vertex subsets drawn at every scale,
    so each coordinate is 1-Lipschitz. The worst-pair expansion and
    contraction are reported in the l1 norm and after projecting to a line;
    the projected values are listed with the least and greatest amount by
    which the projection shrinks a pair.

    With --seeds N the embedding is drawn for N consecutive seeds and only
    the minimum, median and maximum distortion are printed.
    """

    def __init__(self, parser):
        super(cmd_embed, self).__init__(parser)
        parser.add_argument(
            "--x",
            required=True,
            metavar="GRAPH",
            help="The connected graph whose metric is embedded.",
        )
        seeds = parser.add_mutually_exclusive_group()
        seeds.add_argument(
            "--seed",
            type=int,
            default=None,
            metavar="N",
            help="Seed of the random subsets. Default: the configured seed.",
        )
        seeds.add_argument(
            "--seeds",
            type=int,
            default=None,
            metavar="N",
            help=(
                "Summarise the distortion over N seeds, starting at the "
                "configured seed."
            ),
        )

    def __call__(self, options):
        x = read_graph(options.x)
        dist = apsp(x)
        if x.n < 2 or not dist.is_connected():
            raise PreconditionError(
                "Only connected graphs on two or more vertices embed.", x
            )
        seed = load_settings().replace(seed=options.seed).seed
        document = {"x": graph_label(x), "k": dist.k}
        if options.seeds is not None:
            if options.seeds < 1:
                self.parser.error("--seeds needs a positive count.")
            summary = distortion_summary(dist, range(seed, seed + options.seeds))
            document["seeds"] = [seed, seed + options.seeds - 1]
            document["summary"] = {
                field: {name: _number(value) for name, value in stats.items()}
                for field, stats in summary.items()
            }
        else:
            embedding = bourgain_embed(dist, seed)
            report = distortion(dist, embedding)
            document["seed"] = seed
            document["K"] = embedding.K
            document["scales"] = embedding.scales
            document["reps"] = embedding.reps
            document["points"] = embedding.points.tolist()
            least, greatest = projection_slack(embedding)
            document["line"] = {
                "points": project_line(embedding).tolist(),
                "holds": least >= 0,
                "min_slack": least,
                "max_slack": greatest,
            }
            document["distortion"] = {
                field: _number(value) for field, value in report._asdict().items()
            }
        print_json(document)
        return ExitCode.PASS


def register(parser):
    """Register commands with the given parser."""
    cmd_embed.register(parser)
