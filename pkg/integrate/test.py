"""End-to-end tests for the `metricgap` command-line tool.

Each test runs the whole CLI in-process, exactly as the console script
does, and checks the exit code and the JSON it prints.
"""

from io import StringIO
import json
import sys

from fixtures import EnvironmentVariable
from testtools.matchers import Contains, Equals, LessThan

from metricgap import flesh
from metricgap.enum import ExitCode
from metricgap.testing import TestCase


def rational(num, den=1):
    return {"num": str(num), "den": str(den)}


class CLITestCase(TestCase):
    def setUp(self):
        super(CLITestCase, self).setUp()
        missing = self.makeDir() / "metricgap.yaml"
        self.useFixture(EnvironmentVariable("METRIC_GAP_CONFIG", str(missing)))
        self.useFixture(EnvironmentVariable("METRIC_GAP_BUDGET"))
        self.useFixture(EnvironmentVariable("METRIC_GAP_WORKERS"))

    def metricgap(self, *arguments):
        """Run the CLI; return ``(exit code, stdout, stderr)``."""
        stdout = self.patch(sys, "stdout", StringIO())
        stderr = self.patch(sys, "stderr", StringIO())
        try:
            code = flesh.main(["metricgap", *arguments])
        except SystemExit as error:
            code = error.code
        return code, stdout.getvalue(), stderr.getvalue()

    def table(self, *arguments, line=0):
        """Run a tabular command with ``--format json``; return one table."""
        code, stdout, _ = self.metricgap(*arguments, "--format", "json")
        self.assertThat(code, Equals(ExitCode.PASS))
        tables = [text for text in stdout.splitlines() if text.startswith("{")]
        return json.loads(tables[line])


class TestCompute(CLITestCase):
    def test_path_into_edge(self):
        code, stdout, _ = self.metricgap(
            "compute", "--g", "family:path:3", "--h", "family:complete:2"
        )
        self.assertThat(code, Equals(ExitCode.PASS))
        self.assertThat(
            json.loads(stdout),
            Equals(
                {
                    "g": "Bg",
                    "h": "family:complete:2",
                    "lambda": rational(4, 3),
                    "witness": [0, 0, 1],
                    "evaluated": 3,
                    "skipped": 0,
                }
            ),
        )

    def test_complete_graphs(self):
        for n in range(3, 9):
            for h in ("K2", "K3"):
                if h == "K3" and n > 6:
                    continue
                code, stdout, _ = self.metricgap(
                    "compute", "--g", "family:complete:%d" % n, "--h", h
                )
                self.assertThat(code, Equals(ExitCode.PASS))
                self.assertThat(
                    json.loads(stdout)["lambda"], Equals(rational(n, n - 1))
                )

    def test_identities(self):
        cases = [
            ("family:complete_multipartite:3:2", "K2", rational(1)),
            ("family:complete_multipartite:3:2", "K4", rational(1)),
            ("family:complete_multipartite:2:3", "K2", rational(1)),
            ("family:complete_multipartite:4:2", "K2", rational(1)),
            ("family:complete_multipartite:3:2", "K3", rational(1)),
            ('{"n": 5, "edges": [[0, 1], [0, 2], [1, 2], [3, 4]]}', "K2", rational(0)),
            ('{"n": 4, "edges": [[0, 1], [0, 2], [1, 2], [1, 3]]}', "K2", rational(1)),
        ]
        for g, h, value in cases:
            code, stdout, _ = self.metricgap("compute", "--g", g, "--h", h)
            self.assertThat(code, Equals(ExitCode.PASS))
            self.assertThat(json.loads(stdout)["lambda"], Equals(value))

    def test_same_side_edge(self):
        g = '{"n": 6, "edges": %s}' % json.dumps(
            [[u, v] for u in range(3) for v in range(3, 6)] + [[0, 1]]
        )
        code, stdout, _ = self.metricgap("compute", "--g", g, "--h", "K2")
        self.assertThat(code, Equals(ExitCode.PASS))
        output = json.loads(stdout)
        self.assertThat(output["g"], Equals("Efz_"))
        self.assertThat(output["lambda"], Equals(rational(20, 21)))

    def test_graph_without_edges(self):
        code, stdout, stderr = self.metricgap(
            "compute", "--g", "D??", "--h", "family:complete:2"
        )
        self.assertThat(code, Equals(ExitCode.UNDEFINED))
        self.assertThat(stdout, Equals(""))
        self.assertThat(stderr, Contains("Error:"))

    def test_unparseable_graph(self):
        code, _, _ = self.metricgap("compute", "--g", "B!", "--h", "K2")
        self.assertThat(code, Equals(ExitCode.INPUT_ERROR))

    def test_budget_from_the_environment(self):
        self.useFixture(EnvironmentVariable("METRIC_GAP_BUDGET", "10"))
        code, stdout, stderr = self.metricgap(
            "compute", "--g", "family:path:4", "--h", "K3"
        )
        self.assertThat(code, Equals(ExitCode.BUDGET))
        self.assertThat(
            json.loads(stdout),
            Equals(
                {
                    "g": "Ch",
                    "h": "K3",
                    "partial_upper_bound": rational(6, 5),
                    "witness": [0, 0, 0, 1],
                }
            ),
        )
        self.assertThat(stderr, Contains("Partial upper bound"))


class TestSpectrum(CLITestCase):
    def test_path(self):
        code, stdout, _ = self.metricgap("spectrum", "--g", "family:path:3")
        self.assertThat(code, Equals(ExitCode.PASS))
        output = json.loads(stdout)
        self.assertThat(abs(output["lambda1"] - 1), LessThan(1e-9))
        self.assertThat(output["trace_error"], LessThan(1e-8))


class TestVerify(CLITestCase):
    def test_exhaustive_sweep(self):
        summary = self.table(
            "verify", "--exhaustive", "5", "--h", "K2,K3,P3,C4,K4", "--samples", "200"
        )
        self.assertThat(summary["failed"], Equals(0))

    def test_worked_families_by_alias(self):
        summary = self.table("verify", "--families", "paper", "--h", "K2")
        self.assertThat(summary["failed"], Equals(0))

    def test_random_corpus(self):
        summary = self.table(
            "verify", "--random", "7", "200", "0.5", "--seed", "7", "--h", "K2"
        )
        self.assertThat(summary["failed"], Equals(0))

    def test_reports_are_deterministic(self):
        outputs = []
        for workers in ("1", "2"):
            prefix = self.makeDir() / "report"
            self.metricgap(
                "verify", "--exhaustive", "4", "--h", "K2,P3",
                "--workers", workers, "--output", str(prefix),
            )
            report = json.loads(prefix.with_name("report.json").read_text())
            for record in report["records"]:
                del record["runtime"]
            outputs.append(report)
        self.assertThat(outputs[0], Equals(outputs[1]))


class TestSearchMonotonic(CLITestCase):
    def test_same_side_edges_lower_the_gap(self):
        witnesses = self.table(
            "search-monotonic",
            "--g",
            "family:complete_multipartite:3:2",
            "--operations",
            "edge",
        )["data"]
        self.assertThat(len(witnesses), Equals(6))
        self.assertThat({w["direction"] for w in witnesses}, Equals({"decrease"}))

    def test_apex_raises_the_gap(self):
        (witness,) = self.table(
            "search-monotonic",
            "--g",
            "family:complete_multipartite:2:2",
            "--operations",
            "apex",
        )["data"]
        self.assertThat(witness["direction"], Equals("increase"))

    def test_chain_finds_an_increase(self):
        (witness,) = self.table(
            "search-monotonic", "--chain", "3", "--operations", "edge", line=-1
        )["data"]
        self.assertThat(witness["direction"], Equals("increase"))

    def test_target_triple(self):
        witnesses = self.table(
            "search-monotonic",
            "--g",
            "family:complete_multipartite:3:2",
            "--h",
            "K2,K4e,K4",
            "--operations",
            "target",
        )["data"]
        directions = {(w["before"], w["after"]): w["direction"] for w in witnesses}
        self.assertThat(directions[("K2", "K4e")], Equals("decrease"))
        self.assertThat(directions[("K4e", "K4")], Equals("increase"))


class TestEmbed(CLITestCase):
    def test_edge(self):
        code, stdout, _ = self.metricgap(
            "embed", "--x", "family:complete:2", "--seed", "0"
        )
        self.assertThat(code, Equals(ExitCode.PASS))
        self.assertThat(json.loads(stdout)["K"], Equals(1))

    def test_line_projection(self):
        code, stdout, _ = self.metricgap(
            "embed", "--x", "family:cycle:6", "--seed", "3"
        )
        self.assertThat(code, Equals(ExitCode.PASS))
        output = json.loads(stdout)
        line = output["line"]
        self.assertThat(line["points"], Equals([sum(p) for p in output["points"]]))
        self.assertTrue(line["holds"])
        self.assertTrue(0 <= line["min_slack"] <= line["max_slack"])

    def test_expansion_is_at_most_the_dimension(self):
        _, stdout, _ = self.metricgap("embed", "--x", "family:cycle:8", "--seed", "1")
        output = json.loads(stdout)
        expansion = output["distortion"]["expansion"]
        self.assertTrue(int(expansion["num"]) <= output["K"] * int(expansion["den"]))

    def test_summary(self):
        _, stdout, _ = self.metricgap("embed", "--x", "family:path:8", "--seeds", "32")
        self.assertThat(json.loads(stdout)["seeds"], Equals([0, 31]))

    def test_disconnected(self):
        code, _, _ = self.metricgap("embed", "--x", "D??")
        self.assertThat(code, Equals(ExitCode.INPUT_ERROR))


class TestExamples(CLITestCase):
    def test_every_example_matches(self):
        rows = self.table("examples")["data"]
        self.assertThat([row["name"] for row in rows if not row["match"]], Equals([]))
        computed = {row["name"]: row["computed"] for row in rows}
        self.assertThat(computed["dumbbell_6_cut"], Equals(rational(2, 7)))

    def test_rows_are_exact(self):
        rows = {row["name"]: row for row in self.table("examples")["data"]}
        self.assertThat(
            rows["dumbbell_6_cut"],
            Equals(
                {
                    "name": "dumbbell_6_cut",
                    "expected": "= 2/7",
                    "computed": rational(2, 7),
                    "match": True,
                }
            ),
        )
        self.assertThat(
            rows["same_side_edge_3"],
            Equals(
                {
                    "name": "same_side_edge_3",
                    "expected": "= 20/21",
                    "computed": rational(20, 21),
                    "match": True,
                }
            ),
        )
        self.assertThat(
            rows["regular_supergraph_4_witness"],
            Equals(
                {
                    "name": "regular_supergraph_4_witness",
                    "expected": "= 4/5",
                    "computed": rational(4, 5),
                    "match": True,
                }
            ),
        )
