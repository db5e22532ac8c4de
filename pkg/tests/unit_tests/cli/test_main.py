import json
import os

import pytest

from cli import CliConfig, main, run
from cli.commands import (
    EXECUTORS,
    EXIT_INCONSISTENT,
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
    EXIT_POSITIVE,
)
from cli.main import build_parser
from common.errors import InternalInconsistencyError
from fixtures import GRAPHS_PATH, read_graph_file


def _run_json(command: str, fixture: str, **kwargs) -> tuple[int, dict]:
    fmt = "edgelist" if fixture.endswith(".edgelist") else "json"
    config = CliConfig(command=command, format=fmt, output="json", **kwargs)
    code, output = run(config, read_graph_file(fixture))
    return code, json.loads(output)


class TestDecide:
    """Tests for the decide command."""

    def test_diamond(self):
        """The diamond is uniquely orderable."""
        code, payload = _run_json("decide", "diamond.json")

        assert code == EXIT_POSITIVE
        assert payload == {"unique": True, "order": [["a", "c"]], "wq_components": 2}

    def test_star_reports_the_buried_subgraph(self):
        """The star prints its buried subgraph and two orders."""
        code, payload = _run_json("decide", "star3.edgelist")

        assert code == EXIT_NEGATIVE
        assert payload["unique"] is False
        assert payload["buried"] == {"B": [1, 2], "K": [0], "R": [3]}
        assert payload["witness"]["triple"] == [1, 2, 3]
        assert payload["wq_components"] == 6

    def test_non_interval_graph_is_an_input_error(self):
        """The obstruction still comes out."""
        code, payload = _run_json("decide", "net.json")

        assert code == EXIT_INPUT_ERROR
        assert payload["error"] == "graph is not an interval graph"
        assert payload["obstruction"]["triple"] == ["x", "y", "z"]


class TestRecognize:
    """Tests for the recognize command."""

    def test_diamond(self):
        """A representation and its order."""
        code, payload = _run_json("recognize", "diamond.json")

        assert code == EXIT_POSITIVE
        assert payload["interval"] is True
        assert payload["representation"] == {
            "n": 4,
            "intervals": [[0, 0], [0, 1], [1, 1], [0, 1]],
        }
        assert payload["order"] == [["a", "c"]]

    def test_net_is_negative(self):
        """An asteroidal triple with labels."""
        code, payload = _run_json("recognize", "net.json")

        assert code == EXIT_NEGATIVE
        assert payload["interval"] is False
        assert payload["obstruction"]["kind"] == "asteroidal_triple"
        assert payload["obstruction"]["triple"] == ["x", "y", "z"]


class TestBuriedAndWQ:
    """Tests for the buried and wq commands."""

    def test_buried_search_and_single_pair(self):
        """The search finds the star's pair; P4's B(0, 2) has nothing outside."""
        code, payload = _run_json("buried", "star3.edgelist")
        assert code == EXIT_POSITIVE
        assert payload["buried"]["witness_nonedge"] == [1, 2]
        assert payload["buried"]["witness_outside"] == 3

        code, payload = _run_json("buried", "p4.edgelist", pair=(0, 2))
        assert code == EXIT_NEGATIVE
        assert payload["leveled"]["levels"] == {"0": 0, "1": 2, "2": 0, "3": 1}
        assert payload["reason"] == "R(B) is empty"

    def test_buried_pair_must_be_non_adjacent(self):
        """An edge is not a generating pair."""
        config = CliConfig(command="buried", format="edgelist", pair=(0, 1))

        assert run(config, read_graph_file("p4.edgelist")) == (EXIT_INPUT_ERROR, b"")

    def test_wq_with_a_q_path(self):
        """Components and the path between two pairs."""
        code, payload = _run_json("wq", "p4.edgelist", pair=(0, 2), target=(1, 3))

        assert code == EXIT_POSITIVE
        assert payload == {
            "pairs": 6,
            "component_count": 2,
            "components": [[[0, 2], [0, 3], [1, 3]], [[2, 0], [3, 0], [3, 1]]],
            "path": [[0, 2], [1, 3]],
        }


class TestOrdersAndGadget:
    """Tests for the orders and gadget commands."""

    def test_orders_stops_at_three_unless_enumerating(self):
        """Three orders are enough to show non-uniqueness."""
        code, payload = _run_json("orders", "star3.edgelist")
        assert code == EXIT_NEGATIVE
        assert payload["count"] == 3
        assert payload["truncated"] is True

        code, payload = _run_json("orders", "star3.edgelist", enumerate=True)
        assert payload["count"] == 6
        assert payload["dual_classes"] == 3
        assert payload["unique"] is False

    def test_orders_unique(self):
        """P4 has one order and its dual."""
        code, payload = _run_json("orders", "p4.edgelist")

        assert code == EXIT_POSITIVE
        assert payload["unique"] is True
        assert payload["count"] == 2

    def test_gadget(self):
        """The gadget prints its predicted sets by label."""
        config = CliConfig(command="gadget", output="json", f=(2, 0, 1))
        code, output = run(config, b"")
        payload = json.loads(output)

        assert code == EXIT_POSITIVE
        assert payload["stages"] == 3
        assert payload["graph"]["n"] == 10
        assert payload["predicted_B"] == ["a", "b", "x0", "y0", "y1", "y2"]
        assert payload["predicted_K"] == ["k", "x1", "x2"]

    @pytest.mark.slow
    def test_selftest_passes(self):
        """Every corpus passes with a small sample."""
        config = CliConfig(command="selftest", output="json", selftest_samples=5, max_n=9)
        code, output = run(config, b"")
        report = json.loads(output)

        assert code == EXIT_POSITIVE
        assert report["failures"] == []
        assert set(report["corpora"]) == {"named", "atlas", "random", "gadgets"}


class TestRun:
    """Tests for run: exit codes and output."""

    @pytest.mark.parametrize(
        "data, fmt",
        [
            (b'{"n": 2, "edges": [[0, 2]]}', "json"),
            (b"not json", "json"),
            (b"3\n0 x\n", "edgelist"),
            (b"\xff\xfe", "json"),
        ],
    )
    def test_malformed_input_exits_with_no_output(self, data, fmt):
        """Unreadable graphs exit with 2."""
        config = CliConfig(command="decide", format=fmt)

        assert run(config, data) == (EXIT_INPUT_ERROR, b"")

    def test_inconsistency_exits_with_three(self, monkeypatch):
        """Disagreeing criteria exit with 3."""

        def broken(config, g):
            raise InternalInconsistencyError("criteria disagree")

        monkeypatch.setitem(EXECUTORS, "decide", broken)

        assert run(CliConfig(command="decide"), read_graph_file("diamond.json")) == (
            EXIT_INCONSISTENT,
            b"",
        )

    def test_text_output_leads_with_the_headline(self):
        """Text output opens with the verdict."""
        code, output = run(CliConfig(command="decide"), read_graph_file("diamond.json"))
        text = output.decode("utf-8")

        assert code == EXIT_POSITIVE
        assert "uniquely orderable" in text.splitlines()[0]
        assert "wq_components" in text

    def test_output_is_deterministic(self):
        """Two runs print the same bytes."""
        config = CliConfig(command="decide", format="edgelist", output="json")
        data = read_graph_file("star3.edgelist")

        assert run(config, data) == run(config, data)


class TestMain:
    """Tests for the parser and main."""

    def test_parser_reads_subcommand_options(self):
        """Pairs parse from comma-separated vertices."""
        args = build_parser().parse_args(
            ["wq", "--json", "--from", "0,2", "--to", "1,3", "g.json"]
        )

        assert args.command == "wq"
        assert args.output == "json"
        assert args.pair == (0, 2)
        assert args.target == (1, 3)
        assert args.input == "g.json"

    def test_parser_rejects_a_malformed_pair(self):
        """Pairs need a comma."""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["buried", "--pair", "0-2"])

    def test_main_reads_a_file(self, capsys):
        """A path argument is read from disk."""
        path = os.path.join(GRAPHS_PATH, "diamond.json")

        code = main(["decide", "--json", path])

        assert code == EXIT_POSITIVE
        assert json.loads(capsys.readouterr().out)["order"] == [["a", "c"]]

    def test_main_missing_file(self):
        """A missing file is an input error."""
        assert main(["decide", os.path.join(GRAPHS_PATH, "missing.json")]) == EXIT_INPUT_ERROR

    def test_main_rejects_half_a_q_path(self):
        """--from needs --to."""
        path = os.path.join(GRAPHS_PATH, "p4.edgelist")

        assert main(["wq", "--format", "edgelist", "--from", "0,2", path]) == EXIT_INPUT_ERROR
