import pytest

from negseq.cli import run
from conftest import ABSENCE_TEXT, FIG1_TEXT, TABLE1_TEXT


@pytest.fixture
def table1_path(tmp_path):
    path = tmp_path / "table1.db"
    path.write_text(TABLE1_TEXT)
    return str(path)


@pytest.fixture
def absence_path(tmp_path):
    path = tmp_path / "absence.db"
    path.write_text(ABSENCE_TEXT)
    return str(path)


@pytest.fixture
def fig1_path(tmp_path):
    path = tmp_path / "fig1.db"
    path.write_text(FIG1_TEXT)
    return str(path)


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSupportCommand:
    def test_single_theta(self, capsys, table1_path):
        code, out, _ = invoke(
            capsys, "support", "--db", table1_path,
            "--pattern", "<b !(c d) a>", "--theta", "weak-strict-total",
        )
        assert code == 0
        assert out == "2\n"

    def test_all_thetas_row(self, capsys, table1_path):
        code, out, _ = invoke(
            capsys, "support", "--db", table1_path,
            "--pattern", "<b !(c d) a>", "--all-thetas",
        )
        assert code == 0
        header, row = out.strip().splitlines()
        assert header.split(",")[0] == "strong-strict-partial"
        assert row == "4,4,4,4,2,2,2,2"

    def test_unknown_theta_is_usage_error(self, capsys, table1_path):
        code, _, err = invoke(
            capsys, "support", "--db", table1_path,
            "--pattern", "<a>", "--theta", "sideways-strict-total",
        )
        assert code == 2
        assert "error" in err

    def test_pattern_parse_error(self, capsys, table1_path):
        code, _, err = invoke(
            capsys, "support", "--db", table1_path,
            "--pattern", "<a !b>", "--theta", "weak-strict-total",
        )
        assert code == 2
        assert "negative" in err

    def test_missing_file(self, capsys):
        code, _, err = invoke(
            capsys, "support", "--db", "/nonexistent/x.db",
            "--pattern", "<a>", "--theta", "weak-strict-total",
        )
        assert code == 2

    def test_missing_required_argument(self, capsys, table1_path):
        code, _, _ = invoke(capsys, "support", "--db", table1_path, "--theta", "weak-soft-total")
        assert code == 2


class TestMatchCommand:
    def test_explain_columns(self, capsys, table1_path):
        code, out, _ = invoke(
            capsys, "match", "--db", table1_path,
            "--pattern", "<b !(c d) a>", "--theta", "weak-strict-total", "--explain",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "seq,contained,detail"
        assert lines[1] == "1,true,witness=(1 3)"
        assert lines[2] == "2,false,violator=(1 3)"

    def test_all_thetas_matrix(self, capsys, absence_path):
        code, out, _ = invoke(
            capsys, "match", "--db", absence_path,
            "--pattern", "<a !(b c) d>", "--all-thetas",
        )
        assert code == 0
        lines = out.strip().splitlines()
        header = lines[0].split(",")
        assert header[0] == "seq"
        rows = [line.split(",") for line in lines[1:]]
        matrix = {row[0]: row[1:] for row in rows}
        # Columns follow the canonical order; weak-soft-partial is last of the
        # partial block, the totals close the row.
        assert matrix["1"] == ["false", "false", "true", "true", "false", "false", "false", "false"]
        assert matrix["2"] == ["false"] * 8
        assert matrix["3"] == ["true", "true", "true", "true", "false", "false", "false", "false"]
        assert matrix["4"] == ["true"] * 8

    def test_no_embedding_detail(self, capsys, tmp_path):
        path = tmp_path / "one.db"
        path.write_text("b\n")
        code, out, _ = invoke(
            capsys, "match", "--db", str(path),
            "--pattern", "<b a>", "--theta", "weak-soft-total", "--explain",
        )
        assert code == 0
        assert out.strip().splitlines()[1] == "1,false,no-positive-embedding"


class TestMineCommand:
    def test_engines_agree_on_stdout(self, capsys, fig1_path):
        args = (
            "mine", "--db", fig1_path, "--theta", "weak-strict-total",
            "--minsup", "3", "--max-positives", "2", "--max-itemset-size", "1",
            "--max-neg-size", "1",
        )
        code1, out1, err1 = invoke(capsys, *args, "--engine", "pruned")
        code2, out2, err2 = invoke(capsys, *args, "--engine", "bruteforce")
        assert code1 == code2 == 0
        assert out1 == out2
        assert "pruned_subtrees" in err1
        assert out1.splitlines()[0] == "pattern,support"

    def test_contains_rule_pattern(self, capsys, fig1_path):
        code, out, _ = invoke(
            capsys, "mine", "--db", fig1_path, "--theta", "weak-strict-total",
            "--minsup", "3", "--max-positives", "3", "--max-itemset-size", "1",
            "--max-neg-size", "1",
        )
        assert code == 0
        assert "<a !b c d>,3" in out.splitlines()

    def test_pruned_rejects_partial(self, capsys, fig1_path):
        code, _, err = invoke(
            capsys, "mine", "--db", fig1_path, "--theta", "weak-soft-partial",
            "--minsup", "2",
        )
        assert code == 2
        assert "bruteforce" in err

    def test_bruteforce_accepts_partial(self, capsys, fig1_path):
        code, out, _ = invoke(
            capsys, "mine", "--db", fig1_path, "--theta", "weak-soft-partial",
            "--minsup", "6", "--engine", "bruteforce", "--max-positives", "1",
            "--max-itemset-size", "1", "--max-neg-size", "1",
        )
        assert code == 0
        assert "<a>,6" in out.splitlines()


class TestVerifyCommand:
    def test_dominance_suite_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "dominance")
        assert code == 0
        assert "0 violations" in out
        assert "counterexample" in out  # non-dominances come with witnesses

    def test_antimono_suite_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "antimono")
        assert code == 0
        assert "p=<b !c a> p'=<b !c d a> s=<b e d c a>" in out

    def test_equivalence_suite_reports_singleton_collapse(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "equivalence")
        assert code == 1
        assert "general space: 6 classes" in out
        assert "singleton-negative space: 2 classes" in out
        assert "VIOLATION" in out

    def test_lemmas_suite_passes(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "lemmas", "--draws", "500")
        assert code == 0
        assert "0 violations" in out

    def test_csv_format(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "antimono", "--format", "csv")
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "order,theta,expected,scan,p,p2,s"
        assert len(lines) == 25
        assert (
            "embed-incl,weak-soft-total,violation,refuted,"
            "<b !c a>,<b !c d a>,<b e d c a>" in lines
        )

    def test_lemmas_csv_format(self, capsys):
        code, out, _ = invoke(
            capsys, "verify", "--suite", "lemmas", "--draws", "300", "--format", "csv"
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[0] == "check,draws,failures,example"
        assert all(line.split(",")[2] == "0" for line in lines[1:])

    def test_dominance_text_includes_known_table(self, capsys):
        code, out, _ = invoke(capsys, "verify", "--suite", "dominance")
        assert code == 0
        assert "\nstrong-soft-total      >" in out


class TestReportCommand:
    def test_text_table_with_tool_tags(self, capsys, table1_path):
        code, out, _ = invoke(
            capsys, "report", "--db", table1_path,
            "--pattern", "<b !(c d) a>", "--pattern", "<b !c a>",
        )
        assert code == 0
        header = out.splitlines()[0]
        assert "strong-strict-total(eNSP)" in header
        assert "weak-strict-partial(PNSP)" in header
        assert "weak-strict-total(NegPSpan)" in header
        assert "weak-soft-total(NegGSP)" in header

    def test_csv_rows(self, capsys, table1_path):
        code, out, _ = invoke(
            capsys, "report", "--db", table1_path, "--format", "csv",
            "--pattern", "<b !(c d) a>",
        )
        assert code == 0
        lines = out.strip().splitlines()
        assert lines[1] == "<b !(c d) a>,4,4,4,4,2,2,2,2"


class TestDeterminism:
    def test_identical_runs_are_byte_identical(self, capsys, table1_path):
        args = ("report", "--db", table1_path, "--pattern", "<b !(c d e) a>")
        _, out1, err1 = invoke(capsys, *args)
        _, out2, err2 = invoke(capsys, *args)
        assert out1 == out2
        assert err1 == err2


class TestSpmfThroughCli:
    def test_support_on_spmf_database(self, capsys, tmp_path):
        path = tmp_path / "db.spmf"
        path.write_text("1 2 -1 3 -1 -2\n3 -1 1 -1 -2\n")
        code, out, _ = invoke(
            capsys, "support", "--db", str(path), "--db-format", "spmf",
            "--pattern", "<1 3>", "--theta", "weak-soft-total",
        )
        assert code == 0
        assert out == "1\n"
