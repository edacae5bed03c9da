import json
import subprocess
import sys

import pytest

from strongcocomp.certificates import parse_certificate, verify_weak_edge_asteroid
from strongcocomp.cli import emit_report, main
from strongcocomp.constructions import generate
from strongcocomp.graph_core import decode_graph, encode_graph
from strongcocomp.oracle import Report, crosscheck_enumerate


@pytest.fixture
def files(tmp_path):
    paths = {
        "k33.g": encode_graph(generate("complete_bipartite", p=3, q=3)),
        "p4.g": "4 3\n0 1\n1 2\n2 3\n",
        "c5.g": encode_graph(generate("cycle", n=5)),
        "twok2.bg": "2 2 2\n0 0\n1 1\n",
        "c5.sg": "5 5\n0 1\n1 2\n2 3\n3 4\n0 4\n",
        "big.g": encode_graph(generate("path", n=12)),
        "broken.g": "4 2\n0 1\n",
    }
    for name, text in paths.items():
        (tmp_path / name).write_text(text)
    return lambda name: str(tmp_path / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestRecognize:
    def test_k33(self, capsys, files):
        assert run(capsys, "recognize", "--class", "strong-cocomp", files("k33.g"))[:2] == (1, "NO\n")

    def test_k33_avoidance_route(self, capsys, files):
        assert run(capsys, "recognize", "--route", "avoidance", files("k33.g"))[:2] == (1, "NO\n")

    def test_k33_cocomp(self, capsys, files):
        assert run(capsys, "recognize", "--class", "cocomp", files("k33.g"))[:2] == (0, "YES\n")

    def test_c5_comparability(self, capsys, files):
        assert run(capsys, "recognize", "--class", "comparability", files("c5.sg"))[:2] == (1, "NO\n")

    def test_bigraph(self, capsys, files):
        assert run(capsys, "recognize", "--class", "cocomp-bigraph", files("twok2.bg"))[:2] == (0, "YES\n")

    def test_stdin(self, capsys, monkeypatch):
        import io

        monkeypatch.setattr(sys, "stdin", io.StringIO("4 3\n0 1\n1 2\n2 3\n"))
        assert run(capsys, "recognize", "-")[:2] == (0, "YES\n")


class TestCertify:
    def test_p4(self, capsys, files):
        code, out, _ = run(capsys, "certify", "--class", "strong-cocomp", files("p4.g"))
        assert code == 0
        assert out == "YES\nordering\n0 1 2 3\n"

    def test_k33(self, capsys, files):
        code, out, _ = run(capsys, "certify", files("k33.g"))
        assert code == 1
        verdict, block = out.split("\n", 1)
        assert verdict == "NO"
        w = parse_certificate(block)
        assert verify_weak_edge_asteroid(generate("complete_bipartite", p=3, q=3), w)

    def test_comparability_orientation(self, capsys, files):
        code, out, _ = run(capsys, "certify", "--class", "cocomp", files("p4.g"))
        assert code == 0 and out.startswith("YES\norientation\n")

    def test_no_certificate_note(self, capsys, files):
        code, out, err = run(capsys, "certify", "--class", "cocomp", files("c5.g"))
        assert (code, out) == (1, "NO\n") and "no certificate" in err

    def test_bigraph_pair(self, capsys, files):
        code, out, _ = run(capsys, "certify", "--class", "cocomp-bigraph", files("twok2.bg"))
        assert code == 0 and out.startswith("YES\nbigraph-ordering\n")


class TestConstruct:
    def test_h_plus_plus(self, capsys, files):
        code, out, _ = run(capsys, "construct", "--op", "h-plus-plus", files("twok2.bg"))
        assert code == 0
        assert out == "4 4\n0 1\n0 2\n1 3\n2 3\n"

    def test_bipartite_double(self, capsys, files):
        code, out, _ = run(capsys, "construct", "--op", "bipartite-double", files("p4.g"))
        assert code == 0 and decode_graph(out, "bigraph").nx == 4

    def test_complement(self, capsys, files):
        code, out, _ = run(capsys, "construct", "--op", "complement", files("p4.g"))
        assert out == "4 3\n0 2\n0 3\n1 3\n"


class TestErrors:
    def test_malformed(self, capsys, files):
        code, out, err = run(capsys, "recognize", files("broken.g"))
        assert code == 2 and out == "" and "error" in err

    def test_missing_file(self, capsys, files):
        assert run(capsys, "recognize", files("absent.g"))[0] == 2

    def test_kind_mismatch(self, capsys, files):
        assert run(capsys, "recognize", "--class", "cocomp-bigraph", files("p4.g"))[0] == 2

    def test_guard(self, capsys, files):
        code, out, err = run(capsys, "oracle", files("big.g"))
        assert code == 3 and "n <= 10" in err

    def test_oracle_verdict(self, capsys, files):
        assert run(capsys, "oracle", files("k33.g"))[:2] == (1, "NO\n")


class TestCrosscheckCommand:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "crosscheck", "--n", "3")
        assert code == 0
        body = [ln for ln in out.splitlines() if not ln.startswith("#")]
        assert len(body) == 8
        assert "disagreements=0" in out

    def test_structured_to_file(self, capsys, tmp_path):
        target = tmp_path / "report.jsonl"
        code, _, err = run(capsys, "crosscheck", "--n", "4", "--format", "structured", "--output", str(target))
        assert code == 0 and "64 records" in err
        lines = target.read_text().splitlines()
        header = json.loads(lines[0])
        assert header["graphs"] == 64 and header["disagreements"] == 0
        assert json.loads(lines[1])["bitmask"] == 0


class TestEmitReport:
    def test_n3(self):
        text = emit_report(crosscheck_enumerate(3))
        records = [ln for ln in text.splitlines() if not ln.startswith("#")]
        assert len(records) == 8
        assert all(ln.split()[1:4] == ["YES"] * 3 for ln in records)

    def test_empty_report(self):
        for fmt in ("text", "structured"):
            text = emit_report(Report(5, ("pairs",)), fmt)
            assert all(ln.startswith(("#", "{")) for ln in text.splitlines())
        assert len(emit_report(Report(5, ("pairs",)), "structured").splitlines()) == 1

    def test_seeded_byte_identical(self):
        for fmt in ("text", "structured"):
            a = emit_report(crosscheck_enumerate(7, seed=3, samples=20), fmt)
            b = emit_report(crosscheck_enumerate(7, seed=3, samples=20), fmt)
            assert a == b

    def test_unknown_format(self):
        with pytest.raises(ValueError):
            emit_report(Report(3, ("pairs",)), "xml")


def test_module_entry_point(tmp_path):
    path = tmp_path / "k33.g"
    path.write_text(encode_graph(generate("complete_bipartite", p=3, q=3)))
    proc = subprocess.run(
        [sys.executable, "-m", "strongcocomp", "recognize", str(path)], capture_output=True, text=True
    )
    assert proc.returncode == 1 and proc.stdout == "NO\n"
