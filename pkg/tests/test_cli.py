"""Command-line verbs: files in, files out, exit codes."""

import numpy as np
import pytest

import flatzones as fz
from flatzones.cli import main


@pytest.fixture()
def graph_file(tmp_path, fixtures):
    f = fixtures["path"]
    p = tmp_path / "g.txt"
    p.write_text(fz.format_graph_text(f.graph, f.weight_map))
    return p


@pytest.fixture()
def triangle_file(tmp_path, fixtures):
    f = fixtures["triangle"]
    p = tmp_path / "tri.txt"
    p.write_text(fz.format_graph_text(f.graph, f.weight_map))
    return p


class TestQfzVerb:
    def test_writes_dendrogram(self, tmp_path, graph_file):
        out = tmp_path / "d.txt"
        assert main(["qfz", str(graph_file), "-o", str(out)]) == 0
        assert out.read_text() == "3 2\n3 1 0 1\n4 2 3 2\n"


class TestSaliencyVerb:
    def test_saliency_of_stored_dendrogram(self, tmp_path, graph_file):
        dend = tmp_path / "d.txt"
        out = tmp_path / "s.txt"
        main(["qfz", str(graph_file), "-o", str(dend)])
        assert main(["saliency", str(graph_file), str(dend), "-o", str(out)]) == 0
        g, wm = fz.parse_graph_text(out.read_text())
        assert wm.raw.tolist() == [0.0, 1.0]


class TestPsiVerb:
    def test_path_values(self, tmp_path, graph_file):
        out = tmp_path / "s.txt"
        assert main(["psi", str(graph_file), "-o", str(out)]) == 0
        _, wm = fz.parse_graph_text(out.read_text())
        assert wm.raw.tolist() == [0.0, 1.0]


class TestCheckSaliencyVerb:
    def test_fixed_point_accepted(self, graph_file):
        assert main(["check-saliency", str(graph_file)]) == 0

    def test_triangle_rejected(self, triangle_file):
        assert main(["check-saliency", str(triangle_file)]) == 1


class TestMstVerbs:
    def test_mst_and_check(self, tmp_path, triangle_file):
        tree = tmp_path / "t.txt"
        assert main(["mst", str(triangle_file), "-o", str(tree)]) == 0
        assert tree.read_text() == "0\n1\n"
        assert main(["check-mst", str(triangle_file), str(tree)]) == 0

    def test_check_rejects_non_mst(self, tmp_path, triangle_file):
        cand = tmp_path / "bad.txt"
        cand.write_text("1\n2\n")
        assert main(["check-mst", str(triangle_file), str(cand)]) == 1

    def test_as_graph_output(self, tmp_path, triangle_file):
        tree = tmp_path / "t.txt"
        assert main(["mst", str(triangle_file), "-o", str(tree), "--as-graph"]) == 0
        g, wm = fz.parse_graph_text(tree.read_text())
        assert g.vertex_count == 3
        assert g.edge_count == 2
        assert wm.raw.tolist() == [0.0, 1.0]

    def test_disconnected_candidate_is_an_error(self, tmp_path, fixtures):
        f = fixtures["cycle4"]
        gf = tmp_path / "g.txt"
        gf.write_text(fz.format_graph_text(f.graph, f.weight_map))
        cand = tmp_path / "c.txt"
        cand.write_text("0\n2\n")
        assert main(["check-mst", str(gf), str(cand)]) == 2


class TestImagePipelineVerbs:
    def test_image_graph_and_render(self, tmp_path):
        from flatzones.pixelio import GrayImage

        rng = np.random.default_rng(3)
        img = GrayImage(8, 8, 255, rng.integers(0, 256, size=(8, 8)))
        img_path = tmp_path / "in.pgm"
        img_path.write_bytes(fz.write_pgm(img, "P5"))
        gfile = tmp_path / "g.txt"
        sfile = tmp_path / "s.txt"
        out = tmp_path / "out.pgm"
        assert main(["image-graph", str(img_path), "--adjacency", "4", "-o", str(gfile)]) == 0
        assert main(["psi", str(gfile), "-o", str(sfile)]) == 0
        assert main(["render", str(img_path), str(sfile), "-o", str(out)]) == 0
        rendered = fz.read_pgm(out.read_bytes())
        assert rendered.width == 15 and rendered.height == 15

    def test_render_p2_records_peak(self, tmp_path):
        from flatzones.pixelio import GrayImage

        img = GrayImage(2, 1, 255, np.array([[5, 9]]))
        img_path = tmp_path / "in.pgm"
        img_path.write_bytes(fz.write_pgm(img, "P5"))
        gfile = tmp_path / "g.txt"
        sfile = tmp_path / "s.txt"
        out = tmp_path / "out.pgm"
        main(["image-graph", str(img_path), "-o", str(gfile)])
        main(["psi", str(gfile), "-o", str(sfile)])
        assert main(["render", str(img_path), str(sfile), "--format", "p2", "-o", str(out)]) == 0
        assert b"# saliency-max 0\n" in out.read_bytes()


class TestVerifyVerb:
    def test_fixture_passes(self, capsys, graph_file):
        assert main(["verify", str(graph_file)]) == 0
        lines = capsys.readouterr().out.strip().splitlines()
        assert all(line.startswith(("PASS", "SKIP")) for line in lines)
        assert sum(1 for line in lines if line.startswith("PASS")) >= 8

    def test_cycle_fixture_passes(self, tmp_path, fixtures, capsys):
        f = fixtures["cycle4"]
        p = tmp_path / "g.txt"
        p.write_text(fz.format_graph_text(f.graph, f.weight_map))
        assert main(["verify", str(p)]) == 0


class TestErrorPaths:
    def test_missing_file(self, tmp_path):
        assert main(["qfz", str(tmp_path / "nope.txt"), "-o", str(tmp_path / "d")]) == 2

    def test_malformed_graph(self, tmp_path):
        p = tmp_path / "bad.txt"
        p.write_text("2 1\n0 0 1\n")
        assert main(["psi", str(p), "-o", str(tmp_path / "s")]) == 2

    def test_render_graph_mismatch(self, tmp_path, fixtures):
        from flatzones.pixelio import GrayImage

        img = GrayImage(2, 1, 255, np.array([[5, 9]]))
        img_path = tmp_path / "in.pgm"
        img_path.write_bytes(fz.write_pgm(img, "P5"))
        f = fixtures["triangle"]
        sfile = tmp_path / "s.txt"
        sfile.write_text(fz.format_graph_text(f.graph, f.weight_map))
        assert main(["render", str(img_path), str(sfile), "-o", str(tmp_path / "o")]) == 2
