"""
End-to-end runs of the command line tool through main().
"""
import json

import numpy as np
import pytest

from main import EXIT_DATA, EXIT_USAGE, main

QUICK = ["--grid", "16", "--top-k", "2", "--sections", "2", "--refine-iterations", "30"]
LINF = {"kind": "pnorm", "dim": 2, "p": "inf"}
EUCLID = {"kind": "pnorm", "dim": 2, "p": 2}


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.integration
class TestCircumradius:
    @pytest.mark.parametrize(
        "sides, expected",
        [((1, 1, 1), "0.5773502691896258"), ((3, 4, 5), "2.5"), ((1, 1, 2), "inf")],
    )
    def test_sides(self, capsys, sides, expected):
        code, out, _ = run(capsys, "circumradius", "--sides", *sides)
        assert code == 0
        assert out.strip() == expected

    def test_triangle_inequality_violation(self, capsys):
        code, _, err = run(capsys, "circumradius", "--sides", 1, 2, 4)
        assert code == EXIT_DATA
        assert "triangle inequality" in err

    def test_points_under_max_norm(self, capsys, tmp_path, write_config):
        pts = tmp_path / "pts.txt"
        pts.write_text("0 1\n1 0\n-1 0\n")
        code, out, _ = run(capsys, "circumradius", "--points", pts, "--config", write_config(LINF))
        assert code == 0
        assert out.strip() == "inf"

    def test_points_default_to_euclidean(self, capsys, tmp_path):
        pts = tmp_path / "pts.txt"
        pts.write_text("0 0\n3 0\n0 4\n")
        code, out, _ = run(capsys, "circumradius", "--points", pts)
        assert (code, out.strip()) == (0, "2.5")


@pytest.mark.integration
class TestEmbed4:
    def _write(self, tmp_path, d):
        path = tmp_path / "d.txt"
        np.savetxt(path, d)
        return path

    def test_embeddable(self, capsys, tmp_path):
        d = np.ones((4, 4)) - np.eye(4)
        code, out, _ = run(capsys, "embed4", "--distances", self._write(tmp_path, d))
        assert code == 0
        assert out.startswith("embeddable")

    def test_not_embeddable(self, capsys, tmp_path):
        d = np.ones((4, 4)) - np.eye(4)
        d[3, :3] = d[:3, 3] = 0.5
        code, out, _ = run(capsys, "embed4", "--distances", self._write(tmp_path, d), "--format", "json")
        assert code == 1
        payload = json.loads(out)
        assert payload["embeddable"] is False
        assert payload["obstruction"] == "negative_squared_height"

    def test_invalid_metric(self, capsys, tmp_path):
        d = np.ones((4, 4)) - np.eye(4)
        d[0, 1] = d[1, 0] = 5.0
        code, _, _ = run(capsys, "embed4", "--distances", self._write(tmp_path, d))
        assert code == EXIT_DATA


@pytest.mark.integration
class TestClassify:
    def test_max_norm(self, capsys, write_config):
        code, out, _ = run(capsys, "classify", write_config(LINF), "--radius", 1, *QUICK)
        payload = json.loads(out)
        assert code == 1
        assert payload["verdict"] == "NOT_INNER_PRODUCT"
        assert payload["s_estimate"] == "inf"

    def test_euclidean(self, capsys, write_config):
        code, out, _ = run(capsys, "classify", write_config(EUCLID), "--center", 1, -1, "--radius", 2, *QUICK)
        assert code == 0
        assert json.loads(out)["verdict"] == "INNER_PRODUCT"

    def test_tiny_budget_is_inconclusive(self, capsys, write_config):
        code, _, _ = run(capsys, "classify", write_config(EUCLID), "--grid", 8, "--refine-iterations", 0)
        assert code == 2

    def test_output_is_deterministic(self, capsys, write_config):
        config = write_config({"kind": "pnorm", "dim": 3, "p": 1.5})
        first = run(capsys, "classify", config, *QUICK)
        second = run(capsys, "classify", config, *QUICK)
        threaded = run(capsys, "classify", config, *QUICK, "--workers", 2)
        assert first[1] == second[1]
        assert first[1].replace('"workers": 1', '"workers": 2') == threaded[1]

    def test_text_format(self, capsys, write_config):
        code, out, _ = run(capsys, "classify", write_config(LINF), *QUICK, "--format", "text")
        assert code == 1
        assert "verdict:   NOT_INNER_PRODUCT" in out

    def test_emit_plot(self, capsys, tmp_path, write_config):
        csv = tmp_path / "landscape.csv"
        run(capsys, "classify", write_config({"kind": "pnorm", "dim": 2, "p": 3}), *QUICK, "--emit-plot", csv)
        lines = csv.read_text().splitlines()
        assert lines[0] == "theta_u,theta_v,circumradius"
        assert len(lines) == 1 + 16 * 16

    def test_center_dimension_mismatch(self, capsys, write_config):
        code, _, _ = run(capsys, "classify", write_config(EUCLID), "--center", 0, 0, 0, *QUICK)
        assert code == EXIT_DATA


@pytest.mark.integration
class TestConfigErrors:
    def test_bad_json(self, capsys, write_config):
        code, _, err = run(capsys, "classify", write_config('{"kind": "pnorm",, }'))
        assert code == EXIT_USAGE
        assert "config error" in err

    def test_invalid_norm(self, capsys, write_config):
        code, _, _ = run(capsys, "classify", write_config({"kind": "quadratic", "dim": 2, "matrix": [[1, 0], [0, -1]]}))
        assert code == EXIT_USAGE

    def test_missing_config(self, capsys, tmp_path):
        code, _, _ = run(capsys, "classify", tmp_path / "absent.json")
        assert code == EXIT_USAGE

    def test_invalid_budget(self, capsys, write_config):
        code, _, _ = run(capsys, "classify", write_config(EUCLID), "--grid", 1)
        assert code == EXIT_USAGE

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(["circumradius", "--sides", "1", "2"])
        assert exc.value.code == EXIT_USAGE


@pytest.mark.integration
class TestEnergy:
    @pytest.fixture
    def square(self, tmp_path):
        path = tmp_path / "square.txt"
        path.write_text("0 0\n1 0\n1 1\n0 1\n")
        return path

    def test_thickness(self, capsys, square):
        code, out, _ = run(capsys, "energy", "--cloud", square, "--energy", "thickness")
        assert code == 0
        assert float(out) == pytest.approx(np.sqrt(2) / 2, rel=1e-12)

    def test_menger(self, capsys, square):
        code, out, _ = run(capsys, "energy", "--cloud", square, "--energy", "menger", "--p", 2)
        assert code == 0
        # 24 ordered triples, each a right isosceles triangle with r = sqrt(2)/2
        assert float(out) == pytest.approx(48.0, rel=1e-12)

    def test_json(self, capsys, square):
        code, out, _ = run(capsys, "energy", "--cloud", square, "--energy", "thickness", "--format", "json")
        payload = json.loads(out)
        assert payload["energy"] == "thickness"
        assert payload["points"] == 4

    def test_collinear_cloud_has_infinite_thickness(self, capsys, tmp_path):
        path = tmp_path / "line.txt"
        path.write_text("0 0\n1 0\n2 0\n")
        code, out, _ = run(capsys, "energy", "--cloud", path, "--energy", "thickness")
        assert (code, out.strip()) == (0, "inf")

    def test_bad_cloud(self, capsys, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 0\n1 x\n")
        code, _, err = run(capsys, "energy", "--cloud", path)
        assert code == EXIT_DATA
        assert ":2" in err
