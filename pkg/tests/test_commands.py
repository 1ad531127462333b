# tests/test_commands.py

import json

import pytest

from main import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


def write_config(path, angles):
    path.write_text(json.dumps(angles), encoding="utf-8")
    return str(path)


def test_validate(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "validate")
    assert code == 0
    assert report["results"]["valid"] is True
    assert report["results"]["k_v"] == 7
    assert report["config"]["theta1_minus"] == "11/56"
    assert json.loads((tmp_path / "validate.json").read_text(encoding="utf-8")) == report


def test_validate_tuned_config(tmp_path, capsys):
    code, report = run_cli(capsys, "--config", "fig2_tuned", "--out", str(tmp_path), "validate")
    assert code == 0
    assert report["results"]["k_v"] == 14


def test_validate_stored_tuning_words(tmp_path, capsys, fig2_cfg):
    path = write_config(tmp_path / "cu_tuning.json", {**fig2_cfg.as_dict(), "tuning_word0": "01", "tuning_word1": "10"})
    code, report = run_cli(capsys, "--config", path, "--out", str(tmp_path), "validate")
    assert code == 0
    assert report["results"]["k_w"] == 8


def test_validate_invalid_config(tmp_path, capsys, fig2_cfg):
    path = write_config(tmp_path / "rau.json", {**fig2_cfg.as_dict(), "theta1_plus": "1/2"})
    code, report = run_cli(capsys, "--config", path, "--out", str(tmp_path), "validate")
    assert code == 1
    assert report["results"]["valid"] is False
    assert report["errors"][0]["code"] == "colanding"


def test_validate_malformed_config(tmp_path, capsys, fig2_cfg):
    path = write_config(tmp_path / "rau.json", {**fig2_cfg.as_dict(), "theta1_plus": "0.27"})
    code, report = run_cli(capsys, "--config", path, "--out", str(tmp_path), "validate")
    assert code == 2
    assert report["errors"][0]["code"] == "format"


def test_unknown_setting(tmp_path, capsys):
    code, report = run_cli(capsys, "--set", "no_such_key=1", "--out", str(tmp_path), "validate")
    assert code == 2
    assert report["errors"][0]["code"] == "format"


def test_timings_setting(tmp_path, capsys):
    code, report = run_cli(capsys, "--set", "report_timings=true", "--out", str(tmp_path), "validate")
    assert code == 0
    assert "combinatorial" in report["timings"]


def test_map_angle(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "map-angle", "25/127")
    assert code == 0
    results = report["results"]
    assert results["image"] == "1/5"
    assert (results["preperiod"], results["period"]) == (0, 4)
    assert results["in_support"] is True

    code, report = run_cli(capsys, "--out", str(tmp_path), "map-angle", "1/5", "-1")
    assert code == 0
    assert report["results"]["image"] == "25/127"


def test_map_angle_rejects_bad_angle(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "map-angle", "abc")
    assert code == 2
    assert report["errors"][0]["code"] == "angle"


def test_tune(tmp_path, capsys, fig2_tuned_angles):
    code, report = run_cli(capsys, "--out", str(tmp_path), "tune", "01", "10")
    assert code == 0
    assert report["results"]["validation"]["valid"] is True
    assert report["results"]["validation"]["k_v"] == 14
    written = json.loads((tmp_path / "fig2_tuned.json").read_text(encoding="utf-8"))
    assert written["theta1_minus"] == fig2_tuned_angles[0]
    assert written["theta1_plus"] == fig2_tuned_angles[7]


def test_tune_rejects_bad_words(tmp_path, capsys):
    code, _ = run_cli(capsys, "--out", str(tmp_path), "tune", "10", "01")
    assert code == 2


def test_domains(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "domains", "2")
    assert code == 0
    results = report["results"]
    assert results["monotone"] is True
    assert [d["n"] for d in results["domains"]] == [-2, -1, 0, 1, 2]
    assert results["contraction_ratios"][0] == "8/1"


def test_render_rejects_zero_width(tmp_path, capsys):
    code, _ = run_cli(capsys, "--out", str(tmp_path), "render", "--center", "0,0", "--width", "0")
    assert code == 2


def test_render_dynamic_needs_c(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "render", "--plane", "dynamic")
    assert code == 2
    assert report["errors"][0]["code"] == "format"


@pytest.mark.numeric
def test_render_is_deterministic(tmp_path, capsys):
    images = []
    for workers in ("1", "3"):
        out = tmp_path / f"w{workers}"
        code, report = run_cli(
            capsys, "--set", f"render_workers={workers}", "--set", "max_iterations=200", "--out", str(out),
            "render", "--center=-0.1,0.9", "--width", "0.3", "--pixels", "40", "35",
        )
        assert code == 0
        assert report["results"]["files"] == ["render_parameter.ppm", "render_parameter.svg"]
        images.append((out / "render_parameter.ppm").read_bytes())
    assert images[0] == images[1]


@pytest.mark.numeric
def test_trace_ray(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "trace-ray", "1/3", "--c", "0,0")
    assert code == 0
    assert report["results"]["plane"] == "dynamic"
    assert report["results"]["error"] is None
    assert (tmp_path / "ray_dynamic_1_3.txt").exists()
    assert (tmp_path / "ray_dynamic_1_3.svg").exists()


@pytest.mark.numeric
def test_map_param_fixed_vertex(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "map-param", "--misiurewicz", "11/56")
    assert code == 0
    results = report["results"]
    assert results["image_angle"] == "11/56"
    assert results["displacement"] == 0
    assert results["image_period"] == 3


@pytest.mark.numeric
def test_map_param_center(tmp_path, capsys):
    code, report = run_cli(capsys, "--out", str(tmp_path), "map-param", "--center", "7", "25/127")
    assert code == 0
    assert report["results"]["image_angle"] == "1/5"
    assert report["results"]["image_period"] == 4
