import json
import subprocess
import sys

import pytest

from stoplex import (
    AllZeroWeights,
    EmptyCorpus,
    RunConfig,
    run_pipeline,
)
from stoplex.cli import main

from conftest import TOY_DIR

EXPECTED_TOP_KEYS = {
    "corpus", "moments", "stopwords", "coverage", "z_test", "verdict", "config", "version",
}


def toy_config(out_dir, **overrides):
    settings = dict(
        inputs=(str(TOY_DIR),),
        fraction="0.4",
        output_dir=out_dir,
    )
    settings.update(overrides)
    return RunConfig(**settings)


def test_pipeline_toy_report(tmp_path):
    report = run_pipeline(toy_config(tmp_path))
    assert report.doc_count == 3
    assert report.unique_words == 3
    assert report.token_total == 8
    assert report.moments.expectation == pytest.approx(2.0, abs=1e-12)
    assert report.moments.asymmetry == pytest.approx(0.0, abs=1e-12)
    assert report.verdict.location.value == "BothEnds"
    assert report.stopwords.count == 2


def test_pipeline_writes_outputs(tmp_path):
    run_pipeline(toy_config(tmp_path))
    assert (tmp_path / "stopwords.txt").read_text(encoding="utf-8") == "nok\nolma\n"
    csv_lines = (tmp_path / "words.csv").read_text(encoding="utf-8").splitlines()
    assert len(csv_lines) == 4
    assert csv_lines[0] == "word,first_index,doc_frequency,idf,weight,probability"
    assert csv_lines[1].startswith("olma,1,2,")
    report = json.loads((tmp_path / "report.json").read_text(encoding="utf-8"))
    assert set(report) == EXPECTED_TOP_KEYS


def test_report_schema_exact(tmp_path):
    report = run_pipeline(toy_config(tmp_path)).to_dict()
    assert set(report) == EXPECTED_TOP_KEYS
    assert set(report["corpus"]) == {"documents", "unique_words", "tokens"}
    assert set(report["moments"]) == {
        "expectation", "dispersion", "std_dev", "raw_moment_1", "raw_moment_2",
        "raw_moment_3", "third_central_moment", "asymmetry",
    }
    assert set(report["stopwords"]) == {"fraction", "count", "threshold"}
    assert set(report["coverage"]) == {"left", "inside", "right", "outside_fraction"}
    assert set(report["z_test"]) == {"n", "x_bar", "z", "critical", "x_bar_side", "decision"}
    assert set(report["verdict"]) == {"asymmetry", "location"}
    assert report["z_test"]["x_bar_side"] in ("Left", "Inside", "Right")
    assert report["z_test"]["decision"] in ("RetainH0", "RejectH0")
    assert report["verdict"]["location"] in ("Beginning", "End", "BothEnds")


def test_report_round_trips_losslessly(tmp_path):
    report = run_pipeline(toy_config(tmp_path))
    data = report.to_dict()
    assert json.loads(report.to_json()) == data


def test_pipeline_is_deterministic(tmp_path):
    out1 = tmp_path / "run1"
    out2 = tmp_path / "run2"
    run_pipeline(toy_config(out1, plots=True))
    run_pipeline(toy_config(out2, plots=True))
    for name in ("stopwords.txt", "report.json", "words.csv", "density.svg", "sorted.svg"):
        assert (out1 / name).read_bytes() == (out2 / name).read_bytes()


def test_pipeline_empty_dir(tmp_path):
    empty = tmp_path / "empty"
    empty.mkdir()
    with pytest.raises(EmptyCorpus) as excinfo:
        run_pipeline(toy_config(tmp_path / "out", inputs=(str(empty),)))
    assert excinfo.value.stage == "load_corpus"


def test_pipeline_all_zero_weights(tmp_path):
    for name in ("a.txt", "b.txt"):
        (tmp_path / name).write_text("olma nok olma", encoding="utf-8")
    with pytest.raises(AllZeroWeights) as excinfo:
        run_pipeline(toy_config(tmp_path / "out", inputs=(str(tmp_path),), fraction="0.5"))
    assert excinfo.value.stage == "probabilities"


def test_config_validation(tmp_path):
    with pytest.raises(ValueError):
        toy_config(tmp_path, fraction="1.5")
    with pytest.raises(ValueError):
        toy_config(tmp_path, z_critical=0.0)
    with pytest.raises(ValueError):
        toy_config(tmp_path, xbar_mode="median")
    with pytest.raises(ValueError):
        toy_config(tmp_path, order="random")


def test_xbar_modes(tmp_path):
    midpoint = run_pipeline(toy_config(tmp_path / "m"))
    assert midpoint.z_test.sample_mean == 2.0  # (3 + 1) / 2
    candidate_mean = run_pipeline(toy_config(tmp_path / "c", xbar_mode="candidates"))
    assert candidate_mean.z_test.sample_mean == 1.5  # indices 2 (nok) and 1 (olma)


def test_averaging_mode_changes_weights(tmp_path):
    all_docs = run_pipeline(toy_config(tmp_path / "a"))
    containing = run_pipeline(toy_config(tmp_path / "b", averaging="containing"))
    # toy corpus: every word has m=2, so probabilities agree but weight sums differ
    assert containing.stopwords.threshold == pytest.approx(all_docs.stopwords.threshold)


# --- CLI --------------------------------------------------------------------

def test_cli_analyze_success(tmp_path, capsys):
    code = main([
        "analyze", str(TOY_DIR), "--fraction", "0.4", "--out", str(tmp_path), "--plots",
    ])
    assert code == 0
    out = capsys.readouterr().out
    assert "documents: 3" in out
    assert "location verdict: BothEnds" in out
    assert "%" in out
    for name in ("stopwords.txt", "report.json", "words.csv", "density.svg", "sorted.svg"):
        assert (tmp_path / name).exists()


def test_cli_empty_dir_exit_2(tmp_path, capsys):
    empty = tmp_path / "empty"
    empty.mkdir()
    code = main(["analyze", str(empty), "--out", str(tmp_path / "out")])
    assert code == 2
    assert "load_corpus" in capsys.readouterr().err


def test_cli_missing_input_exit_2(tmp_path, capsys):
    code = main(["analyze", str(tmp_path / "nope.txt"), "--out", str(tmp_path)])
    assert code == 2


def test_cli_degenerate_exit_3(tmp_path, capsys):
    for name in ("a.txt", "b.txt"):
        (tmp_path / name).write_text("bir xil matn", encoding="utf-8")
    code = main(["analyze", str(tmp_path / "a.txt"), str(tmp_path / "b.txt"),
                 "--out", str(tmp_path / "out")])
    assert code == 3
    assert "probabilities" in capsys.readouterr().err


def test_cli_bad_utf8_exit_2(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"ol\xffma")
    code = main(["analyze", str(bad), "--out", str(tmp_path / "out")])
    assert code == 2
    assert "bad" in capsys.readouterr().err


def test_cli_tokenize(tmp_path, capsys):
    source = tmp_path / "s.txt"
    source.write_text("O’zbek tili!", encoding="utf-8")
    assert main(["tokenize", str(source)]) == 0
    assert capsys.readouterr().out == "oʻzbek\ntili\n"


def test_cli_version(capsys):
    assert main(["version"]) == 0
    out = capsys.readouterr().out
    assert out.startswith("stoplex ")


def test_cli_module_entrypoint(tmp_path):
    result = subprocess.run(
        [sys.executable, "-m", "stoplex", "version"],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 0
    assert result.stdout.startswith("stoplex ")


def test_cli_order_flag(tmp_path, capsys):
    (tmp_path / "z.txt").write_text("birinchi soz", encoding="utf-8")
    (tmp_path / "a.txt").write_text("ikkinchi soz", encoding="utf-8")
    out_dir = tmp_path / "out"
    code = main([
        "analyze", str(tmp_path / "z.txt"), str(tmp_path / "a.txt"),
        "--order", "lexicographic", "--fraction", "0.5", "--out", str(out_dir),
    ])
    assert code == 0
    report = json.loads((out_dir / "report.json").read_text(encoding="utf-8"))
    assert report["corpus"]["documents"] == 2
