import json
import math

import pytest

import cfgwc

INCOME = [28000, 40000, 35100, 65000, 20000, 52520, 21000, 75000]


def make_dataset(n=30, seed=3):
    spec = cfgwc.SyntheticSpec()
    spec.n_areas = n
    spec.n_clusters = 3
    return cfgwc.generate_synthetic(spec, seed)


def test_synthetic_and_fcm_row_sums():
    ds = make_dataset()
    assert ds.n == 30
    assert ds.r == 2
    res = cfgwc.fcm_run(ds, c=3, seed=1)
    assert res.converged
    for row in res.partition.u:
        assert math.isclose(sum(row), 1.0, abs_tol=1e-9)


def test_context_f2_matches_known_mean():
    series = cfgwc.ContextSeries(INCOME, "income")
    ctx = cfgwc.context_f2(series)
    assert ctx.method == "f2"
    assert abs(ctx.mu - 42077.5) < 1e-9
    assert abs(ctx.sigma - 19043.4777220444) < 1e-6
    assert all(0.5 < f <= 0.7310586 for f in ctx.f)


def test_cfgwc_run_respects_context_targets():
    ds = make_dataset()
    ctx = cfgwc.context_f2(cfgwc.extract_context(ds, "x0"))
    dist = cfgwc.pairwise_distances(ds.coords)
    weights = cfgwc.gravity_weights(ds.populations, dist)
    config = cfgwc.CfgwcConfig()
    config.c = 3
    config.seed = 9
    res = cfgwc.cfgwc_run(ds, ctx, weights, config)
    for row, target in zip(res.partition.u, ctx.f):
        assert math.isclose(sum(row), target, abs_tol=1e-9)
    report = cfgwc.ifv(ds, res.partition, res.centers)
    assert report.ifv > 0
    assert report.sd_max > 0

    geojson = json.loads(cfgwc.emit_geojson(ds, res.partition, ctx))
    assert geojson["type"] == "FeatureCollection"
    assert len(geojson["features"]) == ds.n


def test_encode_and_errors():
    codes, labels = cfgwc.encode_categoricals(["a", "b", "b", "c"])
    assert codes == [1, 2, 2, 3]
    assert labels == ["a", "b", "c"]
    with pytest.raises(ValueError):
        cfgwc.context_f2(cfgwc.ContextSeries([1.0, 1.0, 1.0], "const"))


def test_pipeline_run_and_compare(tmp_path):
    out = tmp_path / "out"
    config = tmp_path / "run.ini"
    config.write_text(
        "[data]\n"
        "synth = true\n"
        "n = 24\n"
        "blobs = 3\n"
        "synth_seed = 2\n"
        "[context]\n"
        "method = f1\n"
        "[clustering]\n"
        "c = 3\n"
        "seed = 4\n"
        "[output]\n"
        f"dir = {out}\n"
        "geojson = true\n"
    )
    summary = json.loads(cfgwc.run(str(config)))
    assert summary["dataset"]["n"] == 24
    assert (out / "memberships.csv").exists()
    assert (out / "centers.csv").exists()
    assert (out / "summary.json").exists()
    assert (out / "points.geojson").exists()

    report = json.loads(cfgwc.compare(str(config), 3))
    assert set(report["methods"]) == {"f1", "f2", "random"}
    assert all(len(m["ifv"]) == 3 for m in report["methods"].values())
