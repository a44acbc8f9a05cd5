# SPDX-License-Identifier: Apache-2.0
#
# sidelobe-sensing: side-lobe interference sensing of moving mmWave blockers
# Copyright (C) 2026 The sidelobe-sensing authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
# ------------------------------------------------------------------------

import json
import math
import os
import subprocess

import numpy as np
import pytest

import sidelobe as sl


def test_defaults():
    cfg = sl.Config()
    assert cfg.seed == 1
    assert cfg.channel.pl0_db == pytest.approx(60.1)
    assert cfg.channel.noise_power_dbm() == pytest.approx(-87.98, abs=0.005)
    rx = cfg.rx_pattern()
    assert 10 * math.log10(rx.main_gain / rx.side_gain) == pytest.approx(20.28, abs=0.01)
    assert sl.reference_gain(90.0) == pytest.approx(math.pi / (21.32 * math.pi / 2 + math.pi))
    assert sl.blockage_sigma_for_radius(2.0) == pytest.approx(5.66, abs=0.005)


def test_config_errors_and_round_trip():
    with pytest.raises(sl.ConfigError, match="channel.bandwidth_hz"):
        sl.Config('{"channel": {"bandwidth_hz": -1}}')
    with pytest.raises(ValueError):
        sl.Config('{"nope": 1}')
    cfg = sl.Config('{"seed": 5, "bands": "auto"}')
    assert sl.Config(cfg.to_json()) == cfg
    assert json.loads(cfg.to_json())["bands"] == "auto"


def test_svd_matches_numpy():
    rng = np.random.default_rng(3)
    a = rng.normal(size=(51, 36))
    u, s, v, rank = sl.svd(a)
    assert rank == 36
    np.testing.assert_allclose(s, np.linalg.svd(a, compute_uv=False), rtol=1e-12)
    np.testing.assert_allclose(u @ np.diag(s) @ v.T, a, atol=1e-12)
    trend, sig, noise = sl.split_bands(a, 1, 17)
    np.testing.assert_allclose(trend + sig + noise, a, atol=1e-12)


def test_signature_on_a_synthetic_rise():
    a = np.zeros((51, 36))
    a[:, :] = np.linspace(-5.0, 5.0, 36)
    a[0, 12] += 10.0
    res = sl.extract_signature(a, bands=(1, 17))
    newest = [e for e in res["estimates"] if e["epoch"] == 50][0]
    assert newest["sector"] == 12
    # sectors are numbered clockwise from the reference bearing
    assert sl.circular_error_deg(newest["bearing_deg"], -120.0) == pytest.approx(0.0, abs=1e-9)
    assert sl.sector_of(36, 0.0, newest["bearing_deg"]) == 12
    assert res["threshold"] > 0.0


def test_wmae_and_seeds():
    assert sl.circular_error_deg(350.0, 10.0) == pytest.approx(20.0)
    assert sl.weight(25.0, 0.02, 1.4) == pytest.approx(0.163, abs=1e-3)
    assert sl.wmae([0.0], [4.0], [3.0], [True], 0.0, 1.4) == pytest.approx(4.0)
    assert sl.wmae([0.0], [4.0], [3.0], [False], 0.0, 1.4) is None
    assert sl.derive_seed(1, 0) != sl.derive_seed(1, 1)


def test_small_grid_evaluation():
    cfg = sl.Config('{"eval": {"max_radius_m": 10, "threads": 1}}')
    res = sl.run_grid_eval(cfg, n_trials=2, seed=4)
    assert res["trials"] == 2
    assert res["cells"].shape == (72, 7)
    assert 0.0 <= res["detection_rate"] <= 1.0
    assert set(res["wmae"]) == {0.0, 0.01, 0.02}
    assert sl.run_grid_eval(cfg, n_trials=2, seed=4)["wmae"] == res["wmae"]


def test_demo():
    run = sl.run_demo(sl.Config())
    assert run["matrix"].shape == (51, 36)
    assert run["trajectory"].shape == (51, 2)
    assert len(run["estimates"]) == 51


@pytest.mark.skipif("SIDELOBE_CLI" not in os.environ, reason="CLI not built")
def test_cli_demo(tmp_path):
    out = subprocess.run(
        [os.environ["SIDELOBE_CLI"], "demo", "--seed", "3", "--out", str(tmp_path)],
        check=True, capture_output=True, text=True,
    ).stdout
    assert "seed 3" in out
    assert (tmp_path / "sensing_matrix.csv").exists()
    assert (tmp_path / "trajectory.svg").exists()
    bad = tmp_path / "bad.json"
    bad.write_text('{"channel": {"bandwidth_hz": -1}}')
    proc = subprocess.run([os.environ["SIDELOBE_CLI"], "grid", "--config", str(bad), "--out", str(tmp_path)],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert "channel.bandwidth_hz" in proc.stderr
