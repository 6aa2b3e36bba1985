"""Config ingestion, validation, round-trip export, and the CLI surface."""

import json
import subprocess
import sys

import pytest
import yaml

from ewhnexus.analysis import SweepGrid, scenario_sweep
from ewhnexus.cli import SWEEP_CSV_HEADER, main, render_sweep_csv
from ewhnexus.config import (
    ConfigError, dump_config, load_config, load_config_text,
)
from ewhnexus.presets import paper_2024, resolver
from ewhnexus.water import NetworkTransfer


def preset_dict():
    """The shipped preset as a mutable dict, for targeted corruption."""
    from importlib import resources
    text = resources.files("ewhnexus").joinpath("presets", "paper-2024.yaml").read_text()
    return yaml.safe_load(text)


def sweep_csv(cfg) -> str:
    grid = SweepGrid(plants=cfg.plants, products=cfg.products, betas=cfg.sweep_betas,
                     water_mode=cfg.water_mode)
    return render_sweep_csv(scenario_sweep(grid, cfg.econ, econ_resolver=resolver(cfg)))


class TestLoadConfig:
    def test_shipped_preset_loads_with_zero_overrides(self):
        cfg = paper_2024()
        assert [p.name for p in cfg.plants] == ["biomass", "natural_gas", "coal"]
        assert [p.name for p in cfg.products] == ["methane", "methanol", "ethanol"]
        assert cfg.econ.elec_price == 0.25
        assert cfg.econ.xi_p == 52.5
        assert cfg.calibration.pipe_cost_per_m == 160.0

    def test_unknown_key_is_a_hard_error_with_path(self):
        data = preset_dict()
        data["econ"]["elec_pricee"] = "0.3 $/kWh"
        with pytest.raises(ConfigError, match="elec_pricee"):
            load_config_text(yaml.safe_dump(data))

    def test_out_of_range_beta_names_the_bound(self):
        data = preset_dict()
        data["sweep"]["betas"] = [0.5, 1.2]
        with pytest.raises(ConfigError, match=r"\[0, 1\]"):
            load_config_text(yaml.safe_dump(data))

    def test_missing_required_key_reports_path_and_unit(self):
        data = preset_dict()
        del data["econ"]["c_wind"]
        with pytest.raises(ConfigError, match=r"econ\.c_wind.*\$/kW"):
            load_config_text(yaml.safe_dump(data))

    def test_unit_mismatch_reports_expected_unit(self):
        data = preset_dict()
        data["econ"]["elec_price"] = "0.25 $/ton"
        with pytest.raises(ConfigError, match=r"\$/kWh"):
            load_config_text(yaml.safe_dump(data))

    def test_all_errors_reported_in_one_pass(self):
        data = preset_dict()
        data["econ"]["elec_price"] = "0.25 $/ton"
        data["sweep"]["betas"] = [1.5]
        data["water"] = {"mode": "volcanic"}
        try:
            load_config_text(yaml.safe_dump(data))
        except ConfigError as exc:
            message = str(exc)
            assert "elec_price" in message and "betas" in message and "volcanic" in message
        else:
            pytest.fail("expected a ConfigError")

    def test_xi_p_override_flows_downstream(self):
        data = preset_dict()
        data["econ"]["xi_p"] = "50 kWh/kg"
        cfg = load_config_text(yaml.safe_dump(data))
        assert cfg.econ.xi_p == 50.0

    def test_solar_mode_without_c_sw_is_an_error(self):
        data = preset_dict()
        data["water"] = {"mode": "solar_seawater"}
        with pytest.raises(ConfigError, match="c_sw"):
            load_config_text(yaml.safe_dump(data))

    def test_missing_c_ccs_without_calibration_is_an_error(self):
        data = preset_dict()
        del data["calibration"]["ccs_capital_total"]
        with pytest.raises(ConfigError, match="c_ccs"):
            load_config_text(yaml.safe_dump(data))

    def test_transfer_mode_parses_distance(self):
        data = preset_dict()
        data["water"] = {"mode": "network_transfer", "distance": "250 km"}
        cfg = load_config_text(yaml.safe_dump(data))
        assert isinstance(cfg.water_mode, NetworkTransfer)
        assert cfg.water_mode.distance.value_in("km") == 250.0

    def test_unknown_config_source_is_a_config_error(self):
        with pytest.raises(ConfigError, match="preset"):
            load_config("no-such-file.yaml")


class TestRoundTrip:
    def test_export_reload_is_bit_identical(self):
        cfg = paper_2024()
        text = dump_config(cfg)
        cfg2 = load_config_text(text)
        assert sweep_csv(cfg) == sweep_csv(cfg2)
        # and the re-export is a fixed point
        assert dump_config(cfg2) == text

    def test_transfer_mode_config_round_trips(self):
        data = preset_dict()
        data["water"] = {"mode": "network_transfer", "distance": "250 km"}
        cfg = load_config_text(yaml.safe_dump(data))
        cfg2 = load_config_text(dump_config(cfg))
        assert isinstance(cfg2.water_mode, NetworkTransfer)
        assert sweep_csv(cfg) == sweep_csv(cfg2)


class TestCli:
    def run_cli(self, *argv) -> tuple[int, str, str]:
        import io
        from contextlib import redirect_stderr, redirect_stdout
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            status = main(list(argv))
        return status, out.getvalue(), err.getvalue()

    def test_sweep_csv_schema_and_cardinality(self):
        status, out, _ = self.run_cli("--config", "paper-2024", "--command", "sweep",
                                      "--format", "csv")
        assert status == 0
        lines = out.strip().split("\n")
        assert lines[0] == SWEEP_CSV_HEADER
        assert len(lines) == 1 + 21
        storage = lines[1].split(",")
        assert storage[0] == "biomass" and storage[1] == "" and storage[2] == "0.0"

    def test_sweep_csv_deterministic(self):
        a = self.run_cli("--config", "paper-2024", "--command", "sweep", "--format", "csv")
        b = self.run_cli("--config", "paper-2024", "--command", "sweep", "--format", "csv")
        assert a == b

    def test_sweep_json_parses(self):
        status, out, _ = self.run_cli("--config", "paper-2024", "--command", "sweep",
                                      "--format", "json")
        assert status == 0
        rows = json.loads(out)
        assert len(rows) == 21
        assert set(rows[0]) == set(SWEEP_CSV_HEADER.split(","))

    def test_breakeven_single_value_report(self):
        status, out, _ = self.run_cli("--config", "paper-2024", "--command", "breakeven",
                                      "--plant", "biomass", "--format", "json")
        assert status == 0
        payload = json.loads(out)
        assert payload["breakeven_distance_km"] == pytest.approx(61.0, abs=0.5)

    def test_curve_emits_reference_distances(self, tmp_path):
        out_path = tmp_path / "curve.csv"
        status, _, _ = self.run_cli("--config", "paper-2024", "--command", "curve",
                                    "--plant", "biomass",
                                    "--distances", "60,260,300", "--format", "csv",
                                    "--out", str(out_path))
        assert status == 0
        lines = out_path.read_text().strip().split("\n")
        assert lines[0].startswith("distance_km,flow_m3_per_h")
        distances = {line.split(",")[0] for line in lines[1:]}
        assert distances == {"60.0", "260.0", "300.0"}

    def test_penalty_store_all(self):
        status, out, _ = self.run_cli("--config", "paper-2024", "--command", "penalty",
                                      "--plant", "biomass", "--format", "json")
        assert status == 0
        assert json.loads(out)["penalty_threshold_usd_per_ton"] == pytest.approx(75.09, rel=0.02)

    def test_scenario_command(self):
        status, out, _ = self.run_cli("--config", "paper-2024", "--command", "scenario",
                                      "--plant", "biomass", "--product", "methane",
                                      "--beta", "1", "--format", "json")
        assert status == 0
        row = json.loads(out)[0]
        assert row["daily_cost_usd_per_day"] < 0

    def test_invalid_config_exits_2(self, tmp_path):
        bad = tmp_path / "bad.yaml"
        data = preset_dict()
        data["econ"]["mystery_knob"] = 3
        bad.write_text(yaml.safe_dump(data))
        status, _, err = self.run_cli("--config", str(bad), "--command", "sweep")
        assert status == 2
        assert "mystery_knob" in err

    def test_computation_error_exits_3(self, tmp_path):
        # pipe so expensive that no break-even exists in the window
        data = preset_dict()
        data["calibration"]["pipe_cost_per_m"] = "100000000 $/m"
        cfg_path = tmp_path / "nocross.yaml"
        cfg_path.write_text(yaml.safe_dump(data))
        status, _, err = self.run_cli("--config", str(cfg_path), "--command", "breakeven",
                                      "--plant", "biomass")
        assert status == 3
        assert "break-even" in err

    def test_io_error_exits_4(self):
        status, _, err = self.run_cli("--config", "paper-2024", "--command", "sweep",
                                      "--out", "/nonexistent-dir/x.csv")
        assert status == 4

    def test_failing_curve_cell_keeps_csv_clean_and_reports_on_stderr(self):
        status, out, err = self.run_cli("--config", "paper-2024", "--command", "curve",
                                        "--plant", "biomass", "--distances", "60",
                                        "--flows", "90,999999", "--format", "csv")
        assert status == 3
        lines = out.strip().split("\n")
        assert lines[0].startswith("distance_km,")
        assert len(lines) == 2  # only the in-range flow produced a row
        assert all("error" not in line for line in lines)
        assert "999999" in err and "outside" in err

    def test_missing_plant_flag_exits_2(self):
        status, _, err = self.run_cli("--config", "paper-2024", "--command", "breakeven")
        assert status == 2
        assert "--plant" in err

    def test_out_of_range_beta_flag_exits_2(self):
        status, _, err = self.run_cli("--config", "paper-2024", "--command", "scenario",
                                      "--plant", "biomass", "--product", "methane",
                                      "--beta", "1.5")
        assert status == 2
        assert "--beta" in err

    def test_product_without_beta_exits_2(self):
        status, _, err = self.run_cli("--config", "paper-2024", "--command", "scenario",
                                      "--plant", "biomass", "--product", "methane")
        assert status == 2
        assert "--beta" in err

    def test_bare_number_for_dimensioned_key_is_an_error(self):
        data = preset_dict()
        data["econ"]["c_wind"] = 1030
        with pytest.raises(ConfigError, match=r"c_wind.*\$/kW"):
            load_config_text(yaml.safe_dump(data))

    def test_console_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "ewhnexus.cli", "--config", "paper-2024",
             "--command", "penalty", "--plant", "biomass", "--format", "json"],
            capture_output=True, text=True)
        assert proc.returncode == 0
        assert "penalty_threshold_usd_per_ton" in proc.stdout
