import pytest
from pydantic import ValidationError

from bgescore.business_logic.config_merger import resolve_config, smart_merge
from bgescore.models.bundle import RunConfig
from bgescore.settings import load_config
from bgescore.utils.errors import UsageError


def test_smart_merge_deep_merges_and_skips_none():
    base = {"prior": {"alpha_mu": 1.0, "nu": [0.0]}, "search": {"restarts": 1}}
    merged = smart_merge(base, {"prior": {"alpha_mu": None, "nu": [1.0, 2.0]}, "mcmc": {"seed": 3}})
    assert merged == {"prior": {"alpha_mu": 1.0, "nu": [1.0, 2.0]}, "search": {"restarts": 1}, "mcmc": {"seed": 3}}
    assert base["prior"]["nu"] == [0.0]


def test_resolution_order():
    resolved = resolve_config(
        {"search": {"restarts": 1, "seed": 0}},
        {"search": {"restarts": 3, "seed": 7}},
        [{"search": {"seed": 9, "restarts": None}}],
    )
    assert resolved == {"search": {"restarts": 3, "seed": 9}}


def test_load_yaml_and_json(write_text):
    yaml_path = write_text("search:\n  max_iterations: 5\nprior:\n  alpha_mu: 2\n", "run.yaml")
    assert load_config(yaml_path) == {"search": {"max_iterations": 5}, "prior": {"alpha_mu": 2}}
    json_path = write_text('{"mcmc": {"iterations": 50, "burn_in": 5}}', "run.json")
    assert load_config(json_path)["mcmc"]["burn_in"] == 5
    assert load_config(write_text("  \n", "empty.yaml")) == {}


def test_load_errors(tmp_path, write_text):
    with pytest.raises(FileNotFoundError):
        load_config(tmp_path / "absent.yaml")
    with pytest.raises(UsageError):
        load_config(write_text("- a\n- b\n", "list.yaml"))


def test_run_config_sections():
    config = RunConfig(**{"prior": {"alpha_w": 9}, "search": {"restarts": 2}, "reporting": {"x": 1}})
    assert config.prior == {"alpha_w": 9}
    assert config.search.restarts == 2
    assert config.mcmc is None
    assert RunConfig(prior=None).prior == {}


def test_run_config_rejects_unknown_prior_keys():
    with pytest.raises(ValidationError, match="unknown prior keys"):
        RunConfig(prior={"alpha": 1})
    with pytest.raises(ValidationError):
        RunConfig(search={"workers": 0})
