import pytest

from config import (DEFAULT_CONFIG, SuiteConfig, check_flag_scale, check_grid_radius,
                    get_default_seed, load_config)
from errors import ScaleError


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    monkeypatch.delenv('SPRINGERKIT_MAX_N', raising=False)
    monkeypatch.delenv('SPRINGERKIT_SEED', raising=False)
    monkeypatch.setattr('config.load_dotenv', lambda: None)


def test_defaults():
    config = load_config()
    assert config == DEFAULT_CONFIG
    assert config.allowed_flag_q == (3, 5)
    assert config.max_flag_n == 8
    assert get_default_seed() == 7


def test_env_overrides(monkeypatch):
    monkeypatch.setenv('SPRINGERKIT_MAX_N', '9')
    monkeypatch.setenv('SPRINGERKIT_SEED', '123')
    config = load_config()
    assert config.max_flag_n == 9
    assert config.default_seed == 123
    check_flag_scale(9, 3)


def test_invalid_override_is_ignored(monkeypatch, capsys):
    monkeypatch.setenv('SPRINGERKIT_MAX_N', 'lots')
    assert load_config().max_flag_n == 8
    assert 'SPRINGERKIT_MAX_N' in capsys.readouterr().out


def test_flag_scale_guard():
    check_flag_scale(8, 5)
    with pytest.raises(ScaleError):
        check_flag_scale(9, 3)
    with pytest.raises(ScaleError):
        check_flag_scale(4, 7)
    check_flag_scale(4, 7, SuiteConfig(allowed_flag_q=(7,)))


def test_grid_radius_guard():
    check_grid_radius(3)
    with pytest.raises(ScaleError):
        check_grid_radius(4)
    with pytest.raises(ScaleError):
        check_grid_radius(-1)
