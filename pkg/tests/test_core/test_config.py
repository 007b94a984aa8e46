from lienil.core.config import Settings, current_settings, get_settings, set_settings


def test_defaults():
    settings = Settings()
    assert settings.search_bound == 2
    assert settings.fock_levels == 6
    assert settings.fock_check_levels == (6, 10)
    assert not settings.strict_nilpotent


def test_current_settings_nest_and_restore():
    before = get_settings()
    with current_settings(search_bound=4) as outer:
        assert outer.search_bound == 4
        with current_settings(fock_levels=8) as inner:
            assert inner.search_bound == 4
            assert inner.fock_levels == 8
        assert get_settings() == outer
    assert get_settings() == before


def test_set_settings_returns_a_reset():
    before = get_settings()
    reset = set_settings(strict_nilpotent=True)
    assert get_settings().strict_nilpotent
    reset()
    assert get_settings() == before
