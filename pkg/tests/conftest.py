import pytest

from armkin import default_config


@pytest.fixture
def config():
    return default_config()


@pytest.fixture
def links(config):
    return config.links
