"""
Shared pytest configuration and fixtures.
"""

import pytest

from semichain.finsemi import FamilySpec, build_family, parse_family


def pytest_addoption(parser):
    parser.addoption(
        "--long-run",
        action="store_true",
        default=False,
        help="run the searches marked long_run",
    )


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: searches that take more than a few seconds")
    config.addinivalue_line("markers", "long_run: searches only run with --long-run")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--long-run"):
        return
    skip_long = pytest.mark.skip(reason="needs --long-run")
    for item in items:
        if "long_run" in item.keywords:
            item.add_marker(skip_long)


@pytest.fixture
def family():
    """Build a family table from its command line string."""

    def _build(text: str):
        return build_family(parse_family(text))

    return _build


@pytest.fixture
def rectangular_band():
    """The 2 x 3 rectangular band, as a Rees matrix semigroup over the trivial group."""
    trivial = build_family(FamilySpec.cyclic_group(1))
    return build_family(FamilySpec.rees_matrix(trivial, 2, 3, [[0, 0], [0, 0], [0, 0]]))


@pytest.fixture
def isolated_config(monkeypatch):
    """A graph config that ignores environment overrides."""
    for name in (
        "SEMICHAIN_SIZE_CAP",
        "SEMICHAIN_THREADS",
        "SEMICHAIN_MAX_SUBSEMIGROUPS",
        "SEMICHAIN_MAX_MILLIS",
    ):
        monkeypatch.delenv(name, raising=False)
    return {"threads": 1}
