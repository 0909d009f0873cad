import pytest


def pytest_addoption(parser: pytest.Parser) -> None:
    parser.addoption(
        "--run-slow",
        action="store_true",
        default=False,
        help="Run tests marked as 'slow' (acceptance-size homology computations)",
    )


def pytest_runtest_setup(item: pytest.Item) -> None:
    if "slow" in item.keywords and not item.config.getoption("--run-slow"):
        pytest.skip("skipping slow test (use --run-slow to enable)")
