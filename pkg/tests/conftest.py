import os

from hypothesis import HealthCheck, settings

# Property tests are derandomized by default; set HYPOTHESIS_SEED (or pass
# --hypothesis-seed) to explore other examples reproducibly.
settings.register_profile(
    "ci",
    derandomize="HYPOTHESIS_SEED" not in os.environ,
    max_examples=60,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


def pytest_configure(config):
    seed = os.environ.get("HYPOTHESIS_SEED")
    if seed is not None and config.getoption("hypothesis_seed", None) is None:
        config.option.hypothesis_seed = int(seed)
