import random

import pytest
from hypothesis import settings

from origami_lab.core import NotConnected, Origami, random_perm

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")

_ACCEPTANCE = pytest.StashKey[dict]()


def random_origami(n: int, rng: random.Random) -> Origami:
    """A uniformly random pair of permutations, redrawn until connected."""
    while True:
        try:
            return Origami(random_perm(n, rng), random_perm(n, rng))
        except NotConnected:
            continue


def random_corpus(count: int = 20, seed: int = 11, sizes=range(2, 10)) -> list[Origami]:
    rng = random.Random(seed)
    sizes = list(sizes)
    return [random_origami(sizes[k % len(sizes)], rng) for k in range(count)]


@pytest.fixture
def acceptance_log(request):
    return request.config.stash.setdefault(_ACCEPTANCE, {})


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    log = config.stash.get(_ACCEPTANCE, {})
    if not log:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(log):
        status, title = log[k]
        terminalreporter.write_line(f"criterion {k}: {status}  {title}")
