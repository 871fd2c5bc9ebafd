import random

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from surfclass.words import Letter, Word

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


@st.composite
def words(draw, min_pairs=1, max_pairs=6):
    """Random valid closed-surface words: each symbol occurs exactly twice."""
    k = draw(st.integers(min_value=min_pairs, max_value=max_pairs))
    slots = list(range(2 * k))
    perm = draw(st.permutations(slots))
    exps = [draw(st.sampled_from([1, -1])) for _ in slots]
    letters = tuple(Letter(f"s{perm[i] // 2}", exps[i]) for i in slots)
    return Word(letters)


@pytest.fixture
def rng():
    return random.Random(0x5EED)


def random_word(rng, max_pairs=6, min_pairs=1, prefix="s"):
    k = rng.randint(min_pairs, max_pairs)
    letters = []
    for i in range(k):
        letters.append(Letter(f"{prefix}{i}", rng.choice([1, -1])))
        letters.append(Letter(f"{prefix}{i}", rng.choice([1, -1])))
    rng.shuffle(letters)
    return Word(tuple(letters))
