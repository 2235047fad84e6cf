import pytest

from hopfib.corpus import shipped_instance


@pytest.fixture(scope="session")
def instances():
    """The shipped corpus, built once per test session (qm2 is expensive)."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = shipped_instance(name)
        return cache[name]

    return get


@pytest.fixture(scope="session")
def q8_pair(instances):
    return instances("q8")


@pytest.fixture(scope="session")
def c3_pair(instances):
    return instances("c3")


@pytest.fixture(scope="session")
def c4c2_pair(instances):
    return instances("c4c2")


@pytest.fixture(scope="session")
def s3c2_pair(instances):
    return instances("s3c2")


@pytest.fixture(scope="session")
def qsl2_pair(instances):
    return instances("qsl2")


@pytest.fixture(scope="session")
def usl2_pair(instances):
    return instances("usl2")


@pytest.fixture(scope="session")
def qm2_pair(instances):
    return instances("qm2")
