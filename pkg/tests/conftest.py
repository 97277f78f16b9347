import pytest

from hopfcheck.catalog import BUILTIN_BUILDERS, builtin
from hopfcheck.duality import pair_system

BUILTIN_NAMES = list(BUILTIN_BUILDERS)


@pytest.fixture(scope="session")
def algebras():
    """One shared instance per builtin; they are immutable."""
    return {name: builtin(name) for name in BUILTIN_NAMES}


@pytest.fixture(scope="session")
def paired(algebras):
    """Lazily paired systems, built at most once per session."""
    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = pair_system(algebras[name])
        return cache[name]

    return get


@pytest.fixture(scope="session")
def suite_reports(paired):
    """Hard-coded verification suites, run at most once per builtin."""
    from hopfcheck.verify import run_all_checks

    cache = {}

    def get(name):
        if name not in cache:
            cache[name] = run_all_checks(paired(name))
        return cache[name]

    return get
