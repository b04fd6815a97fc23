import pytest


@pytest.fixture(scope="session")
def sl4():
    from foldlie.liealg import build_algebra

    return build_algebra("sl", 4)


@pytest.fixture(scope="session")
def sp4():
    from foldlie.liealg import build_algebra

    return build_algebra("sp", 4)


@pytest.fixture(scope="session")
def so8():
    from foldlie.liealg import build_algebra

    return build_algebra("so", 8)


@pytest.fixture(scope="session")
def cd_sl4(sl4):
    from foldlie.liealg import build_chevalley

    return build_chevalley(sl4)


@pytest.fixture(scope="session")
def cd_so8(so8):
    from foldlie.liealg import build_chevalley

    return build_chevalley(so8)


@pytest.fixture(scope="session")
def fwd_a3():
    from foldlie.rootsys import folding_datum
    from foldlie.weyl import folding_weyl_data

    return folding_weyl_data(folding_datum("A3", 2))


@pytest.fixture(scope="session")
def fwd_d4_triality():
    from foldlie.rootsys import folding_datum
    from foldlie.weyl import folding_weyl_data

    return folding_weyl_data(folding_datum("D4", 3))
