import pytest

import osctun


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    # The first call per process pays JIT specialization; pay it up front so
    # timed assertions see steady-state speed.
    osctun.tunneling_exact(1)
    osctun.airy_ai(1.0)
    osctun.airy_ai(20.0)
    osctun.x_of_zeta(0.5)
    osctun.f_of_x(2.0)


@pytest.fixture()
def cfg():
    return osctun.QuadratureConfig()
