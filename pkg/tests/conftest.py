import math

import numpy as np
import pytest

from annuli.surface import AnnulusSurface

# Reference values minted once with mpmath at 30-40 significant digits
# (mp.agm, mp.ellipk, and bisection on 2*pi*c/agm(1, c) = 2*pi/n).
AGM_1_06 = 0.78724710072991108286
K_08 = 1.9953027776647294038
K_SQRT_019 = 1.6546166675225269355
PERIOD_09 = 5.9566200030810970393
PERIOD_05 = 4.3130312949992864709
C_MODE = {
    2: 0.29825913882794720167,
    3: 0.16279197620157892872,
    50: 0.0046491113237111677214,
}
SUP_A_MODE2 = 4.5257474481122884169
AREA_MODE2 = 27.535429317441277415
K_MINUS_LOG_AT_KP_1E4 = 2.3991586965349e-8


def control_surface():
    """Non-minimal profile r = pi/2 + 0.3 sin t."""
    return AnnulusSurface.from_profile(
        lambda t: 0.5 * math.pi + 0.3 * np.sin(t),
        lambda t: 0.3 * np.cos(t),
        lambda t: -0.3 * np.sin(t),
    )


@pytest.fixture(scope="session")
def mode_surfaces():
    return {n: AnnulusSurface.from_mode(n) for n in (2, 3, 5, 10)}


@pytest.fixture(scope="session")
def control():
    return control_surface()


@pytest.fixture
def rng():
    return np.random.default_rng(20241016)


_ACCEPTANCE = []


@pytest.fixture
def criterion():
    """Record one acceptance line; the summary hook prints them all at the end."""
    def record(number: int, ok: bool, detail: str):
        line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
        _ACCEPTANCE.append((number, line))
        print(line)
        return ok
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for _, line in sorted(_ACCEPTANCE):
            terminalreporter.write_line(line)
