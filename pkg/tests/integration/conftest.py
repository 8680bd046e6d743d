import pytest

from noneq_spectra.config import THREADS_ENV_VAR

DEGENERATE_DRIVEN = """\
scenario:
  name: degenerate
  kind: driven
system:
  labels: [a, b, c]
  energies: [0.0, 0.01, 1.0]
  dipoles:
    - {lower: a, upper: c}
    - {lower: b, upper: c}
pulse:
  duration_fs: 0.14
  carrier: 0.5
drive: {rabi: 0.0, frequency: 0.0}
numerics:
  grid: {min: 0.98, max: 1.01, points: 31}
"""


@pytest.fixture(autouse=True)
def single_threaded_env(monkeypatch):
    monkeypatch.delenv(THREADS_ENV_VAR, raising=False)


@pytest.fixture
def output_dir(tmp_path):
    return tmp_path / "out"


@pytest.fixture
def scenario_file(tmp_path):
    def write(text: str, name: str = "scenario.yaml"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return path

    return write
