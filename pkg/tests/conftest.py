from pathlib import Path

import numpy as np
import pytest

from tidelens.config import load_config
from tidelens.engine import Engine
from tidelens.geodata import Dem

REPO = Path(__file__).resolve().parents[1]
SAMPLE = REPO / "data" / "sample"


def make_dem(values, cellsize=10.0, xll=0.0, yll=0.0, nodata=-9999.0) -> Dem:
    values = np.asarray(values, dtype=float)
    return Dem(
        ncols=values.shape[1],
        nrows=values.shape[0],
        xll=xll,
        yll=yll,
        cellsize=cellsize,
        nodata_value=nodata,
        values=values,
    )


@pytest.fixture(scope="session")
def sample_config():
    return load_config(SAMPLE / "config.json")


@pytest.fixture(scope="session")
def sample_engine(sample_config):
    return Engine(sample_config)
