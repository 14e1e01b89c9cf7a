import sys
from pathlib import Path

import numpy as np
from hypothesis import HealthCheck, settings

from seqshape import Sequence

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def seq(symbols, ns):
    return Sequence(symbols=np.asarray(symbols, dtype=np.int64), ns=ns)
