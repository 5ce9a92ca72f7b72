# config/settings/test.py
from .base import *

CARLITZ_LAB_THREADS = 1
CARLITZ_LAB_MAX_TABLE_N = 100_000
CARLITZ_LAB_QUOTIENT_MAX_N = 24

# Keep logging out of test output; records still propagate to caplog
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "handlers": {
        "null": {
            "class": "logging.NullHandler",
        },
    },
    "loggers": {
        "carlitz_lab": {
            "handlers": ["null"],
            "level": "DEBUG",
            "propagate": True,
        },
    },
    "root": {
        "handlers": ["null"],
        "level": "CRITICAL",
    },
}
