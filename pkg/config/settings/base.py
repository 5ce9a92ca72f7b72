from pathlib import Path

from decouple import config

# Build paths inside the project like this: BASE_DIR / 'subdir'.
BASE_DIR = Path(__file__).resolve().parent.parent.parent

# Logging configuration
LOG_DIR = Path(config("LOG_DIR", default=str(BASE_DIR / "logs")))
LOG_DIR.mkdir(exist_ok=True, parents=True)

LOG_LEVEL = config("LOG_LEVEL", default="INFO")

# Command output goes to stdout; every handler here writes to stderr or files
LOGGING = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "verbose": {
            "format": "{asctime} [{levelname}] {name}: {message}",
            "style": "{",
        },
        "workflow": {
            "format": "{asctime} [{levelname}] {name}: {workflow_id}{message}",
            "style": "{",
            "defaults": {"workflow_id": ""},
        },
    },
    "filters": {
        "has_workflow_id": {
            "()": "django.utils.log.CallbackFilter",
            "callback": lambda record: bool(getattr(record, "workflow_id", "")),
        }
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "stream": "ext://sys.stderr",
            "formatter": "verbose",
        },
        "file": {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": str(LOG_DIR / "carlitz_lab.log"),
            "formatter": "verbose",
            "maxBytes": 10_485_760,  # 10MB
            "backupCount": 5,
        },
        "workflow_file": {
            "class": "logging.handlers.RotatingFileHandler",
            "filename": str(LOG_DIR / "workflow.log"),
            "formatter": "workflow",
            "filters": ["has_workflow_id"],
            "maxBytes": 10_485_760,  # 10MB
            "backupCount": 5,
        },
    },
    "loggers": {
        "django": {
            "handlers": ["console", "file"],
            "level": "WARNING",
        },
        # workflow_file is attached by core.logging to the .workflow child loggers
        "carlitz_lab": {
            "handlers": ["console", "file"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
        "carlitz_lab.carlitz": {
            "handlers": ["console", "file"],
            "level": LOG_LEVEL,
            "propagate": False,
        },
    },
}

# SECURITY WARNING: only used for Django's signing helpers; nothing is served
SECRET_KEY = config("SECRET_KEY", default="carlitz-lab-not-a-web-service")

DEBUG = config("DEBUG", default=False, cast=bool)

ALLOWED_HOSTS = []

# Application definition
LOCAL_APPS = [
    "core.apps.CoreConfig",
    "carlitz.apps.CarlitzConfig",
]

INSTALLED_APPS = LOCAL_APPS

# No database: every value is computed on demand
DATABASES = {}

# Carlitz lab
CARLITZ_LAB_THREADS = config("CARLITZ_LAB_THREADS", default=1, cast=int)
CARLITZ_LAB_MAX_TABLE_N = config("CARLITZ_LAB_MAX_TABLE_N", default=100_000, cast=int)
CARLITZ_LAB_QUOTIENT_MAX_N = config("CARLITZ_LAB_QUOTIENT_MAX_N", default=24, cast=int)

# Internationalization
LANGUAGE_CODE = "en-us"
TIME_ZONE = "UTC"
USE_I18N = False
USE_TZ = True
