from .base import *

DEBUG = True

# Update logging for local development
LOGGING["loggers"]["carlitz_lab"]["level"] = "DEBUG"
LOGGING["loggers"]["carlitz_lab.carlitz"]["level"] = "DEBUG"
