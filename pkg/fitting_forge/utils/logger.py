"""
Logging configuration
"""

import logging
from pythonjsonlogger import jsonlogger
from fitting_forge.config import settings


def get_logger(name: str) -> logging.Logger:
    """Get configured logger (JSON lines on stderr, stdout stays for reports)"""
    logger = logging.getLogger(name)
    logger.setLevel(settings.LOG_LEVEL)

    # JSON formatter
    logHandler = logging.StreamHandler()
    formatter = jsonlogger.JsonFormatter(
        "%(asctime)s %(name)s %(levelname)s %(message)s"
    )
    logHandler.setFormatter(formatter)

    if not logger.handlers:
        logger.addHandler(logHandler)
        logger.propagate = False

    return logger
