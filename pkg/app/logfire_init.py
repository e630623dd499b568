import sys

import logfire
from loguru import logger

from app.config import get_settings


def init_logfire() -> None:
    settings = get_settings()
    logfire.configure(send_to_logfire="if-token-present", token=settings.LOGFIRE_TOKEN, service_name=settings.PROJECT_NAME, console=False)
    logfire.instrument_pydantic()
    logger.configure(
        handlers=[
            {"sink": sys.stderr, "level": settings.LOG_LEVEL},
            logfire.loguru_handler(),
        ]
    )
