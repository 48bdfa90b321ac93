import logging

LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

_handler: logging.Handler | None = None


def configure_logging(level: str | int = "WARNING") -> logging.Logger:
    """Attach a single stderr handler to the package logger.

    Calling it again only changes the level, so repeated CLI invocations in
    one process never duplicate output.
    """
    global _handler
    logger = logging.getLogger("chaincode")
    if _handler is None:
        _handler = logging.StreamHandler()
        _handler.setFormatter(logging.Formatter(LOG_FORMAT))
    if _handler not in logger.handlers:
        logger.addHandler(_handler)
    logger.setLevel(level)
    logger.propagate = False
    return logger
