import logging
import os
import sys

def setup_logger(name: str = "splitbup") -> logging.Logger:
    """Set up and configure logger. Reports own stdout, so logs go to stderr."""
    logger = logging.getLogger(name)
    level = os.getenv("LOG_LEVEL", "INFO").upper()
    logger.setLevel(level if isinstance(logging.getLevelName(level), int) else logging.INFO)

    # Create console handler
    handler = logging.StreamHandler(sys.stderr)

    # Create formatter
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S'
    )
    handler.setFormatter(formatter)

    # Add handler to logger
    if not logger.handlers:
        logger.addHandler(handler)

    return logger

def quiet_logger(quiet: bool = True) -> None:
    """--quiet: only warnings and errors."""
    if quiet:
        logger.setLevel(logging.WARNING)

# Create default logger instance
logger = setup_logger()
