import logging


PACKAGE_LOGGER = "kannanfix"


def _package_logger():

    root = logging.getLogger(PACKAGE_LOGGER)

    # one stderr handler for the whole package; child loggers propagate
    if not root.handlers:

        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter('%(levelname)s: %(message)s'))

        root.addHandler(handler)
        root.setLevel(logging.INFO)

    return root


def create_logger(name=None, level=logging.INFO):
    """
    Logger `kannanfix.<name>` at the given level. Without a name the
    package logger itself is returned.
    """
    root = _package_logger()

    if name is None:
        return root

    logger = root.getChild(name)
    logger.setLevel(level)

    return logger
