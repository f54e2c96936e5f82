import logging
from logging import Logger, Handler


class GapLogger(Logger):
    def __init__(self, name: str, enabled: bool) -> None:
        super().__init__(name)
        self.enabled = enabled



    def debug(self, msg, *args, **kwargs):
        to_stdout = kwargs.pop('to_stdout', False)
        if self.isEnabledFor(logging.DEBUG) and self.enabled:
            super().debug(msg, *args, **kwargs)
            if to_stdout:
                print(msg)



    def info(self, msg, *args, **kwargs):
        to_stdout = kwargs.pop('to_stdout', False)
        if self.isEnabledFor(logging.INFO) and self.enabled:
            super().info(msg, *args, **kwargs)
            if to_stdout:
                print(msg)



    def warning(self, msg, *args, **kwargs):
        to_stdout = kwargs.pop('to_stdout', False)
        if self.isEnabledFor(logging.WARNING) and self.enabled:
            super().warning(msg, *args, **kwargs)
            if to_stdout:
                print(msg)



    def error(self, msg, *args, **kwargs):
        to_stdout = kwargs.pop('to_stdout', False)
        if self.isEnabledFor(logging.ERROR) and self.enabled:
            super().error(msg, *args, **kwargs)
            if to_stdout:
                print(msg)



    def addHandler(self, hdlr: Handler) -> None:
        if self.enabled:
            return super().addHandler(hdlr)



# Shared silent logger for library calls made without one
SILENT = GapLogger(__name__, enabled=False)


def resolve_logger(logger: 'GapLogger | None') -> GapLogger:
    """
    Return the given logger, or the shared silent one

    :param logger: Logger passed by the caller, may be None
    """
    return logger if logger is not None else SILENT
