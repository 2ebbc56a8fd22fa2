"""
Logging Handler - Custom handler for collecting diagnostics into reports
"""

import logging
from typing import Callable


class DiagnosticHandler(logging.Handler):
    """
    Logging handler that forwards formatted records to a sink callable

    The sink receives (message, levelno); the view model uses it to attach
    warnings raised during a run to the result it returns.
    """

    def __init__(self, sink: Callable[[str, int], None], level: int = logging.WARNING):
        super().__init__(level)
        self.sink = sink

        formatter = logging.Formatter('%(message)s')
        self.setFormatter(formatter)

    def emit(self, record):
        """Forward record to the sink"""
        try:
            msg = self.format(record)
            self.sink(msg, record.levelno)
        except Exception:
            self.handleError(record)
