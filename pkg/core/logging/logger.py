# core/logging/logger.py

import logging
import threading
import time
import uuid
from contextlib import contextmanager
from dataclasses import dataclass, field
from typing import Dict, Optional

ROOT_LOGGER = "carlitz_lab"
WORKFLOW_HANDLER = "workflow_file"


@dataclass
class ProcessContext:
    """Tracks one unit of work (a computation, a table run, a self-check)"""

    workflow_id: str = field(default_factory=lambda: str(uuid.uuid4())[:8])
    component: str = ""
    start_time: float = field(default_factory=time.perf_counter)
    metadata: Dict = field(default_factory=dict)

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start_time


def _ensure_default_handler() -> Optional[logging.Handler]:
    """Return the configured workflow handler; without one, give the lab loggers stderr"""
    workflow_handler = logging.getHandlerByName(WORKFLOW_HANDLER)
    if workflow_handler is not None:
        return workflow_handler
    root_logger = logging.getLogger(ROOT_LOGGER)
    if not root_logger.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(
            logging.Formatter(
                "%(asctime)s [%(levelname)s] %(name)s: %(workflow_id)s%(message)s",
                datefmt="%Y-%m-%d %H:%M:%S",
                defaults={"workflow_id": ""},
            )
        )
        root_logger.addHandler(handler)
    return None


class WorkflowLogger:
    """Logger that tags records with the workflow they belong to.

    The active context is kept per thread, so one module-level logger can be
    shared by concurrent computations.
    """

    def __init__(self, name: str):
        self.logger = logging.getLogger(name)
        self.workflow_logger = logging.getLogger(f"{name}.workflow")
        self._local = threading.local()

        workflow_handler = _ensure_default_handler()
        if workflow_handler and not any(
            h.get_name() == WORKFLOW_HANDLER for h in self.workflow_logger.handlers
        ):
            self.workflow_logger.addHandler(workflow_handler)

    @property
    def context(self) -> Optional[ProcessContext]:
        return getattr(self._local, "context", None)

    def _get_extra(self, extra: Optional[Dict] = None) -> Dict:
        extra_dict = dict(extra or {})
        context = self.context
        if context:
            extra_dict["workflow_id"] = f"[{context.workflow_id}] "
            extra_dict.update(context.metadata)
        else:
            extra_dict["workflow_id"] = ""
        return extra_dict

    def _log(self, level: int, message: str, exc_info=None, **kwargs):
        target = self.workflow_logger if self.context else self.logger
        if target.isEnabledFor(level):
            target.log(level, message, exc_info=exc_info, extra=self._get_extra(kwargs))

    def debug(self, message: str, **kwargs):
        self._log(logging.DEBUG, message, **kwargs)

    def info(self, message: str, **kwargs):
        self._log(logging.INFO, message, **kwargs)

    def warning(self, message: str, **kwargs):
        self._log(logging.WARNING, message, **kwargs)

    def error(self, message: str, **kwargs):
        self._log(logging.ERROR, message, **kwargs)

    def exception(self, message: str, **kwargs):
        self._log(logging.ERROR, message, exc_info=True, **kwargs)

    def isEnabledFor(self, level: int) -> bool:
        return self.logger.isEnabledFor(level)

    @contextmanager
    def workflow_context(self, component: str, **metadata):
        """Run a block as a named workflow; logs start and finish with duration"""
        previous_context = self.context
        context = ProcessContext(component=component, metadata=metadata)
        self._local.context = context
        try:
            self.debug(f"Starting {component} workflow")
            yield context
        finally:
            self.debug(f"Completed {component} workflow", duration=f"{context.elapsed:.3f}s")
            self._local.context = previous_context


def get_logger(name: str) -> WorkflowLogger:
    """Get a workflow-aware logger for a component"""
    return WorkflowLogger(name)
