from .logger import ProcessContext, WorkflowLogger, get_logger

__all__ = ["ProcessContext", "WorkflowLogger", "get_logger"]
