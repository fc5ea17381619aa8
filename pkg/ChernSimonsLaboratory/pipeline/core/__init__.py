from .engine import PipelineEngine, derivative_error
from .initializer import PipelineInitializer



__all__ = ["PipelineEngine", "derivative_error", "PipelineInitializer"]
