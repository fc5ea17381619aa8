from .cs_value import CSValue



__all__ = ["CSValue"]
