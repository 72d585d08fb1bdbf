"""Error taxonomy shared by the library and the command line tool.

SchemaError: malformed input (bad JSON, wrong field, inconsistent dimensions).
PreconditionError: well-formed input outside a mathematical hypothesis.
ResourceLimitError: input exceeds a configured size guard.
"""

from __future__ import annotations


class SchemaError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


class ResourceLimitError(RuntimeError):
    pass
