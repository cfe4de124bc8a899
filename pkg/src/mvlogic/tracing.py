"""Optional braintrust spans around the expensive operations.

Spans are recorded only when the `tracing` extra is installed and BRAINTRUST_API_KEY is
set; otherwise `traced` hands the function back untouched.
"""

import os
from collections.abc import Callable
from typing import Any, TypeVar


F = TypeVar('F', bound=Callable[..., Any])

try:
    from braintrust import traced as braintrust_traced

    BRAINTRUST_AVAILABLE = True
except ImportError:
    BRAINTRUST_AVAILABLE = False


def tracing_enabled() -> bool:
    return BRAINTRUST_AVAILABLE and bool(os.getenv('BRAINTRUST_API_KEY'))


def traced(type: str | None = None, name: str | None = None) -> Callable[[F], F]:  # noqa: A002
    def decorator(func: F) -> F:
        if not tracing_enabled():
            return func
        span_name = name or f'mvlogic.{func.__name__}'
        return braintrust_traced(name=span_name, type=type)(func)  # type: ignore

    return decorator
