from functools import wraps

from .rationals import to_rational, format_rational # noqa: F401

def memoize_property(f):
    """
    Caches a derived table (marginals, pair matrices, posteriors) on
    the instance under `_<name>`. Distributions never change after
    construction, so the first value stays valid. Goes under
    `@property`.
    """
    cached = f"_{f.__name__}"

    @wraps(f)
    def helper(obj):
        if not hasattr(obj, cached):
            setattr(obj, cached, f(obj))
        return getattr(obj, cached)
    return helper
