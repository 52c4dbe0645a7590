"""commands/__init__.py"""

from . import bounds, extremal, registry, verify

__all__ = ["bounds", "extremal", "registry", "verify"]
