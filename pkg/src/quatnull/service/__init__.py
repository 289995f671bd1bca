"""HTTP service subpackage; import `app` to mount or serve it."""

from .app import app

__all__ = ["app"]
