"""FastAPI service over the geometry kernel."""

from .app import app, create_app

__all__ = ["app", "create_app"]
