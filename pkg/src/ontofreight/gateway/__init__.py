"""HTTP service, CLI, and file-backed workspace."""

from .service import create_app
from .workspace import UnknownIdError, Workspace, WorkspaceError, content_id

__all__ = [
    "UnknownIdError",
    "Workspace",
    "WorkspaceError",
    "content_id",
    "create_app",
]
