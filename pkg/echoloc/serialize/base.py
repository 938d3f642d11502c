"""Base class for artifact serializers."""

from typing import Any


class BaseSerializer:
    """Base class for artifact serializers."""

    extension = ""
    """File extension of the emitted artifacts."""

    def serialize(self, payload: Any) -> str:
        """Render ``payload`` as text."""
        raise NotImplementedError("Must be implemented by a child class")
