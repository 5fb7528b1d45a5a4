"""Content digests for input files."""

import hashlib
from pathlib import Path


def content_digest(data: bytes) -> str:
    """
    Digest of raw bytes.

    Args:
        data: The bytes to hash

    Returns:
        ``sha256:<hex>``
    """
    return "sha256:" + hashlib.sha256(data).hexdigest()


def file_digest(path: str | Path) -> str | None:
    """Digest of a file's contents, or None when it cannot be read."""
    try:
        return content_digest(Path(path).read_bytes())
    except OSError:
        return None
