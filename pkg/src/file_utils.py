"""File system helpers: repository root lookup and atomic report writes."""

import os
from pathlib import Path

from src.constants import ERROR_CANNOT_CREATE_DIR


def find_repo_root(start_path: str) -> str | None:
    """
    Find the repository root by searching for .git directory.

    Args:
        start_path: Path to start searching from.

    Returns:
        Path to repository root, or None if not found.
    """
    current = Path(start_path).resolve()

    while current != current.parent:
        if (current / ".git").exists():
            return str(current)
        current = current.parent

    return None


def ensure_output_directory(output_path: str) -> None:
    """
    Ensure the parent directory exists for the output path.

    Raises:
        PermissionError: If cannot create the directory.
    """
    parent_dir = os.path.dirname(output_path)
    if parent_dir and not os.path.exists(parent_dir):
        try:
            os.makedirs(parent_dir, exist_ok=True)
        except OSError as e:
            raise PermissionError(
                ERROR_CANNOT_CREATE_DIR.format(parent_dir=parent_dir, error=e)
            ) from e


def write_report(output_path: str, text: str) -> None:
    """
    Write a report so that readers never observe a partial file.

    Args:
        output_path: Destination file.
        text: Full report contents.
    """
    ensure_output_directory(output_path)
    path = Path(output_path)
    temp_path = path.with_suffix(path.suffix + ".tmp")
    temp_path.write_text(text)
    temp_path.replace(path)  # Atomic on POSIX systems
