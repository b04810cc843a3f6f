"""
Status output
Emoji status lines on stderr, silent unless verbose
"""

import sys
from src.utils.settings import get_settings


def say(message: str) -> None:
    """Print a status line when verbose output is enabled"""
    if get_settings().verbose:
        print(message, file=sys.stderr)


def warn(message: str) -> None:
    """Warnings are always shown"""
    print(f"⚠️  {message}", file=sys.stderr)
