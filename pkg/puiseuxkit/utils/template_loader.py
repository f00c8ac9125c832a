"""
Template loader for the human-readable CLI output.
"""
from pathlib import Path
from typing import Dict, Optional

from ..config import get_settings


class TemplateLoader:
    """Loads and fills str.format templates from text files."""

    def __init__(self, templates_dir: Optional[str] = None):
        self.templates_dir = Path(templates_dir or get_settings().templates_dir)
        self._template_cache: Dict[str, str] = {}

    def load_template(self, filename: str) -> str:
        """
        Load a template from a text file.

        Args:
            filename: Name of the template file (with or without .txt extension)

        Returns:
            Template content with the trailing newline stripped

        Raises:
            FileNotFoundError: If the template file doesn't exist
        """
        if not filename.endswith(".txt"):
            filename += ".txt"

        if filename in self._template_cache:
            return self._template_cache[filename]

        template_path = self.templates_dir / filename
        if not template_path.exists():
            raise FileNotFoundError(f"Template file not found: {template_path}")

        content = template_path.read_text(encoding="utf-8").rstrip("\n")
        self._template_cache[filename] = content
        return content

    def format_template(self, filename: str, **kwargs) -> str:
        """
        Load and fill a template.

        Args:
            filename: Name of the template file
            **kwargs: Values for the template fields

        Returns:
            Filled template
        """
        template = self.load_template(filename)
        try:
            return template.format(**kwargs)
        except KeyError as e:
            raise ValueError(f"Missing variable in template {filename}: {e}")


# Global template loader instance, created on first use so that settings are read late
_template_loader: Optional[TemplateLoader] = None


def get_template_loader() -> TemplateLoader:
    global _template_loader
    if _template_loader is None:
        _template_loader = TemplateLoader()
    return _template_loader


def render(name: str, **kwargs) -> str:
    """
    Convenience function to fill the template of a subcommand.

    Args:
        name: Template name, usually the subcommand
        **kwargs: Values for the template fields

    Returns:
        Filled template
    """
    return get_template_loader().format_template(name, **kwargs)
