"""
File output for ckcas artifacts.

Writes rendered invariants and reports as text, LaTeX or JSON, with
extension handling and directory creation.
"""

import json
from pathlib import Path
from typing import Any, Dict, List, Union

from ckcas.core.exceptions import OutputError
from ckcas.core.logging_config import get_logger


class OutputWriter:
    """
    Writes ckcas artifacts below an output directory.

    Relative paths are resolved against the output directory; absolute
    paths are used as given.
    """

    def __init__(self, output_dir: str = "output", create_dirs: bool = True, encoding: str = 'utf-8'):
        """
        Initialize the output writer.

        Args:
            output_dir: Base directory for output files
            create_dirs: Whether to create directories automatically
            encoding: Encoding of every written file
        """
        self.logger = get_logger(__name__)
        self.output_dir = Path(output_dir)
        self.create_dirs = create_dirs
        self.encoding = encoding

        self.format_extensions = {
            'text': ['.txt'],
            'latex': ['.tex'],
            'json': ['.json'],
        }

    def write_text(self, content: str, output_path: str) -> bool:
        """
        Write a text rendering.

        Raises:
            OutputError: If the content is not a string
        """
        return self._write_string(content, output_path, 'text')

    def write_latex(self, content: str, output_path: str) -> bool:
        """Write a LaTeX rendering; a path without suffix gets ``.tex``."""
        return self._write_string(content, output_path, 'latex')

    def write_json(self, data: Union[Dict[str, Any], List, str], output_path: str, indent: int = 2) -> bool:
        """
        Write JSON data; strings are checked to be valid JSON and written verbatim.

        Raises:
            OutputError: If a string argument is not valid JSON
        """
        if isinstance(data, str):
            try:
                json.loads(data)
            except json.JSONDecodeError as e:
                raise OutputError("Invalid JSON string provided", str(e))
            content = data
        else:
            content = json.dumps(data, indent=indent, ensure_ascii=False) + "\n"
        return self._write_string(content, output_path, 'json')

    def write_file(self, content: Union[str, Dict, List], output_path: str, file_format: str = 'auto') -> bool:
        """
        Write with the format taken from the argument or the extension.

        Args:
            content: Content to write
            output_path: Path to output file
            file_format: ``text``, ``latex``, ``json`` or ``auto``

        Raises:
            OutputError: On an unsupported format
        """
        if file_format == 'auto':
            file_format = self._detect_format(output_path)
        writers = {
            'text': self.write_text,
            'latex': self.write_latex,
            'json': self.write_json,
        }
        writer = writers.get(file_format)
        if writer is None:
            raise OutputError("Unsupported file format", file_format)
        return writer(content, output_path)

    def _write_string(self, content: str, output_path: str, file_format: str) -> bool:
        if not isinstance(content, str):
            raise OutputError(f"{file_format} content must be a string")
        output_path = self._ensure_extension(output_path, file_format)
        success = self._write_file(content, output_path)
        if success:
            self.logger.info("%s file written: %s", file_format, output_path)
        return success

    def _write_file(self, content: str, output_path: str) -> bool:
        """Write content; failures are logged and reported as False."""
        try:
            full_path = self._resolve_output_path(output_path)
            if self.create_dirs:
                full_path.parent.mkdir(parents=True, exist_ok=True)
            with open(full_path, 'w', encoding=self.encoding) as f:
                f.write(content)
            self.logger.debug("File written: %s (%d characters)", full_path, len(content))
            return True
        except OSError as e:
            self.logger.error("Failed to write file %s: %s", output_path, e)
            return False

    def _resolve_output_path(self, output_path: str) -> Path:
        path = Path(output_path)
        return path if path.is_absolute() else self.output_dir / path

    def resolve(self, output_path: str, file_format: str) -> Path:
        """Final location of a file written with this format."""
        return self._resolve_output_path(self._ensure_extension(output_path, file_format, quiet=True))

    def _ensure_extension(self, output_path: str, file_format: str, quiet: bool = False) -> str:
        """Add the format's suffix when the path has none; a suffix the caller gave is kept."""
        path = Path(output_path)
        expected = self.format_extensions.get(file_format, [])
        if not expected or path.suffix.lower() in expected:
            return output_path
        if not path.suffix:
            return str(path.with_suffix(expected[0]))
        if not quiet:
            self.logger.warning(
                "Writing %s output to %s; its suffix does not match %s", file_format, output_path, expected[0]
            )
        return output_path

    def _detect_format(self, output_path: str) -> str:
        extension = Path(output_path).suffix.lower()
        for file_format, extensions in self.format_extensions.items():
            if extension in extensions:
                return file_format
        return 'text'
