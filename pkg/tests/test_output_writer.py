"""
Tests for the output writer.
"""

import json
import shutil
import tempfile
from pathlib import Path
from unittest.mock import patch

import pytest

from ckcas.core.exceptions import OutputError
from ckcas.file_handlers.output_writer import OutputWriter


class TestOutputWriter:
    """Test cases for OutputWriter class."""

    def setup_method(self):
        """Set up test fixtures."""
        self.temp_dir = tempfile.mkdtemp()
        self.output_dir = Path(self.temp_dir) / "output"
        self.writer = OutputWriter(str(self.output_dir))

    def teardown_method(self):
        """Clean up test fixtures."""
        shutil.rmtree(self.temp_dir, ignore_errors=True)

    def test_write_text(self):
        """Test writing a text rendering with directory creation."""
        assert self.writer.write_text("C1 = Ω01²\n", "so3/casimirs.txt")
        written = (self.output_dir / "so3" / "casimirs.txt").read_text(encoding='utf-8')
        assert written == "C1 = Ω01²\n"

    def test_write_latex_adds_extension(self):
        """Test that LaTeX output without a suffix gets .tex."""
        assert self.writer.write_latex("\\Omega_{01}", "c1")
        assert (self.output_dir / "c1.tex").exists()
        assert self.writer.resolve("c1", 'latex') == self.output_dir / "c1.tex"

    def test_given_suffix_is_kept(self):
        """Test that a suffix chosen by the caller is not rewritten."""
        with patch.object(self.writer.logger, 'warning') as warning:
            assert self.writer.write_text("C1 = Ω01²", "report.tex")
        assert (self.output_dir / "report.tex").read_text(encoding='utf-8') == "C1 = Ω01²"
        assert not (self.output_dir / "report.txt").exists()
        warning.assert_called_once()
        assert self.writer.resolve("report.tex", 'text') == self.output_dir / "report.tex"

    def test_matching_suffix_is_silent(self):
        """Test that no warning is logged when the suffix fits the format."""
        with patch.object(self.writer.logger, 'warning') as warning:
            assert self.writer.write_latex("x", "c2.TEX")
        warning.assert_not_called()

    def test_write_json(self):
        """Test dictionaries and pre-rendered JSON strings."""
        assert self.writer.write_json({'n': 2, 'label': "so(3)"}, "data.json")
        assert json.loads((self.output_dir / "data.json").read_text(encoding='utf-8')) == {'n': 2, 'label': "so(3)"}

        assert self.writer.write_json('{"n": 3}', "raw.json")
        assert (self.output_dir / "raw.json").read_text(encoding='utf-8') == '{"n": 3}'

        with pytest.raises(OutputError):
            self.writer.write_json("{not json", "bad.json")

    def test_write_file_detects_format(self):
        """Test format detection from the extension."""
        assert self.writer.write_file({'tau': 2}, "rank.json")
        assert self.writer.write_file("plain", "notes")
        assert (self.output_dir / "notes.txt").exists()
        with pytest.raises(OutputError):
            self.writer.write_file("x", "out.yaml", 'yaml')

    def test_non_string_content(self):
        """Test that text output must be a string."""
        with pytest.raises(OutputError):
            self.writer.write_text({'a': 1}, "bad.txt")

    def test_absolute_path(self):
        """Test that absolute paths bypass the output directory."""
        target = Path(self.temp_dir) / "elsewhere" / "c2.txt"
        assert self.writer.write_text("C2", str(target))
        assert target.read_text(encoding='utf-8') == "C2"

    def test_write_failure_returns_false(self):
        """Test that OS errors are reported as False."""
        with patch("builtins.open", side_effect=PermissionError("denied")):
            assert self.writer.write_text("C1", "locked.txt") is False
        assert not (self.output_dir / "locked.txt").exists()
