# Copyright (c) 2026 QGEM Sim Team
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

"""Abstract base class for QGEM Sim result writers."""

from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional

from .exceptions import OutputFormatError
from .models.sweep import Sweep_Result


class Base_Writer(ABC):
    """Abstract base class for result table writers."""

    @abstractmethod
    def render(self, result: Sweep_Result) -> str:
        """
        Render a result table as text.

        Args:
            result: Sweep_Result to render

        Returns:
            Complete file content; identical results render identically

        Raises:
            OutputFormatError: If the result cannot be represented
        """
        pass

    @abstractmethod
    def get_supported_extensions(self) -> List[str]:
        """
        Get list of supported output extensions.

        Returns:
            List of supported output extensions (e.g., ['.csv'])
        """
        pass

    def write_result(self, result: Sweep_Result, output_file: Path) -> Path:
        """
        Render a result and write it as UTF-8 with '\\n' line endings.

        Args:
            result: Sweep_Result to write
            output_file: Path to output file

        Returns:
            Path that was written

        Raises:
            OutputFormatError: If the file cannot be written
        """
        output_file = Path(output_file)
        content = self.render(result)
        try:
            output_file.parent.mkdir(parents=True, exist_ok=True)
            with open(output_file, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(content)
        except OSError as e:
            raise OutputFormatError(f"Cannot write result file: {e}",
                                    output_file=str(output_file))
        return output_file

    def validate_output_path(self, output_file: Path) -> bool:
        """
        Validate that the output path is supported.

        Args:
            output_file: Path to output file

        Returns:
            True if output format is supported
        """
        return Path(output_file).suffix.lower() in self.get_supported_extensions()


class Format_Detector:
    """Utility class for detecting result file formats."""

    def __init__(self):
        self.format_mappings = {
            '.csv': 'csv',
            '.json': 'json',
        }

    def detect_format(self, filepath: Path) -> Optional[str]:
        """
        Detect format from file path.

        Args:
            filepath: Path to file

        Returns:
            Format string or None if unknown
        """
        return self.get_format_from_extension(Path(filepath).suffix)

    def get_format_from_extension(self, extension: str) -> Optional[str]:
        """
        Get format from file extension.

        Args:
            extension: File extension (with or without dot)

        Returns:
            Format string or None if unknown
        """
        if not extension.startswith('.'):
            extension = '.' + extension
        return self.format_mappings.get(extension.lower())
