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

"""CSV and JSON writers for sweep results."""

import csv
import io
import json
import logging
import math
from typing import Any, Dict, List, Optional

from ..base import Base_Writer
from ..exceptions import OutputFormatError
from ..models.sweep import Sweep_Result


def _finite_or_none(value: Any) -> Any:
    """NaN and None both mean 'no value'."""
    if value is None:
        return None
    if isinstance(value, float) and not math.isfinite(value):
        return None
    return value


class CSV_Writer(Base_Writer):
    """Comma-separated table preceded by '#' metadata lines."""

    def __init__(self, significant_digits: int = 15):
        """
        Initialize CSV writer.

        Args:
            significant_digits: Digits printed for floating values
        """
        self.significant_digits = significant_digits
        self.logger = logging.getLogger(__name__)

    def get_supported_extensions(self) -> List[str]:
        return ['.csv']

    def format_value(self, value: Any) -> str:
        value = _finite_or_none(value)
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        if isinstance(value, float):
            return f"{value:.{self.significant_digits}g}"
        return str(value)

    def render(self, result: Sweep_Result) -> str:
        buffer = io.StringIO()
        meta = result.metadata
        buffer.write(f"# spec: {json.dumps(meta.get('spec', {}), sort_keys=True)}\n")
        for name, value in meta.get('constants', {}).items():
            buffer.write(f"# {name}: {self.format_value(value)}\n")
        for key in sorted(meta):
            if key in ('spec', 'constants'):
                continue
            buffer.write(f"# {key}: {meta[key]}\n")

        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(result.columns)
        for row in result.rows:
            writer.writerow([self.format_value(value) for value in row])
        self.logger.debug("Rendered %d CSV rows", result.row_count)
        return buffer.getvalue()


class JSON_Writer(Base_Writer):
    """Single JSON object {meta, axes, rows}; missing values are null."""

    def __init__(self, indent: Optional[int] = 2):
        self.indent = indent
        self.logger = logging.getLogger(__name__)

    def get_supported_extensions(self) -> List[str]:
        return ['.json']

    def to_document(self, result: Sweep_Result) -> Dict[str, Any]:
        rows = [{column: _finite_or_none(value) for column, value in zip(result.columns, row)}
                for row in result.rows]
        return {
            'meta': result.metadata,
            'axes': [axis.to_dict() for axis in result.spec.axes],
            'rows': rows,
        }

    def render(self, result: Sweep_Result) -> str:
        try:
            content = json.dumps(self.to_document(result), indent=self.indent, allow_nan=False)
        except (TypeError, ValueError) as e:
            raise OutputFormatError(f"Result cannot be written as JSON: {e}", format_name="json")
        self.logger.debug("Rendered %d JSON rows", result.row_count)
        return content + "\n"
