"""Result writers for QGEM Sim."""

from .table_writers import CSV_Writer, JSON_Writer

__all__ = ['CSV_Writer', 'JSON_Writer']
