# CSV, JSON and Excel export for sweep tables and verdicts

import io
import json
import logging
import sys

import numpy as np
import pandas as pd
from openpyxl import Workbook
from openpyxl.styles import Alignment, Font, PatternFill
from openpyxl.utils import get_column_letter

from .config import FLOAT_FORMAT
from .utils import get_timestamp

logger = logging.getLogger(__name__)

UNITS = {
    "k": "photons",
    "n1": "photons",
    "n2": "photons",
    "R": "1",
    "s": "1",
    "s2": "1",
    "phi": "rad",
    "nbar": "photons",
    "entropy_nats": "nats",
    "entropy_bits": "bits",
    "decision": "",
    "duan_lhs": "1",
    "duan_rhs": "1",
    "ppt_min_symplectic": "1",
}


def units_row(columns):
    return [UNITS.get(column, "") for column in columns]


def format_csv(frame):
    """Header row, units row, then data with 12 significant digits"""
    buffer = io.StringIO()
    pd.DataFrame([units_row(frame.columns)], columns=frame.columns).to_csv(
        buffer, index=False, lineterminator="\n"
    )
    frame.to_csv(buffer, index=False, header=False, float_format=FLOAT_FORMAT, lineterminator="\n")
    return buffer.getvalue()


def _json_default(value):
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, complex):
        return [value.real, value.imag]
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError(f"cannot serialise {type(value).__name__}")


def format_json(payload):
    return json.dumps(payload, indent=2, sort_keys=True, default=_json_default) + "\n"


def _write_text(text, output):
    if output in (None, "-"):
        sys.stdout.write(text)
        return
    with open(output, mode="w", newline="", encoding="utf-8") as handle:
        handle.write(text)
    logger.info(f"Report saved to: {output}")


def write_csv(frame, output="-"):
    _write_text(format_csv(frame), output)


def write_json(payload, output="-"):
    _write_text(format_json(payload), output)


def add_watermark_to_sheet(sheet, watermark_text):
    """Add watermark below the table"""
    row = sheet.max_row + 2
    cell = sheet.cell(row=row, column=1)
    cell.value = watermark_text
    cell.font = Font(italic=True, color="888888", size=10)
    cell.alignment = Alignment(horizontal="left", vertical="center")


def _autosize_columns(sheet):
    for column in sheet.columns:
        max_length = max((len(str(cell.value)) for cell in column if cell.value is not None), default=0)
        sheet.column_dimensions[get_column_letter(column[0].column)].width = (max_length + 2) * 1.2


def _fill_sheet(sheet, frame):
    header_font = Font(bold=True, color="FFFFFF")
    header_fill = PatternFill(start_color="366092", end_color="366092", fill_type="solid")
    for j, column in enumerate(frame.columns, start=1):
        cell = sheet.cell(row=1, column=j, value=str(column))
        cell.font = header_font
        cell.fill = header_fill
        cell.alignment = Alignment(horizontal="center")
        sheet.cell(row=2, column=j, value=UNITS.get(column, "")).font = Font(italic=True)
    for i, row in enumerate(frame.itertuples(index=False), start=3):
        for j, value in enumerate(row, start=1):
            sheet.cell(row=i, column=j, value=value.item() if isinstance(value, np.generic) else value)
    sheet.freeze_panes = "A3"
    _autosize_columns(sheet)


def write_xlsx(frames, output):
    """One styled sheet per table; frames maps sheet title -> DataFrame"""
    workbook = Workbook()
    workbook.remove(workbook.active)
    for title, frame in frames.items():
        _fill_sheet(workbook.create_sheet(title[:31]), frame)

    watermark_text = f"Beam-splitter entanglement report - Generated on {get_timestamp()}"
    for sheet in workbook.worksheets:
        add_watermark_to_sheet(sheet, watermark_text)
    workbook.save(output)
    logger.info(f"Excel report saved to: {output}")
    return output
