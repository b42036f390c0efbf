# ========================================
# Import Python Modules (Standard Library)
# ========================================
import csv
import dataclasses
import json
import math

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.utils.customprintreslib import format_number

# =======
# Classes
# =======
class ReportManagerCls:
    """
    Class that serializes the run results: sweep tables as CSV
    files, every other result as JSON with a stable key order.
    Floating-point numbers are written with a fixed number of
    significant digits so that identical runs give identical files.
    """
    # === Constructor ===
    def __init__(self, significant_digits=12):
        """
        Class constructor. Input arguments:
        -) significant_digits: Integer specifying the significant
        digits of every serialized float.
        """
        # Attribute initialization
        self.significant_digits = significant_digits

    # === Protected Method ===
    def _to_serializable(self, obj):
        """
        Method that maps results (dataclasses, numpy values,
        tuples) into JSON-compatible objects. Floats are rounded
        to the configured significant digits; nan and inf become
        None.
        """
        if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
            return {field.name: self._to_serializable(getattr(obj, field.name))
                    for field in dataclasses.fields(obj)}
        if isinstance(obj, dict):
            return {str(key): self._to_serializable(value) for key, value in obj.items()}
        if isinstance(obj, (list, tuple, np.ndarray)):
            return [self._to_serializable(elem) for elem in obj]
        if isinstance(obj, (bool, np.bool_)):
            return bool(obj)
        if isinstance(obj, (int, np.integer)):
            return int(obj)
        if isinstance(obj, (float, np.floating)):
            if not math.isfinite(obj):
                return None
            return float(format_number(float(obj), self.significant_digits))
        return obj

    # === Method ===
    def write_csv_report(self, report_full_path, fieldnames, rows):
        """
        Method that writes a CSV report: header row, then one row
        per dictionary in rows, in the given order.
        """
        with open(report_full_path, mode='w', newline='') as csv_file_obj:
            csv_writer = csv.DictWriter(csv_file_obj, fieldnames=fieldnames)
            csv_writer.writeheader()
            for row in rows:
                csv_writer.writerow({key: format_number(value, self.significant_digits) for key, value in row.items()})
        print(f'--- CSV report written: {report_full_path} ---')

    # === Method ===
    def write_json_report(self, report_full_path, content):
        """
        Method that writes a JSON report with sorted keys.
        """
        with open(report_full_path, mode='w') as json_file_obj:
            json.dump(self._to_serializable(content), json_file_obj, indent=2, sort_keys=True)
            json_file_obj.write('\n')
        print(f'--- JSON report written: {report_full_path} ---')

    # === Method ===
    def write_sweep_table(self, report_full_path, table, report_format='csv'):
        """
        Method that writes a SweepTableCls instance in the
        requested format (csv or json).
        """
        if report_format == 'csv':
            self.write_csv_report(report_full_path, table.columns, table.as_dicts())
        else:
            self.write_json_report(report_full_path, {'columns': table.columns, 'rows': table.as_dicts()})
