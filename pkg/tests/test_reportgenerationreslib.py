# ========================================
# Import Python Modules (Standard Library)
# ========================================
import csv
import json

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.analysisreslib import RegionEstimateDataCls, SweepTableCls
from superswitch.modules.reportgenerationreslib import ReportManagerCls
from superswitch.utils.customprintreslib import format_number, print_table

# ==============
# Test Functions
# ==============
def test_format_number():
    assert format_number(2.0 / 3.0) == '0.666666666667'
    assert format_number(0.625) == '0.625'
    assert format_number(3) == '3'
    assert format_number('PASS') == 'PASS'
    assert format_number(True) == 'True'

def test_csv_sweep_table(tmp_path):
    table = SweepTableCls(('p',), ('channel', 'switch'))
    table.add_row((1.0,), {'channel': 0.5, 'switch': 0.625})
    table.add_row((4.0 / 3.0,), {'channel': 2.0 / 3.0, 'switch': 7.0 / 9.0})
    report_full_path = tmp_path / 'curve.csv'
    ReportManagerCls().write_sweep_table(str(report_full_path), table)
    with open(report_full_path, newline='') as csv_file_obj:
        rows = list(csv.reader(csv_file_obj))
    assert rows == [['p', 'channel', 'switch'],
                    ['1', '0.5', '0.625'],
                    ['1.33333333333', '0.666666666667', '0.777777777778']]

def test_json_report_is_stable(tmp_path):
    estimate = RegionEstimateDataCls(predicate='switch_gt_channel', volume=np.float64(0.0925), ratio_to_tetrahedron=0.555,
                                     samples=1000, seed=7, standard_error=float('nan'), ratio_standard_error=0.01,
                                     hits=np.int64(555), partitions=4, points=((0.1, 0.2, 0.3),))
    report_manager = ReportManagerCls(significant_digits=3)
    first, second = tmp_path / 'first.json', tmp_path / 'second.json'
    report_manager.write_json_report(str(first), estimate)
    report_manager.write_json_report(str(second), estimate)
    assert first.read_bytes() == second.read_bytes()
    content = json.loads(first.read_text())
    assert list(content) == sorted(content)
    assert content['hits'] == 555 and content['standard_error'] is None
    assert content['points'] == [[0.1, 0.2, 0.3]]
    assert content['rng_algorithm'] == 'PCG64'

def test_print_table(capsys):
    print_table([('switch_closed_form', 'PASS', 1.2345678e-13)], ['Check', 'Status', 'Max error'])
    output = capsys.readouterr().out
    assert 'switch_closed_form' in output and '1.23457e-13' in output

