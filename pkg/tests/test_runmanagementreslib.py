# ========================================
# Import Python Modules (Standard Library)
# ========================================
import csv
import json
import runpy

# ========================================
# Import Python Modules (Third Party)
# ========================================
import pytest

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.main import main, process_program_inputs
from superswitch.modules.runmanagementreslib import parse_grid, parse_orders, resolve_ensemble
from superswitch.utils.errorsreslib import ChannelDomainError, DimensionMismatchError

# ==============
# Test Functions
# ==============
def test_parse_orders():
    assert parse_orders('0..2') == [0, 1, 2]
    assert parse_orders('2,0') == [0, 2]
    for text in ('', 'a', '-1', '3..1'):
        with pytest.raises(ChannelDomainError):
            parse_orders(text)

def test_parse_grid():
    assert parse_grid(['p:0:1.3333:200', 'q:-0.5:0.5:3']) == {'p': (0.0, 1.3333, 200), 'q': (-0.5, 0.5, 3)}
    assert parse_grid(None) == {}
    for entry in ('p:0:1', 'p:0:1:1', 'p:a:1:5'):
        with pytest.raises(ChannelDomainError):
            parse_grid([entry])

def test_resolve_ensemble():
    assert resolve_ensemble(None, 2).name == 'orthogonal'
    assert resolve_ensemble(None, 4).name == 'omega1'
    assert resolve_ensemble('pure:0.5', 2).dim == 2
    with pytest.raises(DimensionMismatchError):
        resolve_ensemble('omega2', 2)
    with pytest.raises(ChannelDomainError):
        resolve_ensemble('pure:x', 2)

def test_argument_parsing():
    config_obj = process_program_inputs(['region', '--predicate', 'switch_gt_channel', '--samples', '20000'])
    assert config_obj.command == 'region' and config_obj.seed == 0 and config_obj.samples == 20000
    with pytest.raises(SystemExit) as exc_info:
        process_program_inputs(['curve', '--family', 'amplitude_damping'])
    assert exc_info.value.code == 2

def test_curve_command(tmp_path):
    out = tmp_path / 'curve.csv'
    assert main(['curve', '--family', 'depolarizing2', '--orders', '0', '--grid', 'p:0:1.3333333333333333:4',
                 '--out', str(out)]) == 0
    with open(out, newline='') as csv_file_obj:
        rows = list(csv.DictReader(csv_file_obj))
    assert [row['p'] for row in rows] == ['0', '0.444444444444', '0.888888888889', '1.33333333333']
    assert rows[-1]['switch'] == '0.777777777778'
    assert (tmp_path / 'superswitch-logs' / 'superswitch_log_file.log').is_file()

def test_curve_command_switch_at_complete_depolarization(tmp_path):
    out = tmp_path / 'curve.json'
    assert main(['curve', '--family', 'depolarizing2', '--grid', 'p:0:2:3', '--protocols', 'flipped_povm',
                 '--format', 'json', '--out', str(out)]) == 0
    content = json.loads(out.read_text())
    assert content['columns'] == ['p', 'channel', 'switch', 'flipped_povm']
    # p = 2 lies outside the depolarisation domain and is skipped
    assert [row['p'] for row in content['rows']] == [0.0, 1.0]
    assert content['rows'][1]['switch'] == 0.625

def test_sequence_command(tmp_path):
    out = tmp_path / 'sequence.json'
    assert main(['sequence', '--family', 'depolarizing2', '--p', '1.3333333333333333', '--orders', '0..2',
                 '--out', str(out)]) == 0
    content = json.loads(out.read_text())
    assert content['orders'] == [0, 1, 2]
    assert content['values'] == pytest.approx([0.778, 0.753, 0.75004], abs=5e-4)

def test_region_command(tmp_path):
    out = tmp_path / 'region.json'
    assert main(['region', '--predicate', 'always_false', '--samples', '10000', '--seed', '7',
                 '--out', str(out)]) == 0
    content = json.loads(out.read_text())
    assert content['volume'] == 0.0 and content['seed'] == 7 and content['samples'] == 10000

def test_multicopy_command(tmp_path):
    out = tmp_path / 'multicopy.csv'
    assert main(['multicopy', '--copies', '1..3', '--grid', 'p:0:1:3', '--out', str(out)]) == 0
    with open(out, newline='') as csv_file_obj:
        rows = list(csv.DictReader(csv_file_obj))
    assert list(rows[0]) == ['p', 'channel', 'switch', 'multicopy1', 'multicopy2', 'multicopy3']
    assert rows[-1]['multicopy3'] == '0.5'

def test_invalid_input_exit_status(tmp_path):
    assert main(['sequence', '--family', 'depolarizing2', '--p', '2.0', '--out', str(tmp_path / 'a.json')]) == 2
    assert main(['sequence', '--family', 'Q', '--p', '0.2', '--out', str(tmp_path / 'b.json')]) == 2
    assert main(['region', '--predicate', 'switch_gt_channel', '--samples', '10',
                 '--out', str(tmp_path / 'c.json')]) == 2
    assert main(['curve', '--family', 'depolarizing2', '--orders', '9', '--grid', 'p:0:1:3',
                 '--out', str(tmp_path / 'd.csv')]) == 2

def test_branch_limit_exit_status(tmp_path):
    config_file = tmp_path / 'small_config_file.yml'
    config_file.write_text('engine:\n  max-branches: 8\n')
    assert main(['sequence', '--family', 'pauli', '--p', '0.3', '0.2', '0.1', '--orders', '0..2',
                 '-cf', str(config_file), '--out', str(tmp_path / 'e.json')]) == 3

@pytest.mark.slow
def test_verify_command(tmp_path):
    out = tmp_path / 'verify.json'
    assert main(['verify', '--out', str(out)]) == 0
    content = json.loads(out.read_text())
    assert content['all_passed'] is True
    assert all(check['passed'] for check in content['checks'])

def test_curve_command_with_shrinking_factors(tmp_path):
    out = tmp_path / 'shrinking.csv'
    assert main(['curve', '--family', 'depolarizing2', '--grid', 'p:0:1:2',
                 '--protocols', 'shrink_channel', 'shrink_eta1', 'shrink_eta2', '--out', str(out)]) == 0
    with open(out, newline='') as csv_file_obj:
        rows = list(csv.DictReader(csv_file_obj))
    assert [rows[-1][name] for name in ('shrink_channel', 'shrink_eta1', 'shrink_eta2')] == \
        ['0', '0.157894736842', '0.111111111111']
    assert main(['curve', '--family', 'bitphase', '--grid', 'p:0:1:2', '--protocols', 'shrink_eta1',
                 '--out', str(tmp_path / 'bitphase.csv')]) == 2

def test_module_entry_point_exit_status(tmp_path, monkeypatch):
    monkeypatch.setattr('sys.argv', ['superswitch', 'sequence', '--family', 'depolarizing2', '--p', '0.5',
                                     '--orders', '0', '--out', str(tmp_path / 'sequence.json')])
    with pytest.raises(SystemExit) as exc_info:
        runpy.run_module('superswitch.main', run_name='__main__')
    assert exc_info.value.code == 0
    assert (tmp_path / 'sequence.json').is_file()
