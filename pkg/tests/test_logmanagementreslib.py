# ========================================
# Import Python Modules (Standard Library)
# ========================================
import sys

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.foldersmanagementreslib import FoldersManagerCls
from superswitch.modules.logmanagementreslib import LogRedirectionManagerCls

# ==============
# Test Functions
# ==============
def test_folders_structure(tmp_path):
    folders_manager = FoldersManagerCls(str(tmp_path / 'results' / 'curve.csv'))
    folders_manager.create_folders_structure()
    assert (tmp_path / 'results').is_dir()
    assert (tmp_path / 'results' / 'superswitch-logs').is_dir()
    # Creating the structure twice keeps the existing folders
    folders_manager.create_folders_structure()
    assert folders_manager.artifact_full_path == str(tmp_path / 'results' / 'curve.csv')

def test_log_redirection_tees_and_restores_streams(tmp_path, capsys):
    original_stdout = sys.stdout
    log_manager = LogRedirectionManagerCls(str(tmp_path))
    log_manager.activate_log_redirection()
    assert log_manager.is_active
    print('--- First line ---')
    print('--- Second', 'line ---')
    log_manager.deactivate_log_redirection()
    assert sys.stdout is original_stdout and not log_manager.is_active
    assert '--- First line ---' in capsys.readouterr().out
    log_lines = (tmp_path / 'superswitch_log_file.log').read_text().splitlines()
    assert log_lines == ['--- First line ---', '--- Second line ---']

def test_deactivation_without_activation_is_harmless(tmp_path):
    log_manager = LogRedirectionManagerCls(str(tmp_path))
    log_manager.deactivate_log_redirection()
    assert not log_manager.is_active
