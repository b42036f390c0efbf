# ========================================
# Import Python Modules (Standard Library)
# ========================================
import os

# ========================================
# Import Python Modules (Third Party)
# ========================================
import pytest

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.toolconfigreslib import ToolConfigDefaultDataCls, ToolConfigManagerCls

# ========
# Fixtures
# ========
@pytest.fixture
def custom_config_file(get_main_test_files_folder):
    return os.path.join(get_main_test_files_folder, 'toolconfigreslib', 'custom_config_file.yml')

# ==============
# Test Functions
# ==============
def test_defaults_without_config_file(capsys):
    tool_config_manager = ToolConfigManagerCls(None)
    assert 'Default values will be used' in capsys.readouterr().out
    assert tool_config_manager.get_max_branches() == 10 ** 6
    assert tool_config_manager.get_max_order(2) == 8
    assert tool_config_manager.get_max_order(4) == 2
    assert tool_config_manager.get_region_min_samples() == 10 ** 4
    assert tool_config_manager.get_log_redirection() is True

def test_packaged_config_file_matches_defaults():
    tool_config_manager = ToolConfigManagerCls('superswitch_config_file.yml')
    defaults = ToolConfigDefaultDataCls()
    assert tool_config_manager.get_max_branches() == defaults.max_branches
    assert tool_config_manager.get_region_partitions() == defaults.region_partitions
    assert tool_config_manager.get_region_batch_size() == defaults.region_batch_size
    assert tool_config_manager.get_multicopy_brute_force_max() == defaults.multicopy_brute_force_max
    assert tool_config_manager.get_significant_digits() == defaults.significant_digits

def test_custom_config_file(custom_config_file, capsys):
    tool_config_manager = ToolConfigManagerCls(custom_config_file)
    assert tool_config_manager.get_max_branches() == 5000
    assert tool_config_manager.get_max_order(2) == 3
    assert tool_config_manager.get_max_order(4) == 2
    assert tool_config_manager.get_region_partitions() == 8
    assert tool_config_manager.get_significant_digits() == 6
    assert tool_config_manager.get_log_redirection() is False
    # Malformed values fall back to the defaults
    assert tool_config_manager.get_workers() == 1

def test_missing_config_file(capsys):
    tool_config_manager = ToolConfigManagerCls('missing_config_file.yml')
    assert 'Exception raised while processing the YAML file' in capsys.readouterr().out
    assert tool_config_manager.get_max_branches() == 10 ** 6

def test_unusable_config_files_fall_back_to_defaults(tmp_path, capsys):
    (tmp_path / 'config.txt').write_text('engine:\n  max-branches: 10\n')
    (tmp_path / 'list_config_file.yml').write_text('- engine\n- region\n')
    (tmp_path / 'broken_config_file.yml').write_text('engine: [max-branches\n')
    for file_name in ('config.txt', 'list_config_file.yml', 'broken_config_file.yml'):
        tool_config_manager = ToolConfigManagerCls(str(tmp_path / file_name))
        assert tool_config_manager.get_max_branches() == 10 ** 6
    output = capsys.readouterr().out
    assert 'Expected extension' in output and 'not a mapping' in output
