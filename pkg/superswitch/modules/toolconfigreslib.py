# ========================================
# Import Python Modules (Standard Library)
# ========================================
import ast
from dataclasses import dataclass
import os

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.utils.fileprocessingreslib import load_config_mapping

# =======
# Classes
# =======
@dataclass(frozen=True)
class ToolConfigDefaultDataCls:
    """
    Data class that stores the default tool configuration values.
    NOTE: When a new parameter is added to the tool configuration
    file, this class needs to be updated to specify the default
    value of the new parameter.
    """
    max_branches: int = 10 ** 6
    max_order_dim_two: int = 8
    max_order_dim_four: int = 2
    region_partitions: int = 16
    region_batch_size: int = 20000
    region_min_samples: int = 10 ** 4
    workers: int = 1
    multicopy_brute_force_max: int = 4
    significant_digits: int = 12
    log_redirection: bool = True

class ToolConfigManagerCls:
    """
    Class that manages the extraction of information from the
    tool configuration file. The class exposes getters that
    should be used by the calling code to retrieve information
    from the tool configuration file.
    NOTE: When a new parameter is added to the tool configuration
    file, a dedicated getter method needs to be integrated into
    this class.
    """
    # === Constructor ===
    def __init__(self, tool_config_file=None):
        """
        Class constructor. Input arguments:
        -) tool_config_file: String specifying the configuration
        file, either a path or the name of a file stored in the
        package config folder. If the file is missing or invalid,
        the class returns default values for the configuration
        parameters.
        """
        # Attribute initialization
        self.tool_config_file = tool_config_file
        self.tool_config_default = ToolConfigDefaultDataCls()
        self.tool_config_dict = dict()
        # Read tool configuration file
        self._read_tool_config_file()

    # === Protected Method ===
    def _read_tool_config_file(self, config_folder='config'):
        """
        Method that maps the tool configuration file into
        a dictionary, which is made available as instance
        variable.
        """
        if self.tool_config_file is None:
            print('--- No configuration file specified - Default values will be used ---')
            return
        if os.path.isfile(self.tool_config_file):
            config_full_path = os.path.abspath(self.tool_config_file)
        else:
            # Packaged configuration files live in superswitch/config
            config_full_path = os.path.join(os.sep.join(__file__.split(os.sep)[:-2]), config_folder, self.tool_config_file)
        self.tool_config_dict = load_config_mapping(config_full_path)

    # === Protected Method ===
    def _get_value(self, section, key, default):
        """
        Method that returns the literal stored under section/key,
        or the default when the entry is missing or malformed.
        """
        try:
            value = ast.literal_eval(self.tool_config_dict[section][key])
        except (KeyError, TypeError, ValueError, SyntaxError):
            return default
        if type(value) is not type(default):
            print(f'--- WARNING: Invalid value {value!r} for {section}/{key} - Default {default!r} will be used ---')
            return default
        return value

    # === Method ===
    def get_max_branches(self):
        return self._get_value('engine', 'max-branches', self.tool_config_default.max_branches)

    # === Method ===
    def get_max_order(self, dim):
        """
        Method that returns the superswitch order cap for the
        dimension specified as input argument (2 or 4).
        """
        if dim == 4:
            return self._get_value('engine', 'max-order-dim-four', self.tool_config_default.max_order_dim_four)
        return self._get_value('engine', 'max-order-dim-two', self.tool_config_default.max_order_dim_two)

    # === Method ===
    def get_region_partitions(self):
        return self._get_value('region', 'partitions', self.tool_config_default.region_partitions)

    # === Method ===
    def get_region_batch_size(self):
        return self._get_value('region', 'batch-size', self.tool_config_default.region_batch_size)

    # === Method ===
    def get_region_min_samples(self):
        return self._get_value('region', 'min-samples', self.tool_config_default.region_min_samples)

    # === Method ===
    def get_workers(self):
        return self._get_value('region', 'workers', self.tool_config_default.workers)

    # === Method ===
    def get_multicopy_brute_force_max(self):
        return self._get_value('multicopy', 'brute-force-max', self.tool_config_default.multicopy_brute_force_max)

    # === Method ===
    def get_significant_digits(self):
        return self._get_value('report', 'significant-digits', self.tool_config_default.significant_digits)

    # === Method ===
    def get_log_redirection(self):
        return self._get_value('logging', 'log-redirection', self.tool_config_default.log_redirection)
