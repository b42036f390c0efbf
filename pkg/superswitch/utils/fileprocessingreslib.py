# ========================================
# Import Python Modules (Standard Library)
# ========================================
import os

# ========================================
# Import Python Modules (Third Party)
# ========================================
import yaml

# =================
# Module Parameters
# =================
YAML_EXTENSIONS = ('.yml', '.yaml')

# =========
# Functions
# =========
def load_config_mapping(config_full_path):
    """
    Function that maps a YAML configuration file into a dictionary
    of sections. An empty dictionary is returned, and the reason is
    printed, when the extension is wrong, the file cannot be read
    or parsed, or the top-level object is not a mapping.
    NOTE: The base loader keeps every scalar as a string; the
    configuration manager parses values itself.
    """
    if os.path.splitext(config_full_path)[1] not in YAML_EXTENSIONS:
        print(f'--- YAML file {config_full_path} ignored - Expected extension .yml or .yaml ---')
        return dict()
    try:
        with open(config_full_path, mode='r') as file_obj:
            content = yaml.load(file_obj, Loader=yaml.BaseLoader)
    except (OSError, yaml.YAMLError) as e:
        print(f'--- Exception raised while processing the YAML file {config_full_path} - Details: ---')
        print(f'--- {e} ---')
        return dict()
    if content is None:
        return dict()
    if not isinstance(content, dict):
        print(f'--- YAML file {config_full_path} ignored - Top-level object is not a mapping ---')
        return dict()
    return content
