# ========================================
# Import Python Modules (Standard Library)
# ========================================
import os

# =======
# Classes
# =======
class FoldersManagerCls:
    """
    This class creates the folder structure where a tool run
    stores its artifacts and its log file.
    NOTE: To facilitate access to specific folders within
    the created structure, this class includes a set of
    read-only attributes implemented with the property
    decorator.
    """
    # === Constructor ===
    def __init__(self, out_path, tool_name='superswitch'):
        """
        Class constructor. Input arguments:
        -) out_path: String specifying the artifact file requested
        by the run. Its folder (current folder when the path has
        none) becomes the output folder.
        -) tool_name: String used to name the log files folder.
        """
        # Attribute initialization
        self.out_path = out_path
        self.tool_name = tool_name
        # Call auxiliary methods
        self._set_default_values()

    # === Read-only Attribute ===
    @property
    def artifact_full_path(self):
        return self._artifact_full_path

    # === Read-only Attribute ===
    @property
    def log_files_folder(self):
        return self._log_files_folder

    # === Read-only Attribute ===
    @property
    def output_folder(self):
        return self._output_folder

    # === Protected Method ===
    def _set_default_values(self):
        """
        Method that initializes all the required instance
        variables with their default values.
        """
        self._artifact_full_path = os.path.abspath(self.out_path)
        self._output_folder = os.path.dirname(self._artifact_full_path)
        self._log_files_folder = os.path.join(self._output_folder, '-'.join([self.tool_name, 'logs']))

    # === Method ===
    def create_folders_structure(self):
        """
        Method that creates the output folder and its log
        files sub-folder. Existing folders are kept.
        """
        os.makedirs(self.output_folder, exist_ok=True)
        os.makedirs(self.log_files_folder, exist_ok=True)
        print(f'--- Artifacts will be written to: {self.artifact_full_path} ---')
