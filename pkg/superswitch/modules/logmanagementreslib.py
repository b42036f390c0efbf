# ========================================
# Import Python Modules (Standard Library)
# ========================================
import logging
import os
import sys

# =======
# Classes
# =======
class LogRedirectionManagerCls:
    """
    Class that tees stdout and stderr of a tool run into a log
    file stored in the run logs folder.
    """
    # === Constructor ===
    def __init__(self, log_files_folder):
        """
        Class constructor. Input arguments:
        -) log_files_folder: String specifying the folder where
        the tool log file is written (full path).
        """
        # Attribute initialization
        self.log_files_folder = log_files_folder
        self.original_streams = None
        self.file_handler = None
        # Call auxiliary methods
        self._set_default_values()

    # === Read-only Attribute ===
    @property
    def is_active(self):
        return self.original_streams is not None

    # === Protected Method ===
    def _set_default_values(self):
        """
        Method that initializes all the required instance
        variables with their default values.
        """
        self.log_file_name = 'superswitch_log_file.log'
        self.log_file_full_path = os.path.join(self.log_files_folder, self.log_file_name)
        self.logger_names = ('STDOUT', 'STDERR')

    # === Protected Method ===
    def _set_log_redirection(self):
        """
        Method that attaches one file handler to the STDOUT and
        STDERR loggers and swaps both streams for StreamToLogger
        wrappers. Console output is kept.
        """
        self.file_handler = logging.FileHandler(self.log_file_full_path, mode='w')
        self.file_handler.setFormatter(logging.Formatter('%(message)s'))
        for name in self.logger_names:
            logger = logging.getLogger(name)
            logger.setLevel(logging.DEBUG)
            logger.addHandler(self.file_handler)
            logger.propagate = False
        self.original_streams = (sys.stdout, sys.stderr)
        sys.stdout = StreamToLogger(logging.getLogger('STDOUT'), sys.stdout, logging.INFO)
        sys.stderr = StreamToLogger(logging.getLogger('STDERR'), sys.stderr, logging.ERROR)

    # === Method ===
    def activate_log_redirection(self):
        """
        Method that activates the redirection of both stdout
        and stderr. Calling it twice has no further effect.
        """
        if not self.is_active:
            self._set_log_redirection()

    # === Method ===
    def deactivate_log_redirection(self):
        """
        Method that flushes the pending log lines and restores
        the original stdout and stderr.
        """
        if not self.is_active:
            return
        sys.stdout.flush()
        sys.stderr.flush()
        sys.stdout, sys.stderr = self.original_streams
        self.original_streams = None
        for name in self.logger_names:
            logging.getLogger(name).removeHandler(self.file_handler)
        self.file_handler.close()
        self.file_handler = None

class StreamToLogger:
    """
    Fake file-like stream object that writes to the wrapped
    stream and forwards complete lines to a logger instance.
    """
    # === Constructor ===
    def __init__(self, logger, stream=sys.stdout, log_level=logging.INFO):
        self.logger = logger
        self.stream = stream
        self.log_level = log_level
        self.linebuf = ''

    # === Method ===
    def write(self, buf):
        self.stream.write(buf)
        self.linebuf += buf
        # Forward complete lines, keep the trailing fragment
        *lines, self.linebuf = self.linebuf.split('\n')
        for line in lines:
            self.logger.log(self.log_level, line.rstrip())

    # === Method ===
    def flush(self):
        if self.linebuf:
            self.logger.log(self.log_level, self.linebuf.rstrip())
            self.linebuf = ''
        self.stream.flush()
        for handler in self.logger.handlers:
            handler.flush()
