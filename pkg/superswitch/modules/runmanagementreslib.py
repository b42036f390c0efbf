# ========================================
# Import Python Modules (Standard Library)
# ========================================
from dataclasses import dataclass
import re
import time

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.analysisreslib import (get_channel_family, limiting_guessing, region_volume,
                                                superswitch_sequence, sweep)
from superswitch.modules.dimfourreslib import make_ensemble
from superswitch.modules.discriminationreslib import make_orthogonal_pair, make_pure_pair
from superswitch.modules.foldersmanagementreslib import FoldersManagerCls
from superswitch.modules.logmanagementreslib import LogRedirectionManagerCls
from superswitch.modules.reportgenerationreslib import ReportManagerCls
from superswitch.modules.switchenginereslib import STATIONARY_TRIPLES
from superswitch.modules.toolconfigreslib import ToolConfigManagerCls
from superswitch.modules.verificationreslib import VerificationSuiteCls
from superswitch.utils.customprintreslib import print_table
from superswitch.utils.errorsreslib import (BranchLimitError, ChannelDomainError, DimensionMismatchError,
                                            UnsupportedStrategyError)

# =================
# Module Parameters
# =================
EXIT_SUCCESS = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE_ERROR = 2
EXIT_RESOURCE_ERROR = 3
ORDER_RANGE_REG_EXP = re.compile(r'^(?P<first>\d+)\.\.(?P<last>\d+)$')
GRID_REG_EXP = re.compile(r'^(?P<name>\w+):(?P<start>[^:]+):(?P<stop>[^:]+):(?P<points>\d+)$')
PURE_PAIR_REG_EXP = re.compile(r'^pure:(?P<overlap>.+)$')
DEFAULT_REPORT_FORMATS = {'curve': 'csv', 'multicopy': 'csv', 'region': 'json',
                          'sequence': 'json', 'verify': 'json'}

# =========
# Functions
# =========
def parse_orders(text):
    """
    Function that maps '0..2' or '0,1,3' onto a sorted list of
    distinct non-negative integers.
    """
    match = ORDER_RANGE_REG_EXP.match(text.strip())
    try:
        if match:
            orders = list(range(int(match.group('first')), int(match.group('last')) + 1))
        else:
            orders = [int(elem) for elem in text.split(',') if elem.strip()]
    except ValueError:
        raise ChannelDomainError(f'Inconsistency detected - Invalid order list {text!r}')
    if not orders or min(orders) < 0:
        raise ChannelDomainError(f'Inconsistency detected - Invalid order list {text!r}')
    return sorted(set(orders))

def parse_grid(entries):
    """
    Function that maps a list of 'name:start:stop:points' strings
    onto a grid dictionary name -> (start, stop, points). Every
    axis needs at least two points.
    """
    grid = dict()
    for entry in entries or ():
        match = GRID_REG_EXP.match(entry.strip())
        if match is None:
            raise ChannelDomainError(f'Inconsistency detected - Invalid grid {entry!r}, expected name:start:stop:points')
        try:
            start, stop = float(match.group('start')), float(match.group('stop'))
        except ValueError:
            raise ChannelDomainError(f'Inconsistency detected - Invalid grid bounds in {entry!r}')
        points = int(match.group('points'))
        if points < 2:
            raise ChannelDomainError(f'Inconsistency detected - Grid {entry!r} needs at least 2 points')
        grid[match.group('name')] = (start, stop, points)
    return grid

def resolve_ensemble(tag, dim):
    """
    Function returning the ensemble named by tag: 'orthogonal',
    'pure:<overlap>' (qubits), or one of the two-qubit ensembles
    omega1, omega2, omega3. None selects the default ensemble of
    the dimension.
    """
    if tag is None:
        tag = 'orthogonal' if dim == 2 else 'omega1'
    match = PURE_PAIR_REG_EXP.match(tag)
    if tag == 'orthogonal':
        ensemble = make_orthogonal_pair(dim)
    elif match:
        try:
            ensemble = make_pure_pair(float(match.group('overlap')))
        except ValueError:
            raise ChannelDomainError(f'Inconsistency detected - Invalid overlap in {tag!r}')
    else:
        ensemble = make_ensemble(tag)
    if ensemble.dim != dim:
        raise DimensionMismatchError(f'Inconsistency detected - Ensemble {tag!r} has dimension {ensemble.dim}, channel family {dim}')
    return ensemble

def order_protocols(orders):
    return ['switch' if order == 0 else f'ss{order}' for order in orders]

# =======
# Classes
# =======
@dataclass(frozen=True)
class SequenceReportDataCls:
    """
    Data class that stores the superswitch sequence of a channel.
    """
    family: str
    parameters: dict
    orders: tuple
    values: tuple

class RunManagerCls:
    """
    Class that executes one command of the command-line tool
    (curve, region, sequence, multicopy, verify) and maps the
    domain errors onto the tool exit statuses.
    """
    # === Constructor ===
    def __init__(self, config_obj):
        """
        Class constructor. Input arguments:
        -) config_obj: Namespace returned by the argument parser.
        """
        # Attribute initialization
        self.config_obj = config_obj
        self.tool_config_manager = ToolConfigManagerCls(getattr(config_obj, 'config_file', None))
        self.report_manager = ReportManagerCls(self.tool_config_manager.get_significant_digits())
        self.report_format = getattr(config_obj, 'format', None) or DEFAULT_REPORT_FORMATS[config_obj.command]
        out_path = getattr(config_obj, 'out', None) or f'superswitch_{config_obj.command}.{self.report_format}'
        self.folders_manager = FoldersManagerCls(out_path)
        self.log_manager = None

    # === Protected Method ===
    def _max_branches(self):
        return self.tool_config_manager.get_max_branches()

    # === Protected Method ===
    def _run_curve(self):
        """
        Method that sweeps a channel family over a parameter grid
        and writes the guessing probability of every protocol.
        """
        family = get_channel_family(self.config_obj.family)
        ensemble = resolve_ensemble(self.config_obj.ensemble, family.dim)
        protocols = ['channel'] + order_protocols(parse_orders(self.config_obj.orders))
        protocols += [elem for elem in (self.config_obj.protocols or ()) if elem not in protocols]
        table = sweep(family, protocols, ensemble, parse_grid(self.config_obj.grid),
                      max_branches=self._max_branches(),
                      max_order=self.tool_config_manager.get_max_order(family.dim),
                      brute_force_max=self.tool_config_manager.get_multicopy_brute_force_max())
        print(f'--- Sweep of family {family.name} completed: {len(table.rows)} rows ---')
        self.report_manager.write_sweep_table(self.folders_manager.artifact_full_path, table, self.report_format)
        return EXIT_SUCCESS

    # === Protected Method ===
    def _run_multicopy(self):
        """
        Method that compares the quantum switch with the n-copy
        Helstrom bound for the depolarisation channel and the
        orthogonal pair.
        """
        copies = parse_orders(self.config_obj.copies)
        if copies[0] < 1:
            raise ChannelDomainError('Inconsistency detected - At least one copy needed')
        grid = parse_grid(self.config_obj.grid) or {'p': (0.0, 4.0 / 3.0, 200)}
        protocols = ['channel', 'switch'] + [f'multicopy{n}' for n in copies]
        table = sweep('depolarizing2', protocols, make_orthogonal_pair(2), grid,
                      max_branches=self._max_branches(),
                      brute_force_max=self.tool_config_manager.get_multicopy_brute_force_max())
        self.report_manager.write_sweep_table(self.folders_manager.artifact_full_path, table, self.report_format)
        return EXIT_SUCCESS

    # === Protected Method ===
    def _run_region(self):
        """
        Method that estimates the volume of a region of the
        tetrahedron of qubit Pauli channels.
        """
        workers = self.config_obj.workers or self.tool_config_manager.get_workers()
        print(f'--- Region {self.config_obj.predicate}: {self.config_obj.samples} samples, seed {self.config_obj.seed}, {workers} workers ---')
        estimate = region_volume(self.config_obj.predicate,
                                 self.config_obj.samples,
                                 self.config_obj.seed,
                                 partitions=self.tool_config_manager.get_region_partitions(),
                                 batch_size=self.tool_config_manager.get_region_batch_size(),
                                 workers=workers,
                                 min_samples=self.tool_config_manager.get_region_min_samples(),
                                 keep_points=self.config_obj.points)
        print(f'--- Volume {estimate.volume:.6g} (ratio {estimate.ratio_to_tetrahedron:.6g} +/- {estimate.ratio_standard_error:.2g}) ---')
        self.report_manager.write_json_report(self.folders_manager.artifact_full_path, estimate)
        return EXIT_SUCCESS

    # === Protected Method ===
    def _run_sequence(self):
        """
        Method that evaluates the superswitch guessing probability
        of one channel for the orders 0..max(orders).
        """
        family = get_channel_family(self.config_obj.family)
        values = self.config_obj.p or []
        if len(values) != len(family.parameters):
            raise ChannelDomainError(f'Inconsistency detected - Family {family.name} needs parameters {family.parameters}')
        channel = family.constructor(*values)
        ensemble = resolve_ensemble(self.config_obj.ensemble, family.dim)
        orders = parse_orders(self.config_obj.orders)
        sequence = superswitch_sequence(channel, orders[-1], ensemble,
                                        max_branches=self._max_branches(),
                                        order_cap=self.tool_config_manager.get_max_order(family.dim))
        report = SequenceReportDataCls(family=family.name,
                                       parameters=dict(zip(family.parameters, values)),
                                       orders=tuple(orders),
                                       values=tuple(sequence[order] for order in orders))
        print_table(list(zip(report.orders, report.values)), ['Order', 'Guessing probability'])
        self.report_manager.write_json_report(self.folders_manager.artifact_full_path, report)
        return EXIT_SUCCESS

    # === Protected Method ===
    def _run_verify(self):
        """
        Method that runs the cross-check suite and prints
        pass/fail per check.
        """
        suite = VerificationSuiteCls(seed=self.config_obj.seed)
        results = suite.run()
        print_table([(result.name, 'PASS' if result.passed else 'FAIL', result.max_error, result.tolerance)
                     for result in results], ['Check', 'Status', 'Max error', 'Tolerance'])
        ensemble = make_orthogonal_pair(2)
        self.report_manager.write_json_report(self.folders_manager.artifact_full_path,
                                              {'checks': results,
                                               'all_passed': suite.all_passed(),
                                               'limits': [limiting_guessing(triple, ensemble)
                                                          for triple in STATIONARY_TRIPLES]})
        return EXIT_SUCCESS if suite.all_passed() else EXIT_CHECK_FAILED

    # === Method ===
    def perform_run(self):
        """
        Method that executes the requested command and returns
        the exit status: 0 on success, 1 when a verification check
        fails, 2 for invalid input, 3 when the branch limit is
        exceeded.
        """
        start_time = time.perf_counter()
        self.folders_manager.create_folders_structure()
        if self.tool_config_manager.get_log_redirection():
            self.log_manager = LogRedirectionManagerCls(self.folders_manager.log_files_folder)
            self.log_manager.activate_log_redirection()
        try:
            print(f'=== Start of command: {self.config_obj.command} ===')
            status = getattr(self, f'_run_{self.config_obj.command}')()
        except (ChannelDomainError, DimensionMismatchError, UnsupportedStrategyError) as e:
            print(f'--- Invalid input - Details: {e} ---')
            status = EXIT_USAGE_ERROR
        except BranchLimitError as e:
            print(f'--- Resource limit reached - Details: {e} ---')
            status = EXIT_RESOURCE_ERROR
        finally:
            print(f'=== End of command: {self.config_obj.command} ({time.perf_counter() - start_time:.2f} s) ===')
            if self.log_manager is not None:
                self.log_manager.deactivate_log_redirection()
        return status
