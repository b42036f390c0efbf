# ========================================
# Import Python Modules (Standard Library)
# ========================================
import argparse
import sys

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.analysisreslib import CHANNEL_FAMILIES, REGION_PRESETS
from superswitch.modules.runmanagementreslib import RunManagerCls

# =========
# Functions
# =========
def _add_common_arguments(parser_obj, report_formats=('csv', 'json')):
    parser_obj.add_argument('-cf', '--config-file', action='store', type=str, metavar='config_file',
        help='Configuration File - Configuration file name or path (optional)')
    parser_obj.add_argument('--format', action='store', type=str, choices=report_formats,
        help='Report format (default depends on the command)')
    parser_obj.add_argument('--out', action='store', type=str, metavar='path',
        help='Artifact file; its folder also receives the log files')

def process_program_inputs(argv=None):
    parser_obj = argparse.ArgumentParser(prog='superswitch', description='Tool to evaluate quantum state \
        discrimination through the quantum switch and superswitches of Pauli channels')
    subparsers_obj = parser_obj.add_subparsers(dest='command', required=True)
    # Curve Mode
    curve_parser_obj = subparsers_obj.add_parser('curve', help='Sweep a channel family over a parameter grid')
    curve_parser_obj.add_argument('--family', action='store', type=str, required=True, choices=sorted(CHANNEL_FAMILIES))
    curve_parser_obj.add_argument('--orders', action='store', type=str, default='0', metavar='orders',
        help="Superswitch orders, e.g. '0..2' or '0,2' (0 is the quantum switch)")
    curve_parser_obj.add_argument('--grid', action='append', type=str, metavar='name:start:stop:points',
        help='Grid of one family parameter (repeatable)')
    curve_parser_obj.add_argument('--protocols', action='store', type=str, nargs='*', metavar='protocol',
        help='Extra protocols: corr1, blind_povm, flipped_povm, multicopyN, shrink_channel, shrink_eta1, shrink_eta2')
    curve_parser_obj.add_argument('--ensemble', action='store', type=str, metavar='tag',
        help="Ensemble: orthogonal, pure:<overlap>, omega1, omega2, omega3")
    _add_common_arguments(curve_parser_obj)
    # Region Mode
    region_parser_obj = subparsers_obj.add_parser('region', help='Monte Carlo volume of a region of qubit Pauli channels')
    region_parser_obj.add_argument('--predicate', action='store', type=str, required=True, metavar='predicate',
        help=f"Preset ({', '.join(sorted(REGION_PRESETS))}) or clauses such as 'ss1>channel&ss1>switch'")
    region_parser_obj.add_argument('--samples', action='store', type=int, default=2 * 10 ** 6)
    region_parser_obj.add_argument('--seed', action='store', type=int, default=0)
    region_parser_obj.add_argument('--workers', action='store', type=int, default=None)
    region_parser_obj.add_argument('--points', action='store', type=int, default=0,
        help='Number of region points stored in the report')
    _add_common_arguments(region_parser_obj, report_formats=('json',))
    # Sequence Mode
    sequence_parser_obj = subparsers_obj.add_parser('sequence', help='Superswitch guessing probabilities of one channel')
    sequence_parser_obj.add_argument('--family', action='store', type=str, required=True, choices=sorted(CHANNEL_FAMILIES))
    sequence_parser_obj.add_argument('--p', action='store', type=float, nargs='+', metavar='value',
        help='Family parameter values, in the family parameter order')
    sequence_parser_obj.add_argument('--orders', action='store', type=str, default='0..2', metavar='orders')
    sequence_parser_obj.add_argument('--ensemble', action='store', type=str, metavar='tag')
    _add_common_arguments(sequence_parser_obj, report_formats=('json',))
    # Multicopy Mode
    multicopy_parser_obj = subparsers_obj.add_parser('multicopy', help='Quantum switch against n-copy discrimination')
    multicopy_parser_obj.add_argument('--copies', action='store', type=str, default='1..10', metavar='copies')
    multicopy_parser_obj.add_argument('--grid', action='append', type=str, metavar='p:start:stop:points')
    _add_common_arguments(multicopy_parser_obj)
    # Verify Mode
    verify_parser_obj = subparsers_obj.add_parser('verify', help='Run the closed-form and Kraus-level cross-checks')
    verify_parser_obj.add_argument('--seed', action='store', type=int, default=2024)
    _add_common_arguments(verify_parser_obj, report_formats=('json',))
    return parser_obj.parse_args(argv)

def main(argv=None):
    # Create instance of RunManagerCls class
    run_manager = RunManagerCls(process_program_inputs(argv))
    # Execute command and return its exit status
    return run_manager.perform_run()

if __name__ == '__main__':
    sys.exit(main())
