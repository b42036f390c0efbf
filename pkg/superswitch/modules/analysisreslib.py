# ========================================
# Import Python Modules (Standard Library)
# ========================================
from dataclasses import dataclass, field
import itertools
from multiprocessing import Pool
import re

# ========================================
# Import Python Modules (Third Party)
# ========================================
import numpy as np

# ========================================
# Import Python Modules (Project Specific)
# ========================================
from superswitch.modules.dimfourreslib import make_delta, make_depolarizing_d4, make_W
from superswitch.modules.discriminationreslib import (branch_helstrom_norms, flip_povm, guessing_with_povm,
                                                      helstrom_povm, make_orthogonal_pair,
                                                      multicopy_helstrom, multicopy_orthogonal_depolarization,
                                                      protocol_guessing, push_through)
from superswitch.modules.paulicorereslib import (make_bit_phase_flip, make_depolarizing_d2, make_pauli_channel,
                                                 make_Q_channel, make_Qtilde_channel)
from superswitch.modules.switchenginereslib import (DEFAULT_MAX_BRANCHES, P_STAR, correlated_first_order,
                                                    depolarizing_parameter, first_order_outcomes,
                                                    recurrence_residual, superswitch_batch,
                                                    superswitch_orders)
from superswitch.utils.errorsreslib import ChannelDomainError, UnsupportedStrategyError

# =================
# Module Parameters
# =================
TETRAHEDRON_VOLUME = 1.0 / 6.0
DOMINANCE_MARGIN = 1e-12
FIXED_POINT_TOL = 1e-9
RNG_ALGORITHM = 'PCG64'
# Cube points drawn per call to the generator (fixed so that the
# accepted sample stream does not depend on the evaluation batch size)
CUBE_DRAW_CHUNK = 1 << 16
DEFAULT_MAX_ORDER = {2: 8, 4: 2}
SUPERSWITCH_PROTOCOL_REG_EXP = re.compile(r'^ss(?P<order>\d+)$')
MULTICOPY_PROTOCOL_REG_EXP = re.compile(r'^multicopy(?P<copies>\d+)$')
REGION_CLAUSE_REG_EXP = re.compile(r'^\s*(?P<lhs>\w+)\s*(?P<op>[<>])\s*(?P<rhs>\w+)\s*$')
REGION_PRESETS = {'switch_gt_channel': 'switch>channel',
                  'ss1_improvement': 'ss1>channel&ss1>switch',
                  'ss2_improvement': 'ss2>channel&ss2>switch&ss2>ss1',
                  'switch_dominates_all': 'switch>channel&switch>ss1&switch>ss2',
                  'ss1_dominates_all': 'ss1>channel&ss1>switch&ss1>ss2',
                  'ss2_dominates_all': 'ss2>channel&ss2>switch&ss2>ss1',
                  'always_false': ''}
REGION_QUANTITIES = ('channel', 'switch', 'ss1', 'ss2')
SHRINKING_PROTOCOLS = ('shrink_channel', 'shrink_eta1', 'shrink_eta2')

# =======
# Classes
# =======
@dataclass(frozen=True)
class ChannelFamilyDataCls:
    """
    Data class that describes a parameterized channel constructor.
    """
    name: str
    constructor: object
    parameters: tuple
    dim: int

def _pauli_from_components(px, py, pz):
    return make_pauli_channel([1.0 - px - py - pz, px, py, pz])

CHANNEL_FAMILIES = {'depolarizing2': ChannelFamilyDataCls('depolarizing2', make_depolarizing_d2, ('p',), 2),
                    'bitphase': ChannelFamilyDataCls('bitphase', make_bit_phase_flip, ('p',), 2),
                    'Q': ChannelFamilyDataCls('Q', make_Q_channel, ('p', 'q'), 2),
                    'Qtilde': ChannelFamilyDataCls('Qtilde', make_Qtilde_channel, ('p',), 2),
                    'pauli': ChannelFamilyDataCls('pauli', _pauli_from_components, ('px', 'py', 'pz'), 2),
                    'depolarizing4': ChannelFamilyDataCls('depolarizing4', make_depolarizing_d4, ('s',), 4),
                    'delta': ChannelFamilyDataCls('delta', make_delta, ('p', 'q'), 4),
                    'W': ChannelFamilyDataCls('W', make_W, ('p', 'q'), 4)}

class SweepTableCls:
    """
    Class that stores the result of a parameter sweep: one row per
    feasible grid point, holding the parameter values followed by
    the guessing probability of every protocol.
    """
    # === Constructor ===
    def __init__(self, parameter_names, protocol_names):
        # Attribute initialization
        self.parameter_names = tuple(parameter_names)
        self.protocol_names = tuple(protocol_names)
        self.rows = list()

    # === Read-only Attribute ===
    @property
    def columns(self):
        return self.parameter_names + self.protocol_names

    # === Method ===
    def add_row(self, parameter_values, guessing_values):
        """
        Method that appends a row. Input arguments:
        -) parameter_values: Sequence aligned with parameter_names.
        -) guessing_values: Dictionary keyed by protocol name.
        """
        self.rows.append(tuple(float(elem) for elem in parameter_values) +
                         tuple(float(guessing_values[name]) for name in self.protocol_names))

    # === Method ===
    def column(self, name):
        """
        Method returning a column as a numpy array.
        """
        index = self.columns.index(name)
        return np.array([row[index] for row in self.rows])

    # === Method ===
    def as_dicts(self):
        """
        Method returning the rows as dictionaries keyed by column name.
        """
        return [dict(zip(self.columns, row)) for row in self.rows]

@dataclass(frozen=True)
class RegionEstimateDataCls:
    """
    Data class that stores a Monte Carlo volume estimate of a region
    of the tetrahedron of qubit Pauli channels.
    """
    predicate: str
    volume: float
    ratio_to_tetrahedron: float
    samples: int
    seed: int
    standard_error: float
    ratio_standard_error: float
    hits: int
    partitions: int
    rng_algorithm: str = RNG_ALGORITHM
    points: tuple = field(default=(), repr=False)

# =========
# Functions
# =========
def get_channel_family(name):
    """
    Function returning the ChannelFamilyDataCls registered under name.
    """
    try:
        return CHANNEL_FAMILIES[name]
    except KeyError:
        raise UnsupportedStrategyError(f'Inconsistency detected - Unknown channel family {name!r}, expected one of {sorted(CHANNEL_FAMILIES)}')

def protocol_order(protocol):
    """
    Function returning the superswitch order needed by a protocol
    name, or None when no superswitch is involved. 'switch' is the
    order 0 superswitch.
    """
    if protocol == 'switch':
        return 0
    if protocol == 'corr1':
        return None
    match = SUPERSWITCH_PROTOCOL_REG_EXP.match(protocol)
    return int(match.group('order')) if match else None

def check_protocols(protocols, ensemble, max_order, family_name=None):
    """
    Function that validates a sequence of protocol names against
    the ensemble, the order cap and the channel family. The
    shrinking factors of the first-order outcomes are defined for
    the qubit depolarisation family only.
    """
    if not protocols:
        raise UnsupportedStrategyError('Inconsistency detected - At least one protocol needed')
    for protocol in protocols:
        order = protocol_order(protocol)
        if order is not None:
            if order > max_order:
                raise UnsupportedStrategyError(f'Inconsistency detected - Order {order} exceeds the cap {max_order} for dimension {ensemble.dim}')
        elif protocol in ('blind_povm', 'flipped_povm'):
            if ensemble.dim != 2 or ensemble.size != 2:
                raise UnsupportedStrategyError(f'Inconsistency detected - Protocol {protocol} needs a qubit two-state ensemble')
        elif protocol in SHRINKING_PROTOCOLS:
            if family_name != 'depolarizing2':
                raise UnsupportedStrategyError(f'Inconsistency detected - Protocol {protocol} needs the depolarizing2 family')
        elif protocol not in ('channel', 'corr1') and not MULTICOPY_PROTOCOL_REG_EXP.match(protocol):
            raise UnsupportedStrategyError(f'Inconsistency detected - Unknown protocol {protocol!r}')

def channel_guessing(ch, ensemble):
    """
    Function returning the Helstrom guessing probability after one
    application of the channel.
    """
    return 0.5 + 0.5 * float(branch_helstrom_norms(ch.probs, ensemble))

def _multicopy_guessing(ch, ensemble, copies, family_name, brute_force_max):
    if family_name == 'depolarizing2' and ensemble.name == 'orthogonal' and ensemble.dim == 2:
        return multicopy_orthogonal_depolarization(depolarizing_parameter(ch), copies)
    if copies > brute_force_max:
        raise UnsupportedStrategyError(f'Inconsistency detected - {copies} copies exceed the brute-force cap {brute_force_max}')
    return multicopy_helstrom(ensemble, ch, copies).value

def evaluate_protocols(ch, protocols, ensemble, max_branches=DEFAULT_MAX_BRANCHES,
                       family_name=None, brute_force_max=4):
    """
    Function returning a dictionary protocol -> guessing probability
    for one channel. Superswitch orders are built incrementally up
    to the largest one requested.
    """
    values = dict()
    orders = [protocol_order(protocol) for protocol in protocols]
    requested_orders = [order for order in orders if order is not None]
    if requested_orders:
        by_order = dict()
        for order, distribution in enumerate(superswitch_orders(ch, max(requested_orders), max_branches)):
            if order in requested_orders:
                by_order[order] = protocol_guessing(distribution, ensemble).value
    for protocol, order in zip(protocols, orders):
        if order is not None:
            values[protocol] = by_order[order]
        elif protocol == 'channel':
            values[protocol] = channel_guessing(ch, ensemble)
        elif protocol == 'corr1':
            values[protocol] = protocol_guessing(correlated_first_order(ch), ensemble).value
        elif protocol in ('blind_povm', 'flipped_povm'):
            povm = helstrom_povm(ensemble)
            if protocol == 'flipped_povm':
                povm = flip_povm(povm)
            values[protocol] = guessing_with_povm(push_through(ensemble, ch), povm).value
        elif protocol in SHRINKING_PROTOCOLS:
            factors = first_order_shrinking_factors(ch)
            values[protocol] = factors[SHRINKING_PROTOCOLS.index(protocol)]
        else:
            copies = int(MULTICOPY_PROTOCOL_REG_EXP.match(protocol).group('copies'))
            values[protocol] = _multicopy_guessing(ch, ensemble, copies, family_name, brute_force_max)
    return values

def grid_points(grid, parameters):
    """
    Function returning the cartesian product of the per-parameter
    grids, in parameter order (last parameter varying fastest).
    Input arguments:
    -) grid: Dictionary parameter -> (start, stop, points) or an
    explicit sequence of values.
    -) parameters: Parameter names of the channel family.
    """
    missing = [name for name in parameters if name not in grid]
    if missing:
        raise ChannelDomainError(f'Inconsistency detected - No grid given for parameters {missing}')
    axes = []
    for name in parameters:
        axis_grid = grid[name]
        if isinstance(axis_grid, tuple) and len(axis_grid) == 3:
            start, stop, points = axis_grid
            if int(points) < 1:
                raise ChannelDomainError(f'Inconsistency detected - Empty grid for parameter {name}')
            axes.append(np.linspace(float(start), float(stop), int(points)))
        else:
            axes.append(np.array(axis_grid, dtype=float).ravel())
    return list(itertools.product(*axes))

def sweep(family, protocols, ensemble, grid, max_branches=DEFAULT_MAX_BRANCHES,
          max_order=None, brute_force_max=4):
    """
    Function returning a SweepTableCls with the guessing probability
    of every protocol at every grid point. Grid points outside the
    domain of the channel family are skipped.
    """
    family = get_channel_family(family) if isinstance(family, str) else family
    if family.dim != ensemble.dim:
        raise UnsupportedStrategyError(f'Inconsistency detected - Family {family.name} acts on dimension {family.dim}, ensemble on {ensemble.dim}')
    max_order = DEFAULT_MAX_ORDER[family.dim] if max_order is None else max_order
    protocols = tuple(protocols)
    check_protocols(protocols, ensemble, max_order, family.name)
    table = SweepTableCls(family.parameters, protocols)
    points = grid_points(grid, family.parameters)
    if not points:
        raise ChannelDomainError('Inconsistency detected - Empty parameter grid')
    skipped = 0
    for point in points:
        try:
            ch = family.constructor(*point)
        except ChannelDomainError:
            skipped += 1
            continue
        table.add_row(point, evaluate_protocols(ch, protocols, ensemble, max_branches,
                                                family.name, brute_force_max))
    if skipped:
        print(f'--- {skipped} grid points outside the domain of family {family.name} skipped ---')
    return table

def superswitch_sequence(E, max_order, ensemble, max_branches=DEFAULT_MAX_BRANCHES, order_cap=None):
    """
    Function returning [P_g(superswitch(E, k)) for k = 0..max_order]
    with the per-branch optimal measurement.
    """
    order_cap = DEFAULT_MAX_ORDER[E.dim] if order_cap is None else order_cap
    if max_order > order_cap:
        raise UnsupportedStrategyError(f'Inconsistency detected - Order {max_order} exceeds the cap {order_cap} for dimension {E.dim}')
    return [protocol_guessing(distribution, ensemble).value
            for distribution in superswitch_orders(E, max_order, max_branches)]

def limiting_guessing(stationary_triple, ensemble):
    """
    Function returning alpha P_g(D_star) + beta P_g(D_4/3) + gamma P_g(Id)
    for a stationary triple of the self-mapped recurrence.
    """
    if recurrence_residual(stationary_triple) >= FIXED_POINT_TOL:
        raise ChannelDomainError(f'Inconsistency detected - {stationary_triple} is not a fixed point of the recurrence')
    alpha, beta, gamma = stationary_triple
    return (alpha * channel_guessing(make_depolarizing_d2(P_STAR), ensemble) +
            beta * channel_guessing(make_depolarizing_d2(4.0 / 3.0), ensemble) +
            gamma * channel_guessing(make_depolarizing_d2(0.0), ensemble))

def first_order_shrinking_factors(ch):
    """
    Function returning (1-p, 1-eta1, 1-eta2) for a depolarisation
    channel D_p: the Bloch shrinking factors of D_p and of the
    first-order outcome channels D_eta1 (outcome +++) and D_eta2
    (outcomes -++ and +-+). A factor is nan when the outcome has
    zero probability.
    """
    outcomes = first_order_outcomes(ch, ch, ch, ch)
    factors = [1.0 - depolarizing_parameter(ch)]
    for label in ('+++', '-++'):
        weight, outcome_channel = outcomes[label]
        factors.append(float('nan') if outcome_channel is None else 1.0 - depolarizing_parameter(outcome_channel))
    return tuple(factors)

# ==========================
# Monte Carlo Region Volumes
# ==========================
def parse_region_predicate(predicate):
    """
    Function that maps a preset name or a clause list such as
    'ss1>channel&ss1>switch' onto a tuple of (lhs, op, rhs).
    The empty clause list never holds.
    """
    expression = REGION_PRESETS.get(predicate, predicate)
    clauses = []
    for clause in (elem for elem in expression.split('&') if elem.strip()):
        match = REGION_CLAUSE_REG_EXP.match(clause)
        if match is None or not {match.group('lhs'), match.group('rhs')} <= set(REGION_QUANTITIES):
            raise UnsupportedStrategyError(f'Inconsistency detected - Invalid region clause {clause!r}, quantities are {REGION_QUANTITIES}')
        clauses.append((match.group('lhs'), match.group('op'), match.group('rhs')))
    return tuple(clauses)

def region_guessing_batch(points, ensemble, max_order):
    """
    Function returning a dictionary quantity -> array with the
    guessing probabilities of the channel and of the superswitches
    of order 0..max_order for a stack of points (p1, p2, p3).
    """
    probs = np.column_stack([1.0 - points.sum(axis=1), points])
    values = {'channel': 0.5 + 0.5 * branch_helstrom_norms(probs, ensemble)}
    if max_order >= 0:
        for order, stack in enumerate(superswitch_batch(probs, max_order)):
            name = 'switch' if order == 0 else f'ss{order}'
            values[name] = 0.5 * stack.sum(axis=(-2, -1)) + 0.5 * branch_helstrom_norms(stack, ensemble).sum(axis=-1)
    return values

def evaluate_region_clauses(values, clauses):
    """
    Function returning the boolean mask of the points where every
    clause holds with strict dominance (margin 1e-12).
    """
    if not clauses:
        return np.zeros(values['channel'].shape, dtype=bool)
    mask = np.ones(values['channel'].shape, dtype=bool)
    for lhs, op, rhs in clauses:
        if op == '>':
            mask &= values[lhs] > values[rhs] + DOMINANCE_MARGIN
        else:
            mask &= values[lhs] < values[rhs] - DOMINANCE_MARGIN
    return mask

def count_region_partition(task):
    """
    Function that evaluates one partition of the Monte Carlo sample.
    Points are drawn uniformly from the unit cube with a PCG64
    generator and accepted when p1 + p2 + p3 <= 1. Returns the
    number of hits and (up to keep_points) hit points.
    """
    seed_sequence, count, clauses, ensemble, batch_size, keep_points = task
    rng = np.random.Generator(np.random.PCG64(seed_sequence))
    needed_order = max([-1] + [0 if name == 'switch' else int(name[2:])
                               for clause in clauses for name in (clause[0], clause[2])
                               if name != 'channel'])
    hits = 0
    kept = []
    buffer = np.empty((0, 3))
    remaining = count
    while remaining > 0:
        size = min(batch_size, remaining)
        while buffer.shape[0] < size:
            cube = rng.random((CUBE_DRAW_CHUNK, 3))
            buffer = np.concatenate([buffer, cube[cube.sum(axis=1) <= 1.0]])
        points, buffer = buffer[:size], buffer[size:]
        if clauses:
            mask = evaluate_region_clauses(region_guessing_batch(points, ensemble, needed_order), clauses)
            hits += int(mask.sum())
            if len(kept) < keep_points:
                kept.extend(tuple(point) for point in points[mask][:keep_points - len(kept)])
        remaining -= size
    return hits, kept

def region_volume(predicate, samples, seed, partitions=16, batch_size=20000, workers=1,
                  min_samples=10 ** 4, ensemble=None, keep_points=0):
    """
    Function returning a RegionEstimateDataCls for the region of the
    tetrahedron of qubit Pauli channels (p1, p2, p3) where predicate
    holds. The samples are split into a fixed number of partitions
    seeded by SeedSequence(seed).spawn(partitions); the per-partition
    counts are reduced in partition order, so the estimate does not
    depend on the number of workers.
    """
    if samples < min_samples:
        raise ChannelDomainError(f'Inconsistency detected - At least {min_samples} samples needed, got {samples}')
    if partitions < 1 or batch_size < 1:
        raise ChannelDomainError('Inconsistency detected - Partitions and batch size must be positive')
    clauses = parse_region_predicate(predicate)
    ensemble = make_orthogonal_pair(2) if ensemble is None else ensemble
    counts = [samples // partitions + (1 if index < samples % partitions else 0) for index in range(partitions)]
    per_partition_points = -(-keep_points // partitions) if keep_points else 0
    tasks = [(child, count, clauses, ensemble, batch_size, per_partition_points)
             for child, count in zip(np.random.SeedSequence(seed).spawn(partitions), counts)]
    if workers > 1:
        with Pool(processes=workers) as pool:
            results = pool.map(count_region_partition, tasks)
    else:
        results = [count_region_partition(task) for task in tasks]
    hits = sum(result[0] for result in results)
    points = tuple(itertools.chain.from_iterable(result[1] for result in results))[:keep_points]
    ratio = hits / samples
    ratio_standard_error = float(np.sqrt(ratio * (1.0 - ratio) / samples))
    return RegionEstimateDataCls(predicate=predicate,
                                 volume=ratio * TETRAHEDRON_VOLUME,
                                 ratio_to_tetrahedron=ratio,
                                 samples=samples,
                                 seed=seed,
                                 standard_error=ratio_standard_error * TETRAHEDRON_VOLUME,
                                 ratio_standard_error=ratio_standard_error,
                                 hits=hits,
                                 partitions=partitions,
                                 points=points)
