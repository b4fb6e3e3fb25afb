# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    HENSEL - Generalized Hensel lifting with digit correction sets
#    © 2026 October - PadLift developers
#
#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as
#    published by the Free Software Foundation, either version 3 of the
#    License, or (at your option) any later version.
#
#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.
#
#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <http://www.gnu.org/licenses/>.
#

from padlift.vdp import *


_logger = logging.getLogger(__name__)

S_STRATEGIES = ['explicit', 'auto', 'full']
S_MODES = ['trajectory', 'exhaustive']


class HenselError(Exception):
    """
    Handle Hensel lifting Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class NoSSet(HenselError):
    """
    No digit correction set exists: a target residue class j*p^h mod p^(h+1) is not attained

    """
    def __init__(self, n, missing_class, m, msg=''):
        self.n = n
        self.missing_class = missing_class
        self.m = m
        if not msg:
            msg = "No S(%d) set found: residue class %d of b(m + i p^(1+Phi(%d))) mod p^(h+1) not attained " \
                  "for m=%d" % (n, missing_class, n, m)
        HenselError.__init__(self, msg)


class NoLiftDigit(HenselError):
    def __init__(self, l, u_l, members, msg=''):
        self.l = l
        self.u_l = u_l
        self.members = sorted(members)
        if not msg:
            msg = "No digit in {0} | %s lifts u_%d=%d to a root modulo p^(%d+h)" % (self.members, l, u_l, l + 2)
        HenselError.__init__(self, msg)


class MultipleLiftDigits(HenselError):
    def __init__(self, l, u_l, digits, msg=''):
        self.l = l
        self.u_l = u_l
        self.digits = digits
        if not msg:
            msg = "Multiple digits %s lift u_%d=%d, the correction set does not separate residue classes" % \
                  (digits, l, u_l)
        HenselError.__init__(self, msg)


class SSet(object):
    """
    Digit correction set S(n): p-1 block values i with 0 < i < p^(Phi(n+1)-Phi(n)). During the lift at level n
    the new block n+1 of the root is chosen from {0} | S(n).

    """

    def __init__(self, n, members, p, phi):
        """
        :param n: Level
        :type n: int
        :param members: Block values
        :type members: iterable of int
        :param p: Prime number
        :type p: int, Prime
        :param phi: Scale function
        :type phi: ScaleFn, dict
        """
        phi = scale_from_spec(phi)
        p = int(p)
        members = [int(i) for i in members]
        width = p ** phi.block_width(n + 1)
        if len(set(members)) != len(members):
            raise HenselError("S(%d) contains duplicate values: %s" % (n, members))
        if len(members) != p - 1:
            raise HenselError("S(%d) must contain p-1=%d values, got %d" % (n, p - 1, len(members)))
        for i in members:
            if not 0 < i < width:
                raise HenselError("S(%d) value %d out of range (0, %d)" % (n, i, width))
        self.n = n
        self.members = sorted(members)

    def __iter__(self):
        return iter(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, i):
        return i in self.members

    def __repr__(self):
        return "SSet(n=%d, %s)" % (self.n, self.members)

    def __eq__(self, other):
        if isinstance(other, SSet):
            return self.n == other.n and self.members == other.members
        return self.members == sorted(other)

    def __hash__(self):
        return hash((self.n, tuple(self.members)))


def full_s_set(n, p, phi):
    """
    The correction set {1, ..., p-1}

    :return SSet:
    """
    return SSet(n, range(1, int(p)), p, phi)


class StepFailure(object):
    """
    Lift status of a run which stopped at level n

    """

    def __init__(self, n, reason):
        self.n = n
        self.reason = reason

    def __repr__(self):
        return "StepFailure(n=%d, reason='%s')" % (self.n, self.reason)

    def __bool__(self):
        return False

    def as_dict(self):
        return {'n': self.n, 'reason': self.reason}


class LiftProblem(object):
    """
    Input of a generalized Hensel lift: a function f in F(Phi), constants h and n0 and a start value
    u < p^(1+Phi(n0)) with f(u) = 0 modulo p^(1+h+n0).

    The correction sets S(n) are given explicitly, discovered per level or taken as {1, ..., p-1}. In trajectory
    mode the correction condition is checked for the current iterate only, in exhaustive mode for every
    m < p^(1+Phi(n)) with m = u modulo p^(1+Phi(n0)).

    >>> lp = LiftProblem(digit_linear(3, 1), ScaleFn([1], 2), 0, 0, 2, 2, s_strategy='explicit', s_sets=[1, 2])
    >>> lp.s_set(1)
    SSet(n=1, [1, 2])

    """

    def __init__(self, f, phi, h, n0, u, n_max, s_strategy='auto', s_sets=None, mode='trajectory', K=None,
                 strict=False):
        """
        :param f: Function oracle
        :type f: FunctionOracle
        :param phi: Scale function
        :type phi: ScaleFn, dict
        :param h: Valuation shift of the correction condition
        :type h: int
        :param n0: Start level
        :type n0: int
        :param u: Start value, u < p^(1+Phi(n0))
        :type u: int
        :param n_max: Last level, the root is certified modulo p^(1+h+n_max)
        :type n_max: int
        :param s_strategy: 'explicit', 'auto' or 'full'
        :type s_strategy: str
        :param s_sets: For explicit strategy: one list of block values used at every level, or a dictionary level -> list
        :type s_sets: list, dict
        :param mode: 'trajectory' or 'exhaustive'
        :type mode: str
        :param K: Working precision for the lift steps, default 2+h+l at level l
        :type K: int
        :param strict: Raise on multiple lifting digits instead of choosing the smallest
        :type strict: bool
        """
        self.f = f
        self.phi = scale_from_spec(phi)
        self.p = f.p
        for name, value in [('h', h), ('n0', n0), ('u', u), ('n_max', n_max)]:
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise HenselError("%s must be a nonnegative integer, got %s" % (name, value))
        if n_max < n0:
            raise HenselError("n_max=%d is smaller than n0=%d" % (n_max, n0))
        if s_strategy not in S_STRATEGIES:
            raise HenselError("Unknown S strategy '%s', use one of %s" % (s_strategy, S_STRATEGIES))
        if mode not in S_MODES:
            raise HenselError("Unknown mode '%s', use one of %s" % (mode, S_MODES))
        if s_strategy == 'explicit' and not s_sets:
            raise HenselError("Explicit S strategy needs S sets")
        self.h = h
        self.n0 = n0
        self.u = u
        self.n_max = n_max
        self.s_strategy = s_strategy
        self.mode = mode
        self.K = K
        self.strict = strict
        self.s_sets = {}
        if s_strategy == 'explicit':
            if isinstance(s_sets, dict):
                self.s_sets = {int(n): SSet(int(n), s, self.p, self.phi) for n, s in s_sets.items()}
            else:
                self.s_sets = {n: SSet(n, s_sets, self.p, self.phi) for n in range(n0, n_max)}

        base = self.phi.block_power(self.p, n0)
        if u >= base:
            raise HenselError("Start value u=%d must be smaller than p^(1+Phi(n0)) = %d" % (u, base))
        if f.residue(u, 1 + h + n0):
            raise HenselError("f(u) is not 0 modulo p^(1+h+n0) = %d^%d" % (self.p, 1 + h + n0))

    def __repr__(self):
        return "<LiftProblem(%s, %s, h=%d, n0=%d, u=%d, n_max=%d, %s)>" % \
               (self.f.name, self.phi, self.h, self.n0, self.u, self.n_max, self.s_strategy)

    def s_set(self, n):
        """
        Explicit or full correction set for level n. Returns None for the auto strategy.

        :return SSet, None:
        """
        if self.s_strategy == 'full':
            return full_s_set(n, self.p, self.phi)
        if self.s_strategy == 'explicit':
            if n not in self.s_sets:
                raise HenselError("No S set given for level %d" % n)
            return self.s_sets[n]
        return None

    def admissible_m(self, n):
        """
        All m < p^(1+Phi(n)) with m = u modulo p^(1+Phi(n0))

        :return range:
        """
        return admissible_m(self.phi, self.p, self.u, self.n0, n)


def admissible_m(phi, p, u, n0, n):
    step = phi.block_power(p, n0)
    stop = phi.block_power(p, n)
    if stop // step > MAX_SEARCH_SPACE:
        raise HenselError("Exhaustive window of %d values exceeds search space limit" % (stop // step))
    return range(u % step, stop, step)


def _target_classes(p, h):
    return {j * p ** h for j in range(1, p)}


def check_s_condition(f, phi, h, n, m, S, K=None):
    """
    Check the correction condition at level n for one m < p^(1+Phi(n)): the values b(m + i p^(1+Phi(n))) modulo
    p^(h+1) for i in S are exactly p^h, 2p^h, ..., (p-1)p^h, each once.

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param h: Valuation shift
    :type h: int
    :param n: Level
    :type n: int
    :param m: Base point, m < p^(1+Phi(n))
    :type m: int
    :param S: Correction set
    :type S: SSet, list
    :param K: Precision of b, at least h+1
    :type K: int

    :return bool:
    """
    phi = scale_from_spec(phi)
    p = f.p
    base = phi.block_power(p, n)
    if m >= base:
        raise HenselError("m=%d must be smaller than p^(1+Phi(%d)) = %d" % (m, n, base))
    K = h + 1 if K is None else max(K, h + 1)
    modulus = p ** (h + 1)
    values = [coeff_b(f, phi, m + i * base, K).value % modulus for i in S]
    return sorted(values) == sorted(_target_classes(p, h))


def discover_S(f, phi, h, n, u, n0, mode='trajectory', m=None):
    """
    Find the correction set S(n) with the smallest members. Block values i are scanned in increasing order, i is
    added if for every checked m the value b(m + i p^(1+Phi(n))) falls in a target class j*p^h mod p^(h+1) which no
    earlier member hits. If this greedy pass ends with fewer than p-1 members while every target class is attained
    at every point, a depth first search over the candidate block values finds the first set in lexicographic order.

    In trajectory mode only m is checked (default u). In exhaustive mode all m < p^(1+Phi(n)) with m = u modulo
    p^(1+Phi(n0)) are checked.

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param h: Valuation shift
    :type h: int
    :param n: Level
    :type n: int
    :param u: Start value of the lift
    :type u: int
    :param n0: Start level of the lift
    :type n0: int
    :param mode: 'trajectory' or 'exhaustive'
    :type mode: str
    :param m: Trajectory point, default u
    :type m: int

    :return SSet:
    """
    phi = scale_from_spec(phi)
    p = f.p
    if mode == 'trajectory':
        points = [u if m is None else m]
    elif mode == 'exhaustive':
        points = list(admissible_m(phi, p, u, n0, n))
    else:
        raise HenselError("Unknown mode '%s', use one of %s" % (mode, S_MODES))
    base = phi.block_power(p, n)
    width = p ** phi.block_width(n + 1)
    if width * len(points) > MAX_SEARCH_SPACE:
        raise HenselError("Search for S(%d) over %d values exceeds search space limit" % (n, width * len(points)))
    targets = _target_classes(p, h)
    modulus = p ** (h + 1)
    used = [set() for _ in points]
    members = []
    candidates = []
    for i in range(1, width):
        classes = tuple(coeff_b(f, phi, point + i * base, h + 1).value % modulus for point in points)
        if not all(c in targets for c in classes):
            continue
        candidates.append((i, classes))
        if all(c not in used[k] for k, c in enumerate(classes)):
            members.append(i)
            for k, c in enumerate(classes):
                used[k].add(c)
            if len(members) == p - 1:
                break
    if len(members) < p - 1:
        # the greedy pass scanned every block value, candidates is complete
        for k, point in enumerate(points):
            missing = sorted(targets - {classes[k] for _, classes in candidates})
            if missing:
                raise NoSSet(n, missing[0], point)
        members = _match_classes(candidates, len(points), p - 1)
        if members is None:
            raise NoSSet(n, min(targets), points[0],
                         "No S(%d) set found: no choice of block values hits every residue class once for all %d "
                         "points" % (n, len(points)))
        _logger.info("Greedy choice of S(%d) failed, backtracking found %s" % (n, members))
    s = SSet(n, members, p, phi)
    _logger.info("Discovered %s for %s in %s mode" % (s, f.name, mode))
    return s


def _match_classes(candidates, point_count, size):
    """
    First choice of size candidates, in lexicographic order, whose residue classes are distinct at every point.
    Depth first search over (block value, classes) pairs, returns None if no choice exists.

    :return list:
    """
    used = [set() for _ in range(point_count)]
    chosen = []
    pos = 0
    steps = 0
    while len(chosen) < size:
        steps += 1
        if steps > MAX_SEARCH_SPACE:
            raise HenselError("Backtracking search for S set exceeds search space limit %d" % MAX_SEARCH_SPACE)
        while pos <= len(candidates) - (size - len(chosen)):
            classes = candidates[pos][1]
            if not any(c in used[k] for k, c in enumerate(classes)):
                break
            pos += 1
        else:
            if not chosen:
                return None
            pos = chosen.pop()
            for k, c in enumerate(candidates[pos][1]):
                used[k].discard(c)
            pos += 1
            continue
        chosen.append(pos)
        for k, c in enumerate(candidates[pos][1]):
            used[k].add(c)
        pos += 1
    return [candidates[c][0] for c in chosen]


def lift_step(f, phi, h, l, u_l, S, K=None, strict=False):
    """
    One lifting step: find i in {0} | S with f(u_l + i p^(1+Phi(l))) = 0 modulo p^(2+h+l).

    Every candidate is evaluated with the function oracle. For nonzero i the step also checks
    f(u_l + i p^(1+Phi(l))) = f(u_l) + B(u_l + i p^(1+Phi(l))) with M(u_l + i p^(1+Phi(l))) = i p^(1+Phi(l)).

    >>> lift_step(digit_linear(3, 1), ScaleFn([1], 2), 0, 0, 2, [1, 2])
    (20, 2)

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param h: Valuation shift
    :type h: int
    :param l: Level
    :type l: int
    :param u_l: Current iterate, u_l < p^(1+Phi(l)) and f(u_l) = 0 modulo p^(1+h+l)
    :type u_l: int
    :param S: Correction set
    :type S: SSet, list
    :param K: Working precision, at least 2+h+l
    :type K: int
    :param strict: Raise MultipleLiftDigits if more than one digit works
    :type strict: bool

    :return tuple: Next iterate and chosen block value
    """
    phi = scale_from_spec(phi)
    p = f.p
    target = 2 + h + l
    K = target if K is None else max(K, target)
    base = phi.block_power(p, l)
    if u_l >= base:
        raise HenselError("Iterate u_%d=%d must be smaller than p^(1+Phi(%d)) = %d" % (l, u_l, l, base))
    f_u = f.residue(u_l, K)
    if f_u % p ** (1 + h + l):
        raise HenselError("f(u_%d) is not 0 modulo p^%d" % (l, 1 + h + l))
    modulus = p ** K
    target_modulus = p ** target
    candidates = []
    for i in [0] + sorted(S):
        m = u_l + i * base
        value = f.residue(m, K)
        if i:
            if tau(phi, m, p) != l + 1 or big_M(phi, m, p) != i * base:
                raise HenselError("Block value %d does not fit block %d of scale %s" % (i, l + 1, phi))
            if (f_u + coeff_B(f, phi, m, K).value - value) % modulus:
                raise HenselError("Coefficient identity violated at m=%d, inconsistent function oracle" % m)
        if not value % target_modulus:
            candidates.append(i)
    if not candidates:
        raise NoLiftDigit(l, u_l, S)
    if len(candidates) > 1:
        if strict:
            raise MultipleLiftDigits(l, u_l, candidates)
        _logger.warning("Multiple lifting digits %s at level %d for u=%d, choosing %d" %
                        (candidates, l, u_l, candidates[0]))
    i = candidates[0]
    _logger.debug("Lift level %d: u=%d, i=%d" % (l, u_l, i))
    return u_l + i * base, i


class LiftTrace(object):
    """
    Result of a lift: iterates u_n0, ..., u_nmax, the chosen block values, the correction sets used and the
    certification residues f(u_j) mod p^(1+h+j). The root is only certified modulo p^(1+h+n_max), it is never
    reported as an exact zero.

    """

    def __init__(self, problem):
        self.problem = problem
        self.iterates = [problem.u]
        self.chosen = []
        self.s_sets = {}
        self.certification = [problem.f.residue(problem.u, 1 + problem.h + problem.n0)]
        self.status = 'success'

    def __repr__(self):
        return "<LiftTrace(%s, root=%s, %s)>" % (self.problem.f.name, self.root, self.status)

    def __bool__(self):
        return self.success

    @property
    def success(self):
        return not isinstance(self.status, StepFailure)

    @property
    def level(self):
        """
        Level of the last iterate

        :return int:
        """
        return self.problem.n0 + len(self.iterates) - 1

    @property
    def root(self):
        """
        Last iterate, an approximation of the root modulo p^(1+Phi(level))

        :return int:
        """
        return self.iterates[-1]

    @property
    def root_precision(self):
        return 1 + self.problem.phi(self.level)

    @property
    def root_digits(self):
        return digits_of(self.root, self.problem.p, self.root_precision)

    @property
    def certification_level(self):
        """
        Exponent e with f(root) = 0 modulo p^e

        :return int:
        """
        return 1 + self.problem.h + self.level

    def as_dict(self):
        """
        Get lift trace as dictionary. Integers are decimal strings, digits are lists of integers.

        :return dict:
        """
        pr = self.problem
        return {
            'function': json_value(pr.f.as_dict()),
            'scale': pr.phi.as_dict(),
            'p': pr.p,
            'h': pr.h,
            'n0': pr.n0,
            'u': str(pr.u),
            'n_max': pr.n_max,
            's_strategy': pr.s_strategy,
            'mode': pr.mode,
            'iterates': [str(u) for u in self.iterates],
            'chosen_i': [str(i) for i in self.chosen],
            's_sets': {str(n): [str(i) for i in s] for n, s in sorted(self.s_sets.items())},
            'certification': [str(r) for r in self.certification],
            'root': str(self.root),
            'root_digits': self.root_digits,
            'certification_level': self.certification_level,
            'status': 'success' if self.success else 'failure',
            'failure': None if self.success else self.status.as_dict(),
        }

    def as_json(self):
        return json.dumps(self.as_dict(), indent=4)


def _level_s_set(problem, l, u_l):
    S = problem.s_set(l)
    if S is None:
        return discover_S(problem.f, problem.phi, problem.h, l, problem.u, problem.n0, problem.mode, m=u_l)
    points = [u_l] if problem.mode == 'trajectory' else problem.admissible_m(l)
    for m in points:
        if not check_s_condition(problem.f, problem.phi, problem.h, l, m, S):
            raise HenselError("%s does not satisfy the correction condition at m=%d" % (S, m))
    return S


def lift(problem):
    """
    Run the generalized Hensel lift for levels n0, ..., n_max-1. A failing level does not raise, the trace gets a
    StepFailure status.

    >>> problem = LiftProblem(digit_linear(3, 1), ScaleFn([1], 2), 0, 0, 2, 2, s_strategy='explicit', s_sets=[1, 2])
    >>> lift(problem).iterates
    [2, 20, 182]

    :param problem: Lift problem
    :type problem: LiftProblem

    :return LiftTrace:
    """
    trace = LiftTrace(problem)
    f = problem.f
    for l in range(problem.n0, problem.n_max):
        u_l = trace.iterates[-1]
        try:
            S = _level_s_set(problem, l, u_l)
            u_next, i = lift_step(f, problem.phi, problem.h, l, u_l, S, problem.K, problem.strict)
        except (HenselError, CoefficientError) as e:
            trace.status = StepFailure(l, str(e))
            _logger.info("Lift of %s stopped at level %d: %s" % (f.name, l, e))
            break
        trace.s_sets[l] = S.members
        trace.chosen.append(i)
        trace.iterates.append(u_next)
        trace.certification.append(f.residue(u_next, 2 + problem.h + l))
    else:
        _logger.info("Lift of %s from u=%d: root %d modulo p^%d" %
                     (f.name, problem.u, trace.root, trace.root_precision))
    return trace


def verify_trace(trace, K=None):
    """
    Recompute every invariant of a lift trace with the function oracle: iterate bounds and recursion, vanishing of
    f(u_j) modulo p^(1+h+j), the coefficient identity per step, the blocks of the root and its congruence to u.

    :param trace: Lift trace
    :type trace: LiftTrace
    :param K: Working precision, default 2+h+n_max
    :type K: int

    :return WindowReport:
    """
    pr = trace.problem
    f, phi, p, h = pr.f, pr.phi, pr.p, pr.h
    K = 2 + h + pr.n_max if K is None else K
    window = {'n0': pr.n0, 'level': trace.level, 'precision': K}

    def fail(j, reason):
        return WindowReport(False, window, {'level': j}, reason)

    if trace.iterates[0] != pr.u:
        return fail(pr.n0, "First iterate %d differs from u=%d" % (trace.iterates[0], pr.u))
    for k, u_j in enumerate(trace.iterates):
        j = pr.n0 + k
        if u_j >= phi.block_power(p, j):
            return fail(j, "Iterate u_%d=%d exceeds p^(1+Phi(%d))" % (j, u_j, j))
        if f.residue(u_j, 1 + h + j):
            return fail(j, "f(u_%d) is not 0 modulo p^%d" % (j, 1 + h + j))
        if k == len(trace.iterates) - 1:
            break
        i = trace.chosen[k]
        u_next = trace.iterates[k + 1]
        if i and i not in trace.s_sets.get(j, []):
            return fail(j, "Block value %d not in S(%d)" % (i, j))
        if u_next != u_j + i * phi.block_power(p, j):
            return fail(j, "Iterate u_%d is not u_%d + i p^(1+Phi(%d))" % (j + 1, j, j))
        if i:
            B = coeff_B(f, phi, u_next, K)
            if (f.residue(u_j, K) + B.value - f.residue(u_next, K)) % p ** K or not B.is_divisible(j + 1):
                return fail(j, "Coefficient identity violated at level %d" % j)
    root = trace.root
    if root % phi.block_power(p, pr.n0) != pr.u:
        return fail(pr.n0, "Root is not congruent to u modulo p^(1+Phi(n0))")
    for n in range(pr.n0, trace.level):
        if rho(root, n + 1, phi, p) not in [0] + list(trace.s_sets.get(n, [])):
            return fail(n, "Block %d of the root not in {0} | S(%d)" % (n + 1, n))
    return WindowReport(True, window)


def verify_uniqueness_condition(f, phi, h, u, n0, depth):
    """
    Check b(m) = 0 modulo p^h for all m with p^(1+Phi(n0)) <= m < p^(1+Phi(depth)) and m = u modulo
    p^(1+Phi(n0)). Holds trivially for h = 0. Given this condition the root of the lift is unique among the
    roots with the same blocks; this check certifies it on a window only.

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param h: Valuation shift
    :type h: int
    :param u: Start value
    :type u: int
    :param n0: Start level
    :type n0: int
    :param depth: Window level
    :type depth: int

    :return WindowReport:
    """
    phi = scale_from_spec(phi)
    p = f.p
    start = phi.block_power(p, n0)
    stop = phi.block_power(p, depth)
    window = {'h': h, 'n0': n0, 'm_min': start, 'm_max': stop}
    if h == 0:
        return WindowReport(True, window, details={'trivial': True})
    if (stop - start) // start > MAX_SEARCH_SPACE:
        raise HenselError("Uniqueness window exceeds search space limit")
    modulus = p ** h
    for m in range(start + u % start, stop, start):
        try:
            b = coeff_b(f, phi, m, h)
        except MembershipViolation as e:
            return WindowReport(False, window, {'m': m}, str(e))
        if b.value % modulus:
            return WindowReport(False, window, {'m': m, 'b': b.value},
                                "b(%d) = %d is not 0 modulo p^%d" % (m, b.value, h))
    return WindowReport(True, window)


def find_start_points(f, phi, h, n0):
    """
    All u < p^(1+Phi(n0)) with f(u) = 0 modulo p^(1+h+n0)

    >>> find_start_points(polynomial(7, [-2, 0, 1]), identity_scale(), 0, 0)
    [3, 4]

    :return list:
    """
    phi = scale_from_spec(phi)
    size = phi.block_power(f.p, n0)
    if size > MAX_SEARCH_SPACE:
        raise HenselError("Start point window %d exceeds search space limit" % size)
    K = 1 + h + n0
    return [u for u in range(size) if not f.residue(u, K)]


def classic_lift(f, u, r0, n_max, K=None):
    """
    Classical Hensel lift as a configuration of the generalized lift: identity scale, h = 0, start precision r0
    (u < p^r0 and f(u) = 0 modulo p^r0) and correction sets {1, ..., p-1}.

    >>> classic_lift(polynomial(7, [-2, 0, 1]), 3, 1, 2).root
    108

    :return LiftTrace:
    """
    if r0 < 1:
        raise HenselError("Start precision r0 must be 1 or more, got %d" % r0)
    return lift(LiftProblem(f, identity_scale(), 0, r0 - 1, u, n_max, s_strategy='full', K=K))
