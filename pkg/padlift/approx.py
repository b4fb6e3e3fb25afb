# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    APPROX - Approximability of continuous functions and the unit-slope lift
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

from padlift.hensel import *


_logger = logging.getLogger(__name__)

# Number of two-digit perturbations tested when p^2 is larger than this
MAX_TWO_DIGIT_SAMPLES = 16


class ApproxError(Exception):
    """
    Handle approximability Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class Inconsistent(object):
    """
    Result of a slope estimate which does not satisfy the approximation congruence for perturbation u_prime

    """

    def __init__(self, u_prime, n, reason):
        self.u_prime = u_prime
        self.n = n
        self.reason = reason

    def __repr__(self):
        return "Inconsistent(u_prime=%d, n=%d, reason='%s')" % (self.u_prime, self.n, self.reason)

    def __bool__(self):
        return False

    def as_dict(self):
        return {'u_prime': str(self.u_prime), 'n': self.n, 'reason': self.reason}


def _perturbations(p):
    one_digit = list(range(1, p))
    if p * p <= 4 * MAX_TWO_DIGIT_SAMPLES:
        two_digit = list(range(p, p * p))
    else:
        stride = (p * p - p) // MAX_TWO_DIGIT_SAMPLES + 1
        two_digit = list(range(p + 1, p * p, stride))
    return one_digit + two_digit


def estimate_delta(f, phi, u, n, h):
    """
    Estimate the slope delta_n f(u) modulo p from the approximation congruence

    f(u + p^(1+Phi(n-1)) u') = f(u) + p^(h+n) u' delta_n f(u)  modulo p^(h+n+1)

    The slope is solved with u' = 1 and then checked for u' = 1, ..., p-1 and a sample of two-digit u'.

    >>> estimate_delta(digit_square(7, 8), ScaleFn([1], 2), 1, 1, 0)
    2

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param u: Point
    :type u: int
    :param n: Level, 1 or more
    :type n: int
    :param h: Valuation shift
    :type h: int

    :return int, Inconsistent: Slope modulo p, or the first violating perturbation
    """
    phi = scale_from_spec(phi)
    if n < 1:
        raise ApproxError("Approximation level n must be 1 or more, got %d" % n)
    p = f.p
    K = h + n + 1
    modulus = p ** K
    scale = p ** (h + n)
    step = phi.block_power(p, n - 1)
    f_u = f.residue(u, K)
    diff = (f.residue(u + step, K) - f_u) % modulus
    if diff % scale:
        return Inconsistent(1, n, "f(u + p^(1+Phi(n-1))) - f(u) is not divisible by p^%d" % (h + n))
    delta = diff // scale % p
    for t in _perturbations(p):
        diff = (f.residue(u + step * t, K) - f_u) % modulus
        if diff != scale * t * delta % modulus:
            return Inconsistent(t, n, "Approximation congruence with slope %d fails for u'=%d" % (delta, t))
    return delta


class ApproxCertificate(object):
    """
    Window certificate of approximability at u: constants h and l and the slopes delta_n modulo p for the tested
    levels n. The unit flag tells if every tested slope is a unit.

    """

    def __init__(self, u, h, l, delta, window=None, unit_flag=None, details=None):
        """
        :param u: Point or start value of the residue class
        :type u: int
        :param h: Valuation shift
        :type h: int
        :param l: First level with a valid approximation congruence
        :type l: int
        :param delta: Mapping level n -> slope modulo p
        :type delta: dict
        :param window: Tested window
        :type window: dict
        :param unit_flag: All slopes are units, derived from delta if omitted
        :type unit_flag: bool
        :param details: Extra data, for instance a derivative estimate
        :type details: dict
        """
        self.u = u
        self.h = h
        self.l = l
        self.delta = dict(delta)
        self.window = {} if window is None else window
        self.unit_flag = all(d for d in self.delta.values()) if unit_flag is None else unit_flag
        self.details = {} if details is None else details

    def __repr__(self):
        return "<ApproxCertificate(u=%d, h=%d, l=%d, delta=%s)>" % (self.u, self.h, self.l, self.delta)

    def as_dict(self):
        """
        Get certificate as dictionary, integers as decimal strings

        :return dict:
        """
        return {
            'u': str(self.u),
            'h': self.h,
            'l': self.l,
            'delta_by_n': {str(n): d for n, d in sorted(self.delta.items())},
            'unit_flag': self.unit_flag,
            'window': json_value(self.window),
            'details': json_value(self.details),
        }

    def as_json(self):
        return json.dumps(self.as_dict(), indent=4)


def _class_points(phi, p, u, n0, depth):
    if depth < n0:
        raise ApproxError("Window depth %d is smaller than n0=%d" % (depth, n0))
    step = phi.block_power(p, n0)
    stop = phi.block_power(p, depth)
    if stop // step > MAX_SEARCH_SPACE:
        raise ApproxError("Residue class window of %d points exceeds search space limit" % (stop // step))
    return range(u % step, stop, step)


def verify_uniform_approx(f, phi, u, n0, h, l, n_hi, depth):
    """
    Check uniform approximability on the residue class of u modulo p^(1+Phi(n0)). For every point u' of the class
    below p^(1+Phi(depth)), in increasing order, and every level n from max(n0, l, 1) to n_hi it checks:

    * f(u') = 0 modulo p^(h+n0+1)
    * the approximation congruence at u' holds with a slope delta_n f(u')
    * the slope is a unit

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param u: Start value, u < p^(1+Phi(n0))
    :type u: int
    :param n0: Start level
    :type n0: int
    :param h: Valuation shift
    :type h: int
    :param l: First level of the approximation congruence
    :type l: int
    :param n_hi: Highest tested level
    :type n_hi: int
    :param depth: Window level of the sampled points
    :type depth: int

    :return WindowReport: With the slopes at u in details
    """
    phi = scale_from_spec(phi)
    p = f.p
    points = _class_points(phi, p, u, n0, depth)
    n_lo = max(n0, l, 1)
    window = {'u': u, 'n0': n0, 'h': h, 'l': l, 'n_range': [n_lo, n_hi],
              'point_max': phi.block_power(p, depth), 'points': len(points)}
    slopes = {}
    for point in points:
        if f.residue(point, h + n0 + 1):
            return WindowReport(False, window, {'u_prime': point},
                                "f(%d) is not 0 modulo p^%d" % (point, h + n0 + 1))
        for n in range(n_lo, n_hi + 1):
            delta = estimate_delta(f, phi, point, n, h)
            if isinstance(delta, Inconsistent):
                return WindowReport(False, window, {'u_prime': point, 'n': n, 'perturbation': delta.u_prime},
                                    delta.reason)
            if not delta:
                return WindowReport(False, window, {'u_prime': point, 'n': n},
                                    "Slope delta_%d f(%d) is not a unit" % (n, point))
            if point == points[0]:
                slopes[n] = delta
    _logger.info("Uniform approximability of %s verified on %d points" % (f.name, len(points)))
    return WindowReport(True, window, details={'delta': slopes})


def find_l(f, phi, u, h, n_hi, l_max=None, require_unit=True, n0=None, depth=None):
    """
    Least l <= l_max for which the approximation congruence holds at every level n with l <= n <= n_hi, with unit
    slopes if require_unit is set. Only u is tested, or every point of its residue class modulo p^(1+Phi(n0))
    below p^(1+Phi(depth)) if n0 and depth are given.

    >>> find_l(digit_square(2, 17), ScaleFn([1], 2), 1, 1, 3)
    2

    :return int:
    """
    phi = scale_from_spec(phi)
    l_max = n_hi if l_max is None else l_max
    if n0 is None or depth is None:
        points = [u]
    else:
        points = list(_class_points(phi, f.p, u, n0, depth))
    good = {}
    for n in range(1, n_hi + 1):
        deltas = [estimate_delta(f, phi, point, n, h) for point in points]
        good[n] = all(not isinstance(d, Inconsistent) and (d or not require_unit) for d in deltas)
    for l in range(1, min(l_max, n_hi) + 1):
        if all(good[n] for n in range(l, n_hi + 1)):
            return l
    raise ApproxError("No l <= %d makes %s approximable at u=%d with h=%d up to level %d" %
                      (l_max, f.name, u, h, n_hi))


def approx_certificate(f, phi, u, n0, h, n_hi, depth=None, l=None):
    """
    Build an approximability certificate on the residue class of u: find l if not given, verify uniform
    approximability on the window and collect the slopes at u.

    :return ApproxCertificate:
    """
    phi = scale_from_spec(phi)
    depth = n0 + 1 if depth is None else depth
    if l is None:
        l = find_l(f, phi, u, h, n_hi, n0=n0, depth=depth)
    report = verify_uniform_approx(f, phi, u, n0, h, l, n_hi, depth)
    if not report:
        raise ApproxError("Function %s is not uniformly approximable on the window: %s" % (f.name, report.reason))
    return ApproxCertificate(u, h, l, report.details['delta'], report.window)


def corollary_lift(f, phi, u, n0, h, l, n_max, depth=None, verify=True, K=None):
    """
    Lift a root of a uniformly approximable function with unit slopes. The generalized lift runs with correction
    sets {1, ..., p-1} at every level, so all blocks of the root above level n0 are single digits.

    >>> corollary_lift(polynomial(7, [-2, 0, 1]), identity_scale(), 3, 0, 0, 1, 2).root
    108

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param u: Start value, u < p^(1+Phi(n0)) with f(u) = 0 modulo p^(h+n0+1)
    :type u: int
    :param n0: Start level
    :type n0: int
    :param h: Valuation shift of the residue class
    :type h: int
    :param l: First level of the approximation congruence, at most n0+1
    :type l: int
    :param n_max: Last level
    :type n_max: int
    :param depth: Window level for the approximability check, default n0+1
    :type depth: int
    :param verify: Verify uniform approximability on the window before lifting
    :type verify: bool
    :param K: Working precision of the lift steps
    :type K: int

    :return LiftTrace:
    """
    phi = scale_from_spec(phi)
    p = f.p
    if n0 + 1 < l:
        raise ApproxError("Lift needs n0 + 1 >= l, got n0=%d and l=%d" % (n0, l))
    if verify:
        report = verify_uniform_approx(f, phi, u, n0, h, l, max(n_max, l), n0 + 1 if depth is None else depth)
        if not report:
            raise ApproxError("Uniform approximability check failed: %s" % report.reason)
    trace = lift(LiftProblem(f, phi, h, n0, u, n_max, s_strategy='full', K=K))
    if trace:
        for n in range(n0, trace.level):
            if rho(trace.root, n + 1, phi, p) >= p:
                raise ApproxError("Block %d of the root is not a single digit" % (n + 1))
    return trace


def from_derivative_mod_ps(f, s, u, derivative=None, n_hi=None):
    """
    Approximability from differentiability modulo p^s, for the identity scale. With h = s-1 the slopes are
    delta_n f(u) = d_s f(u) / p^h modulo p, which requires v_p(d_s f(u)) = h.

    The derivative modulo p^s is taken from the derivative oracle if given, else estimated with the difference
    quotient (f(u + p^n) - f(u)) / p^n, which must agree for n = s+1 and n = s+2.

    >>> from_derivative_mod_ps(polynomial(7, [-2, 0, 1]), 1, 3).delta
    {1: 6, 2: 6}

    :param f: Function oracle
    :type f: FunctionOracle
    :param s: Precision exponent of the derivative, 1 or more
    :type s: int
    :param u: Point
    :type u: int
    :param derivative: Derivative oracle, for instance Polynomial.derivative()
    :type derivative: FunctionOracle
    :param n_hi: Highest level of the slopes, default s+1
    :type n_hi: int

    :return ApproxCertificate:
    """
    if s < 1:
        raise ApproxError("Exponent s must be 1 or more, got %d" % s)
    p = f.p
    h = s - 1
    modulus = p ** s
    if derivative is not None:
        d = derivative.residue(u, s)
    else:
        quotients = []
        for n in (s + 1, s + 2):
            K = n + s
            diff = (f.residue(u + p ** n, K) - f.residue(u, K)) % p ** K
            if diff % p ** n:
                raise ApproxError("Function %s is not differentiable modulo p^%d at %d: difference not divisible "
                                  "by p^%d" % (f.name, s, u, n))
            quotients.append(diff // p ** n % modulus)
        if quotients[0] != quotients[1]:
            raise ApproxError("Difference quotients of %s at %d modulo p^%d are not stable: %s" %
                              (f.name, u, s, quotients))
        d = quotients[0]
    if d % p ** h or not d % modulus:
        raise ApproxError("Derivative modulo p^%d at %d is %d, its valuation must be h=%d" % (s, u, d, h))
    delta = d // p ** h % p
    n_hi = s + 1 if n_hi is None else n_hi
    phi = identity_scale()
    l = find_l(f, phi, u, h, n_hi)
    slopes = {}
    for n in range(l, n_hi + 1):
        slopes[n] = estimate_delta(f, phi, u, n, h)
        if slopes[n] != delta:
            raise ApproxError("Slope %s at level %d differs from derivative slope %d" % (slopes[n], n, delta))
    return ApproxCertificate(u, h, l, slopes, {'u': u, 'n_range': [l, n_hi]},
                             details={'s': s, 'derivative': d, 'delta': delta})
