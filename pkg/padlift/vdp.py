# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    VDP - Generalized van der Put coefficients and series
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

import threading
import weakref
from padlift.funcspace import *
from padlift.db_cache import DbCache


_logger = logging.getLogger(__name__)


class CoefficientError(Exception):
    """
    Handle van der Put coefficient Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class MembershipViolation(CoefficientError):
    """
    Raised when v_p(B(m)) < tau(m), so b(m) is not a p-adic integer. The index m is a counterexample to f in F(Phi).

    """
    def __init__(self, m, tau_m, found_valuation, msg=''):
        self.m = m
        self.tau = tau_m
        self.valuation = found_valuation
        if not msg:
            msg = "Membership violation at m=%d: v_p(B(m))=%s < tau(m)=%d" % (m, found_valuation, tau_m)
        CoefficientError.__init__(self, msg)

    @property
    def deficit(self):
        return self.tau - self.valuation


class CoefficientCache(object):
    """
    Cache of computed coefficients B(Phi,f;m), keyed by function oracle, scale function and m.

    Residues are kept in memory for as long as the function oracle exists. Functions created from a json spec can
    also be stored in the cache database, see :class:`DbCache`. A cached residue is reused for any precision up to
    the precision it was computed with. Insertion is protected by a lock, so one cache can be shared by threads.

    """

    def __init__(self, db_uri=None):
        """
        :param db_uri: Database URI or sqlite filename for persistent storage. None keeps coefficients in memory only
        :type db_uri: str, None
        """
        self._lock = threading.Lock()
        self._memory = weakref.WeakKeyDictionary()
        self.db = DbCache(db_uri) if db_uri else None
        self.hits = 0
        self.misses = 0

    def __repr__(self):
        return "<CoefficientCache(functions=%d, hits=%d, misses=%d, db=%s)>" % \
               (len(self._memory), self.hits, self.misses, self.db.db_uri if self.db else None)

    @staticmethod
    def _scale_key(phi):
        return json.dumps(phi.as_dict(), sort_keys=True)

    def get(self, f, phi, m, K):
        """
        Return cached residue of B(m) modulo p^K or None

        :return int, None:
        """
        with self._lock:
            entry = self._memory.get(f, {}).get((phi, m))
            if entry is None and self.db and f.spec_key:
                entry = self.db.get_coefficient(f.spec_key, self._scale_key(phi), m)
                if entry:
                    self._memory.setdefault(f, {})[(phi, m)] = entry
            if entry is None or entry[0] < K:
                self.misses += 1
                return None
            self.hits += 1
            return entry[1] % f.prime.p ** K

    def store(self, f, phi, m, K, value):
        with self._lock:
            table = self._memory.setdefault(f, {})
            entry = table.get((phi, m))
            if entry is not None and entry[0] >= K:
                return
            table[(phi, m)] = (K, value)
            if self.db and f.spec_key:
                self.db.store_coefficient(f.spec_key, self._scale_key(phi), m, K, value)

    def clear(self):
        with self._lock:
            self._memory = weakref.WeakKeyDictionary()
            self.hits = 0
            self.misses = 0


_default_cache = None
_default_cache_lock = threading.Lock()


def default_coefficient_cache():
    """
    Return the coefficient cache used when no cache is passed. Uses the cache database if
    coefficient_database_caching is enabled in the configuration.

    :return CoefficientCache:
    """
    global _default_cache
    with _default_cache_lock:
        if _default_cache is None:
            _default_cache = CoefficientCache(DEFAULT_DATABASE_CACHE if COEFFICIENT_DATABASE_CACHING else None)
        return _default_cache


def set_default_coefficient_cache(cache):
    """
    Replace the coefficient cache used when no cache is passed, for instance by a cache with a database

    :param cache: New default cache
    :type cache: CoefficientCache
    """
    global _default_cache
    with _default_cache_lock:
        _default_cache = cache


def _resolve_cache(cache):
    if cache is False or not COEFFICIENT_CACHING_ENABLED:
        return None
    if cache is None:
        return default_coefficient_cache()
    return cache


class VdPCoeff(object):
    """
    Generalized van der Put coefficient record: index m, level tau(m), B(m) and the normalized coefficient
    b(m) = B(m) / p^tau(m), which is only present if v_p(B(m)) >= tau(m) is certified.

    """

    def __init__(self, m, tau_m, B, b=None, M=None):
        self.m = m
        self.tau_m = tau_m
        self.B = B
        self.b = b
        self.M = M

    def __repr__(self):
        return "<VdPCoeff(m=%d, tau=%d, B=%s, b=%s)>" % (self.m, self.tau_m, self.B, self.b)

    @property
    def valuation(self):
        return valuation(self.B)

    def as_dict(self):
        """
        Get coefficient as dictionary. Integers are decimal strings, digits are lists of integers.

        :return dict:
        """
        v = self.valuation
        return {
            'm': str(self.m),
            'tau': self.tau_m,
            'M': None if self.M is None else str(self.M),
            'B': str(self.B.value),
            'B_digits': self.B.digits,
            'valuation': str(v) if isinstance(v, ValuationBound) else v,
            'b': None if self.b is None else str(self.b.value),
            'b_digits': None if self.b is None else self.b.digits,
        }


def coeff_B(f, phi, m, K, cache=None):
    """
    Generalized van der Put coefficient B(Phi,f;m) modulo p^K:
    f(m) if m < p^(1+Phi(0)), otherwise f(m) - f(m - M(m)).

    >>> coeff_B(digit_linear(3, 1), ScaleFn([1], 2), 9, 3).value
    3

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param m: Coefficient index
    :type m: int
    :param K: Precision
    :type K: int
    :param cache: Coefficient cache, None for the default cache, False for no caching
    :type cache: CoefficientCache, None, bool

    :return PAdicApprox:
    """
    phi = scale_from_spec(phi)
    cache = _resolve_cache(cache)
    if cache:
        r = cache.get(f, phi, m, K)
        if r is not None:
            return PAdicApprox._from_residue(r, f.prime, K)
    if tau(phi, m, f.p) == 0:
        r = f.residue(m, K)
    else:
        r = f.residue(m, K) - f.residue(m - big_M(phi, m, f.p), K)
    B = PAdicApprox._from_residue(r, f.prime, K)
    if cache:
        cache.store(f, phi, m, K, B.value)
    return B


def coeff_b(f, phi, m, K, cache=None):
    """
    Normalized coefficient b(Phi,f;m) = p^(-tau(m)) B(Phi,f;m) modulo p^K. B is computed at precision K + tau(m)
    and shifted down tau(m) digits.

    >>> coeff_b(digit_linear(3, 1), ScaleFn([1], 2), 18, 2).value
    2

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param m: Coefficient index
    :type m: int
    :param K: Precision of b
    :type K: int
    :param cache: Coefficient cache, None for the default cache, False for no caching
    :type cache: CoefficientCache, None, bool

    :return PAdicApprox:
    """
    phi = scale_from_spec(phi)
    t = tau(phi, m, f.p)
    B = coeff_B(f, phi, m, K + t, cache)
    if not B.is_divisible(t):
        raise MembershipViolation(m, t, valuation(B))
    return B.shift_down(t)


def coefficient(f, phi, m, K, cache=None):
    """
    Full coefficient record for index m. B is computed at precision K + tau(m) so b has K digits. If
    v_p(B(m)) < tau(m) the record has no b.

    :return VdPCoeff:
    """
    phi = scale_from_spec(phi)
    t = tau(phi, m, f.p)
    B = coeff_B(f, phi, m, K + t, cache)
    b = B.shift_down(t) if B.is_divisible(t) else None
    M = big_M(phi, m, f.p) if t else None
    return VdPCoeff(m, t, B, b, M)


def coefficient_table(f, phi, m_start, m_stop, K, cache=None):
    """
    Coefficient records for m_start <= m < m_stop

    :return list of VdPCoeff:
    """
    return [coefficient(f, phi, m, K, cache) for m in range(m_start, m_stop)]


def classic_coeff_B(f, m, K):
    """
    Classical van der Put coefficient B(f;m): f(m) if m < p, else f(m) - f(m - m_k p^k) with m_k the leading digit
    of m. Written independently of the scale machinery, it must agree with coeff_B for the identity scale.

    :return PAdicApprox:
    """
    p = f.p
    if m < p:
        return f.evaluate(m, K)
    digits = digits_of(m, p)
    k = len(digits) - 1
    return f.evaluate(m, K) - f.evaluate(m - digits[k] * p ** k, K)


def eval_series(f, phi, x, j_max, cache=None):
    """
    Evaluate the generalized van der Put series of f at x, using only the levels in J(x) up to j_max:
    the sum of B(x(j)) for j in J(x) telescopes to f(x(j_max)). The result has the precision of x.

    >>> eval_series(digit_linear(3, 1), ScaleFn([1], 2), PAdicApprox([2, 0, 2, 0], 3), 1).digits
    [0, 0, 1, 0]

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param x: p-adic integer with precision at least 1+Phi(j_max)
    :type x: PAdicApprox
    :param j_max: Highest level of the partial sum
    :type j_max: int

    :return PAdicApprox:
    """
    phi = scale_from_spec(phi)
    if x.prime != f.prime:
        raise CoefficientError("Prime mismatch: x has p=%d, function has p=%d" % (x.p, f.p))
    if x.precision < 1 + phi(j_max):
        raise CoefficientError("Insufficient precision: series up to level %d needs %d digits, x has %d" %
                               (j_max, 1 + phi(j_max), x.precision))
    K = x.precision
    total = 0
    for j in sorted(jump_set(x, j_max, phi)):
        total += coeff_B(f, phi, truncate_x_j(x, j, phi), K, cache).value
    return PAdicApprox._from_residue(total, f.prime, K)


class SeriesOracle(FunctionOracle):
    """
    The partial van der Put series of f up to level j_max, as a function oracle of its own. At natural numbers
    below p^(1+Phi(j_max)) it agrees with f.

    """

    def __init__(self, f, phi, j_max):
        self.base = f
        self.series_scale = scale_from_spec(phi)
        self.j_max = j_max
        FunctionOracle.__init__(self, f.prime, name='series(%s)' % f.name,
                                params={'j_max': j_max, 'scale': self.series_scale.as_dict()},
                                scale=self.series_scale)

    def _evaluate(self, m, K):
        x = PAdicApprox.from_natural(m, self.prime, max(K, 1 + self.series_scale(self.j_max)))
        return eval_series(self.base, self.series_scale, x, self.j_max).value


def series_oracle(f, phi, j_max):
    """
    Wrap the partial series of f as new function oracle

    :return SeriesOracle:
    """
    return SeriesOracle(f, phi, j_max)


def verify_membership(f, phi, depth, K=None):
    """
    Check v_p(B(m)) >= tau(m) for all m < p^(1+Phi(depth)). By the coefficient criterion this holds on the window
    exactly when inputs below p^(1+Phi(depth)) agreeing up to digit Phi(n-1) give outputs agreeing modulo p^n, for
    1 <= n <= depth.

    The scan runs over increasing m and reports the least failing m.

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param depth: Window level
    :type depth: int
    :param K: Working precision, default 1+Phi(depth+1)
    :type K: int

    :return WindowReport:
    """
    phi = scale_from_spec(phi)
    p = f.p
    if K is None:
        K = 1 + phi(depth + 1)
    if K <= depth:
        raise CoefficientError("Working precision %d too low to certify valuations up to %d" % (K, depth))
    m_max = phi.block_power(p, depth)
    if m_max > MAX_SEARCH_SPACE:
        raise CoefficientError("Window %d exceeds search space limit %d" % (m_max, MAX_SEARCH_SPACE))
    window = {'depth': depth, 'm_max': m_max, 'precision': K, 'scale': phi.as_dict()}
    modulus = p ** K
    values = [f.residue(m, K) for m in range(m_max)]
    for t in range(1, depth + 1):
        low = phi.block_power(p, t - 1)
        divisor = p ** t
        for m in range(low, phi.block_power(p, t)):
            B = (values[m] - values[m % low]) % modulus
            if B % divisor:
                v = valuation(PAdicApprox._from_residue(B, f.prime, K))
                _logger.info("Membership check %s failed at m=%d: v_p(B)=%d < tau=%d" % (f.name, m, v, t))
                return WindowReport(False, window, {'m': m, 'tau': t, 'valuation': v, 'B': B},
                                    "v_p(B(%d)) = %d < tau(%d) = %d" % (m, v, m, t))
    _logger.info("Membership check %s passed on window m < %d" % (f.name, m_max))
    return WindowReport(True, window)
