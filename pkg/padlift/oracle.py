# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    ORACLE - Brute force root search and continuity checks
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

import pickle
from concurrent.futures import ProcessPoolExecutor
from concurrent.futures.process import BrokenProcessPool
from padlift.hensel import *


_logger = logging.getLogger(__name__)


class OracleError(Exception):
    """
    Handle brute force oracle Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class RootQuery(object):
    """
    Exhaustive root search: all r < p^k_search with f(r) = 0 modulo p^k_target, optionally restricted to
    r = u modulo p^congruence_exponent and to allowed values of the digit blocks of r under a scale function.

    """

    def __init__(self, f, k_search, k_target, u=None, congruence_exponent=None, phi=None, allowed=None):
        """
        :param f: Function oracle
        :type f: FunctionOracle
        :param k_search: Search all residues below p^k_search
        :type k_search: int
        :param k_target: Require f(r) = 0 modulo p^k_target
        :type k_target: int
        :param u: Residue class constraint, used with congruence_exponent
        :type u: int
        :param congruence_exponent: Require r = u modulo p^congruence_exponent
        :type congruence_exponent: int
        :param phi: Scale function of the block constraints
        :type phi: ScaleFn, dict
        :param allowed: Mapping block level j -> allowed values of rho(r;j)
        :type allowed: dict
        """
        self.f = f
        p = f.p
        if k_search < 1 or k_target < 1:
            raise OracleError("Search and target exponents must be 1 or more")
        if p ** k_search > MAX_SEARCH_SPACE:
            raise OracleError("Search space %d^%d exceeds limit %d" % (p, k_search, MAX_SEARCH_SPACE))
        if (u is None) != (congruence_exponent is None):
            raise OracleError("Congruence constraint needs both u and congruence exponent")
        if congruence_exponent is not None and congruence_exponent > k_search:
            raise OracleError("Congruence exponent %d exceeds search exponent %d" % (congruence_exponent, k_search))
        if allowed and phi is None:
            raise OracleError("Block constraints need a scale function")
        self.k_search = k_search
        self.k_target = k_target
        self.u = u
        self.congruence_exponent = congruence_exponent
        self.phi = None if phi is None else scale_from_spec(phi)
        self.allowed = {int(j): set(v) for j, v in (allowed or {}).items()}

    def __repr__(self):
        return "<RootQuery(%s, k_search=%d, k_target=%d)>" % (self.f.name, self.k_search, self.k_target)

    @classmethod
    def from_trace(cls, trace):
        """
        Root query matching a lift trace: search modulo p^(1+Phi(level)) for roots modulo p^(1+h+level) which are
        congruent to u and have their blocks in {0} | S(n).

        :param trace: Lift trace
        :type trace: LiftTrace

        :return RootQuery:
        """
        pr = trace.problem
        allowed = {n + 1: {0} | set(trace.s_sets[n]) for n in range(pr.n0, trace.level)}
        return cls(pr.f, trace.root_precision, trace.certification_level, pr.u, 1 + pr.phi(pr.n0), pr.phi,
                   allowed)

    def candidates(self):
        """
        Range of residues satisfying the congruence constraint

        :return range:
        """
        p = self.f.p
        stop = p ** self.k_search
        if self.u is None:
            return range(stop)
        step = p ** self.congruence_exponent
        return range(self.u % step, stop, step)

    def blocks_allowed(self, r):
        p = self.f.p
        for j, values in self.allowed.items():
            low = self.phi.block_power(p, j - 1)
            if (r % self.phi.block_power(p, j)) // low not in values:
                return False
        return True

    def as_dict(self):
        return {
            'function': json_value(self.f.as_dict()),
            'k_search': self.k_search,
            'k_target': self.k_target,
            'u': None if self.u is None else str(self.u),
            'congruence_exponent': self.congruence_exponent,
            'scale': None if self.phi is None else self.phi.as_dict(),
            'allowed': {str(j): sorted(v) for j, v in sorted(self.allowed.items())},
        }


def _scan_range(q, start, stop):
    f = q.f
    K = q.k_target
    return [r for r in q.candidates()[start:stop] if q.blocks_allowed(r) and not f.residue(r, K)]


def brute_roots(q, workers=None, chunk_size=None):
    """
    All residues of the root query in ascending order. The candidates are split in contiguous ranges which are
    scanned in worker processes if workers > 1. Functions which cannot be pickled are scanned sequentially.

    >>> brute_roots(RootQuery(polynomial(7, [-2, 0, 1]), 3, 3))
    [108, 235]

    :param q: Root query
    :type q: RootQuery
    :param workers: Number of worker processes, default from configuration
    :type workers: int
    :param chunk_size: Number of candidates per range
    :type chunk_size: int

    :return list:
    """
    workers = ORACLE_WORKERS if workers is None else workers
    chunk_size = ORACLE_CHUNK_SIZE if chunk_size is None else chunk_size
    total = len(q.candidates())
    ranges = [(start, min(start + chunk_size, total)) for start in range(0, total, chunk_size)]
    if workers > 1 and len(ranges) > 1:
        try:
            pickle.dumps(q)
        except (pickle.PicklingError, AttributeError, TypeError) as e:
            _logger.info("Function %s can not be pickled, scanning sequentially: %s" % (q.f.name, e))
        else:
            try:
                with ProcessPoolExecutor(max_workers=workers) as executor:
                    futures = [executor.submit(_scan_range, q, start, stop) for start, stop in ranges]
                    return [r for future in futures for r in future.result()]
            except (BrokenProcessPool, OSError) as e:
                _logger.warning("Process pool failed, scanning sequentially: %s" % e)
    return [r for start, stop in ranges for r in _scan_range(q, start, stop)]


def brute_check_xxx(f, phi, depth):
    """
    Check the continuity condition of F(Phi) on all pairs x, y < p^(1+Phi(depth)): if x = y modulo
    p^(1+Phi(n-1)) then f(x) = f(y) modulo p^n, for 1 <= n <= depth.

    Inputs are grouped by residue modulo p^(1+Phi(n-1)), within a group every value is compared with the value at
    the smallest member. The counterexample is the first failing pair for the smallest n.

    :param f: Function oracle
    :type f: FunctionOracle
    :param phi: Scale function
    :type phi: ScaleFn
    :param depth: Window level
    :type depth: int

    :return WindowReport:
    """
    phi = scale_from_spec(phi)
    p = f.p
    size = phi.block_power(p, depth)
    if size > MAX_SEARCH_SPACE:
        raise OracleError("Window %d exceeds search space limit %d" % (size, MAX_SEARCH_SPACE))
    window = {'depth': depth, 'x_max': size, 'scale': phi.as_dict()}
    values = [f.residue(x, max(depth, 1)) for x in range(size)]
    for n in range(1, depth + 1):
        group = phi.block_power(p, n - 1)
        modulus = p ** n
        for y in range(group, size):
            x = y % group
            if (values[x] - values[y]) % modulus:
                return WindowReport(False, window, {'x': x, 'y': y, 'n': n},
                                    "x=%d and y=%d agree modulo p^%d but f(x) != f(y) modulo p^%d" %
                                    (x, y, 1 + phi(n - 1), n))
    return WindowReport(True, window)
