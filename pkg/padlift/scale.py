# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    SCALE - Scale functions and the digit blocks they induce
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

from functools import lru_cache
from padlift.padic import *


_logger = logging.getLogger(__name__)


class ScaleError(Exception):
    """
    Handle scale function Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class ScaleFn(object):
    """
    A strictly increasing function Phi from the natural numbers to the natural numbers, given by a finite table
    Phi(0), ..., Phi(N) and an affine tail Phi(n) = Phi(N) + slope * (n - N) for n > N. Phi(-1) = -1 by convention.

    Phi splits the digits of a p-adic integer in blocks: block j holds the digits Phi(j-1)+1 up to Phi(j).

    The table is stored in canonical form, trailing entries which follow from the tail rule are dropped, so equal
    functions compare and hash equal.

    >>> phi = ScaleFn([1], 2)
    >>> [phi(n) for n in range(-1, 4)]
    [-1, 1, 3, 5, 7]
    >>> phi == ScaleFn([1, 3, 5, 7], 2)
    True

    """

    def __init__(self, table, tail_slope=1):
        """
        :param table: Values Phi(0), Phi(1), ..., Phi(N)
        :type table: list of int
        :param tail_slope: Slope of the affine extension beyond the table, 1 or more
        :type tail_slope: int
        """
        table = list(table)
        if not table:
            raise ScaleError("Scale function table must contain Phi(0)")
        if any(isinstance(v, bool) or not isinstance(v, int) for v in table):
            raise ScaleError("Scale function values must be integers: %s" % table)
        if isinstance(tail_slope, bool) or not isinstance(tail_slope, int) or tail_slope < 1:
            raise ScaleError("Tail slope must be a positive integer, got %s" % tail_slope)
        if table[0] < 0:
            raise ScaleError("Phi(0) must be nonnegative, got %d" % table[0])
        for n in range(1, len(table)):
            if table[n] <= table[n - 1]:
                raise ScaleError("Scale function is not strictly increasing: Phi(%d)=%d, Phi(%d)=%d" %
                                 (n - 1, table[n - 1], n, table[n]))
        while len(table) > 1 and table[-1] == table[-2] + tail_slope:
            table.pop()
        self.table = tuple(table)
        self.tail_slope = tail_slope

    def __call__(self, n):
        if n == -1:
            return -1
        if n < -1:
            raise ScaleError("Scale function is not defined for n=%d" % n)
        last = len(self.table) - 1
        if n <= last:
            return self.table[n]
        return self.table[last] + self.tail_slope * (n - last)

    def __repr__(self):
        if self.is_identity():
            return "ScaleFn(Id)"
        return "ScaleFn(table=%s, tail_slope=%d)" % (list(self.table), self.tail_slope)

    def __eq__(self, other):
        if not isinstance(other, ScaleFn):
            return NotImplemented
        return self.table == other.table and self.tail_slope == other.tail_slope

    def __hash__(self):
        return hash((self.table, self.tail_slope))

    def is_identity(self):
        return self.table == (0,) and self.tail_slope == 1

    def block_power(self, p, n):
        """
        Return p^(1+Phi(n)), the modulus fixing the digits of blocks 0 up to n

        :param p: Prime
        :type p: int, Prime
        :param n: Block level, -1 or more
        :type n: int

        :return int:
        """
        return _block_power(self, int(p), n)

    def block_width(self, n):
        """
        Number of digits in block n, i.e. Phi(n) - Phi(n-1)

        :return int:
        """
        return self(n) - self(n - 1)

    def as_dict(self):
        """
        Get scale function as json scale spec: {"id": true} for the identity, else table and tail slope.

        :return dict:
        """
        if self.is_identity():
            return {'id': True}
        return {'table': list(self.table), 'tail_slope': self.tail_slope}

    def as_json(self):
        return json.dumps(self.as_dict())


@lru_cache(maxsize=8192)
def _block_power(phi, p, n):
    return p ** (1 + phi(n))


def identity_scale():
    """
    The identity scale function, with it the generalized van der Put series is the classical one

    >>> identity_scale()(5)
    5

    :return ScaleFn:
    """
    return ScaleFn([0], 1)


def scale_from_spec(spec):
    """
    Create scale function from json scale spec.

    >>> scale_from_spec({"table": [1, 3, 5], "tail_slope": 2})
    ScaleFn(table=[1], tail_slope=2)
    >>> scale_from_spec({"id": True})
    ScaleFn(Id)

    :param spec: Dictionary or json string with 'id' or 'table' and optional 'tail_slope' keys
    :type spec: dict, str

    :return ScaleFn:
    """
    if isinstance(spec, ScaleFn):
        return spec
    if isinstance(spec, str):
        if spec.strip().lower() in ['id', 'identity']:
            return identity_scale()
        try:
            spec = json.loads(spec)
        except json.decoder.JSONDecodeError as e:
            raise ScaleError("Invalid scale spec %s: %s" % (spec, e))
    if not isinstance(spec, dict):
        raise ScaleError("Scale spec must be a dictionary, got %s" % spec)
    if spec.get('id'):
        return identity_scale()
    if 'table' not in spec:
        raise ScaleError("Scale spec needs 'id' or 'table' key: %s" % spec)
    return ScaleFn(spec['table'], spec.get('tail_slope', 1))


def _as_scale(phi):
    if not isinstance(phi, ScaleFn):
        phi = scale_from_spec(phi)
    return phi


def tau(phi, m, p):
    """
    Block level of m: the least h with m < p^(1+Phi(h))

    >>> tau(ScaleFn([1], 2), 7, 2)
    1
    >>> tau(identity_scale(), 5, 3)
    1

    :param phi: Scale function
    :type phi: ScaleFn
    :param m: Natural number
    :type m: int
    :param p: Prime
    :type p: int, Prime

    :return int:
    """
    phi = _as_scale(phi)
    if m < 0:
        raise ScaleError("tau is defined for natural numbers only, got %d" % m)
    p = int(p)
    h = 0
    while m >= phi.block_power(p, h):
        h += 1
    return h


def big_M(phi, m, p):
    """
    Top digit block of m at level tau(m), in place. Only defined for m >= p^(1+Phi(0)).

    >>> big_M(ScaleFn([1], 2), 7, 2)
    4
    >>> big_M(identity_scale(), 5, 3)
    3

    :param phi: Scale function
    :type phi: ScaleFn
    :param m: Natural number, at least p^(1+Phi(0))
    :type m: int
    :param p: Prime
    :type p: int, Prime

    :return int:
    """
    phi = _as_scale(phi)
    p = int(p)
    t = tau(phi, m, p)
    if t == 0:
        raise ScaleError("M(m) is only defined for m >= p^(1+Phi(0)), got m=%d" % m)
    low = phi.block_power(p, t - 1)
    return m - m % low


def _as_padic(x, K, p):
    if isinstance(x, PAdicApprox):
        if p is not None and x.prime != p:
            raise ScaleError("Prime mismatch: x has p=%d, expected p=%d" % (x.p, int(p)))
        if x.precision < K:
            raise ScaleError("Insufficient precision: %d digits needed, x has %d" % (K, x.precision))
        return x
    if p is None:
        raise ScaleError("Prime needed for natural number input")
    return PAdicApprox.from_natural(x, p, max(K, 1))


def rho(x, j, phi, p=None):
    """
    j-th digit block of x, shifted to weight p^0

    >>> rho(PAdicApprox([2, 0, 2, 1], 3), 1, ScaleFn([1], 2))
    5

    :param x: p-adic integer, or natural number if p is given
    :type x: PAdicApprox, int
    :param j: Block number, 0 or more
    :type j: int
    :param phi: Scale function
    :type phi: ScaleFn
    :param p: Prime, only needed for natural number input
    :type p: int, Prime

    :return int:
    """
    phi = _as_scale(phi)
    x = _as_padic(x, 1 + phi(j), p)
    low = phi.block_power(x.p, j - 1)
    return (x.value % phi.block_power(x.p, j)) // low


def truncate_x_j(x, j, phi, p=None):
    """
    Return x(j), the natural number formed by the digits 0 up to Phi(j) of x

    >>> truncate_x_j(PAdicApprox([2, 0, 2, 0, 2, 0], 3), 1, ScaleFn([1], 2))
    20

    :param x: p-adic integer, or natural number if p is given
    :type x: PAdicApprox, int
    :param j: Block level
    :type j: int
    :param phi: Scale function
    :type phi: ScaleFn
    :param p: Prime, only needed for natural number input
    :type p: int, Prime

    :return int:
    """
    phi = _as_scale(phi)
    x = _as_padic(x, 1 + phi(j), p)
    return x.value % phi.block_power(x.p, j)


def x_sequence(x, j_max, phi, p=None):
    """
    Path sequence x(0), x(1), ..., x(j_max)

    :return list:
    """
    phi = _as_scale(phi)
    x = _as_padic(x, 1 + phi(j_max), p)
    return [truncate_x_j(x, j, phi) for j in range(j_max + 1)]


def block_decomposition(x, j_max, phi, p=None):
    """
    Digit blocks rho(x;0), ..., rho(x;j_max) of x. Block 0 holds the digits 0 up to Phi(0).

    :return list:
    """
    phi = _as_scale(phi)
    x = _as_padic(x, 1 + phi(j_max), p)
    return [rho(x, j, phi) for j in range(j_max + 1)]


def jump_set(x, j_max, phi, p=None):
    """
    J(x) restricted to [0, j_max]: 0 and every level j where x(j) > x(j-1), i.e. where block j is nonzero

    >>> sorted(jump_set(PAdicApprox([2, 0, 0, 0, 2, 0], 3), 2, ScaleFn([1], 2)))
    [0, 2]

    :param x: p-adic integer, or natural number if p is given
    :type x: PAdicApprox, int
    :param j_max: Highest level
    :type j_max: int
    :param phi: Scale function
    :type phi: ScaleFn
    :param p: Prime, only needed for natural number input
    :type p: int, Prime

    :return set:
    """
    phi = _as_scale(phi)
    x = _as_padic(x, 1 + phi(j_max), p)
    return {0} | {j for j in range(1, j_max + 1) if rho(x, j, phi)}


def chi(phi, m, x, p=None):
    """
    Characteristic function of the ball around m of radius p^(-1-Phi(tau(m))): 1 if the first 1+Phi(tau(m)) digits
    of x equal those of m, else 0.

    >>> chi(identity_scale(), 5, PAdicApprox.from_natural(32, 3, 4), 3)
    1
    >>> chi(identity_scale(), 5, PAdicApprox.from_natural(8, 3, 4), 3)
    0

    :param phi: Scale function
    :type phi: ScaleFn
    :param m: Natural number
    :type m: int
    :param x: p-adic integer
    :type x: PAdicApprox
    :param p: Prime, must match prime of x if given
    :type p: int, Prime

    :return int:
    """
    phi = _as_scale(phi)
    if p is None:
        if not isinstance(x, PAdicApprox):
            raise ScaleError("Prime needed for natural number input")
        p = x.prime
    t = tau(phi, m, p)
    x = _as_padic(x, 1 + phi(t), p)
    return int(x.value % phi.block_power(x.p, t) == m)
