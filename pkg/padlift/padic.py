# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    P-ADIC - Fixed precision p-adic integers
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
from padlift.main import *


_logger = logging.getLogger(__name__)


class PAdicError(Exception):
    """
    Handle p-adic arithmetic Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


@lru_cache(maxsize=1024)
def is_prime(n):
    """
    Check primality of a small integer by trial division

    >>> is_prime(65521)
    True
    >>> is_prime(65535)
    False

    :param n: Integer to check
    :type n: int

    :return bool:
    """
    if n < 2:
        return False
    if n < 4:
        return True
    if not n % 2:
        return False
    d = 3
    while d * d <= n:
        if not n % d:
            return False
        d += 2
    return True


class Prime(object):
    """
    A prime number p used as base of p-adic integers. Primes are checked at construction and limited to MAX_PRIME
    so digits always fit in a machine word.

    >>> Prime(7)
    Prime(7)
    >>> Prime(7) == 7
    True

    """

    def __init__(self, p):
        """
        :param p: Prime number, an integer between 2 and MAX_PRIME or a Prime object
        :type p: int, Prime
        """
        if isinstance(p, Prime):
            p = p.p
        if isinstance(p, bool) or not isinstance(p, int):
            raise PAdicError("Prime must be an integer, not %s" % type(p).__name__)
        if p < 2 or p > MAX_PRIME:
            raise PAdicError("Prime %d out of range, must be between 2 and %d" % (p, MAX_PRIME))
        if not is_prime(p):
            raise PAdicError("%d is not a prime number" % p)
        self.p = p

    def __repr__(self):
        return "Prime(%d)" % self.p

    def __int__(self):
        return self.p

    def __index__(self):
        return self.p

    def __eq__(self, other):
        if isinstance(other, Prime):
            return self.p == other.p
        if isinstance(other, int):
            return self.p == other
        return NotImplemented

    def __hash__(self):
        return hash(self.p)

    def power(self, k):
        """
        Return p to the power k

        :param k: Nonnegative exponent
        :type k: int

        :return int:
        """
        return self.p ** k


class ValuationBound(object):
    """
    Marker returned as valuation of a residue which is zero at its precision. The true valuation is only known to
    be at least the precision K, it is never equal to K by assumption.

    >>> ValuationBound(4)
    ValuationBound(>=4)

    """

    def __init__(self, bound):
        self.bound = bound

    def __repr__(self):
        return "ValuationBound(>=%d)" % self.bound

    def __str__(self):
        return ">=%d" % self.bound

    def __eq__(self, other):
        return isinstance(other, ValuationBound) and self.bound == other.bound

    def __hash__(self):
        return hash(('ValuationBound', self.bound))


class PAdicApprox(object):
    """
    A p-adic integer known exactly modulo p^K.

    The residue is stored as integer value 0 <= value < p^K, the base-p digits are derived from it with index 0 the
    least significant digit. Values are immutable, arithmetic returns new objects at the minimum precision of the
    operands.

    >>> x = PAdicApprox([2, 0, 2, 0, 2, 0], 3)
    >>> x.value
    182
    >>> x
    PAdicApprox(p=3, digits=[2, 0, 2, 0, 2, 0])

    """

    @classmethod
    def _from_residue(cls, value, prime, precision):
        x = cls.__new__(cls)
        x.prime = prime
        x.precision = precision
        x.modulus = prime.p ** precision
        x.value = value % x.modulus
        x._digits = None
        return x

    @classmethod
    def from_natural(cls, m, p, K):
        """
        Create p-adic approximation of a natural number m modulo p^K

        >>> PAdicApprox.from_natural(182, 3, 6).digits
        [2, 0, 2, 0, 2, 0]

        :param m: Nonnegative integer
        :type m: int
        :param p: Prime number
        :type p: int, Prime
        :param K: Precision, number of known digits
        :type K: int

        :return PAdicApprox:
        """
        if not isinstance(m, int) or m < 0:
            raise PAdicError("Natural number expected, got %s" % m)
        return cls.from_int(m, p, K)

    @classmethod
    def from_int(cls, n, p, K):
        """
        Create p-adic approximation of any integer modulo p^K. Negative integers are p-adic integers as well,
        -1 has all digits equal to p-1.

        :param n: Integer
        :type n: int
        :param p: Prime number
        :type p: int, Prime
        :param K: Precision, number of known digits
        :type K: int

        :return PAdicApprox:
        """
        if not isinstance(p, Prime):
            p = Prime(p)
        if not isinstance(K, int) or K < 1:
            raise PAdicError("Precision must be a positive integer, got %s" % K)
        return cls._from_residue(int(n), p, K)

    @classmethod
    def from_dict(cls, d):
        """
        Create p-adic approximation from dictionary with prime and digits, i.e. {"p": 3, "digits": [2, 0, 2, 0]}

        :param d: Dictionary with keys 'p' and 'digits'
        :type d: dict

        :return PAdicApprox:
        """
        try:
            return cls(d['digits'], d['p'])
        except (KeyError, TypeError) as e:
            raise PAdicError("Invalid p-adic dictionary %s: %s" % (d, e))

    def __init__(self, digits, prime):
        """
        :param digits: Base-p digits, index 0 is the least significant digit. Length is the precision
        :type digits: list of int
        :param prime: Prime number
        :type prime: int, Prime
        """
        if not isinstance(prime, Prime):
            prime = Prime(prime)
        digits = list(digits)
        if not digits:
            raise PAdicError("At least one digit is needed, precision must be 1 or more")
        value = 0
        for d in reversed(digits):
            if not isinstance(d, int) or not 0 <= d < prime.p:
                raise PAdicError("Digit %s out of range for p=%d" % (d, prime.p))
            value = value * prime.p + d
        self.prime = prime
        self.precision = len(digits)
        self.modulus = prime.p ** self.precision
        self.value = value
        self._digits = digits

    @property
    def p(self):
        return self.prime.p

    @property
    def digits(self):
        if self._digits is None:
            digits = []
            v = self.value
            for _ in range(self.precision):
                v, d = divmod(v, self.prime.p)
                digits.append(d)
            self._digits = digits
        return list(self._digits)

    def __repr__(self):
        return "PAdicApprox(p=%d, digits=%s)" % (self.p, self.digits)

    def __str__(self):
        return str(self.value)

    def __int__(self):
        return self.value

    def __len__(self):
        return self.precision

    def __eq__(self, other):
        if not isinstance(other, PAdicApprox):
            return NotImplemented
        return self.prime == other.prime and self.precision == other.precision and self.value == other.value

    def __hash__(self):
        return hash((self.prime.p, self.precision, self.value))

    def _coerce(self, other):
        if isinstance(other, PAdicApprox):
            if other.prime != self.prime:
                raise PAdicError("Prime mismatch: p=%d and p=%d" % (self.p, other.p))
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return PAdicApprox._from_residue(other, self.prime, self.precision)
        raise PAdicError("Cannot combine p-adic integer with %s" % type(other).__name__)

    def __add__(self, other):
        return add(self, self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other):
        return sub(self, self._coerce(other))

    def __rsub__(self, other):
        return sub(self._coerce(other), self)

    def __mul__(self, other):
        return mul(self, self._coerce(other))

    __rmul__ = __mul__

    def __neg__(self):
        return neg(self)

    def is_zero(self):
        """
        Is residue zero at current precision?

        :return bool:
        """
        return self.value == 0

    def valuation(self):
        return valuation(self)

    def is_divisible(self, n):
        """
        Is this p-adic integer divisible by p^n? The answer is only certain if n does not exceed the precision.

        :param n: Exponent
        :type n: int

        :return bool:
        """
        if n <= 0:
            return True
        if n > self.precision:
            raise PAdicError("Cannot decide divisibility by p^%d at precision %d" % (n, self.precision))
        return not self.value % (self.prime.p ** n)

    def truncate(self, K):
        """
        Reduce precision to K digits

        >>> PAdicApprox([2, 0, 2, 1], 3).truncate(2).digits
        [2, 0]

        :param K: New precision, at most the current precision
        :type K: int

        :return PAdicApprox:
        """
        if K < 1 or K > self.precision:
            raise PAdicError("Cannot truncate precision %d to %d" % (self.precision, K))
        return PAdicApprox._from_residue(self.value, self.prime, K)

    def shift_down(self, t):
        """
        Exact division by p^t. The result has precision K - t, so t must be smaller than the precision and the
        residue must be divisible by p^t.

        >>> PAdicApprox.from_natural(6, 3, 4).shift_down(1).digits
        [2, 0, 0]

        :param t: Number of digits to shift
        :type t: int

        :return PAdicApprox:
        """
        if t == 0:
            return self
        if t < 0 or t >= self.precision:
            raise PAdicError("Cannot shift %d digits at precision %d" % (t, self.precision))
        if not self.is_divisible(t):
            raise PAdicError("Residue %d is not divisible by %d^%d" % (self.value, self.p, t))
        return PAdicApprox._from_residue(self.value // self.prime.p ** t, self.prime, self.precision - t)

    def as_dict(self):
        """
        Get p-adic integer as dictionary with prime and digits

        :return dict:
        """
        return {'p': self.p, 'digits': self.digits}

    def as_json(self):
        """
        Get p-adic integer as json formatted string

        :return str:
        """
        return json.dumps(self.as_dict())


def from_natural(m, p, K):
    """
    Base-p expansion of natural number m modulo p^K, see :func:`PAdicApprox.from_natural`

    >>> from_natural(7, 2, 4).digits
    [1, 1, 1, 0]

    :return PAdicApprox:
    """
    return PAdicApprox.from_natural(m, p, K)


def valuation(x):
    """
    p-adic valuation of x: index of the first nonzero digit. For a residue which is zero at precision K a
    ValuationBound(K) marker is returned, never the number K itself.

    >>> valuation(PAdicApprox([0, 0, 1, 2], 3))
    2
    >>> valuation(PAdicApprox([0, 0, 0, 0], 3))
    ValuationBound(>=4)

    :param x: p-adic integer
    :type x: PAdicApprox

    :return int, ValuationBound:
    """
    if x.value == 0:
        return ValuationBound(x.precision)
    v = 0
    value = x.value
    p = x.prime.p
    while not value % p:
        value //= p
        v += 1
    return v


def _check_pair(x, y):
    if not isinstance(x, PAdicApprox) or not isinstance(y, PAdicApprox):
        raise PAdicError("Two p-adic integers expected")
    if x.prime != y.prime:
        raise PAdicError("Prime mismatch: p=%d and p=%d" % (x.p, y.p))
    return min(x.precision, y.precision)


def add(x, y):
    """
    Sum of two p-adic integers at the minimum precision of the operands

    :return PAdicApprox:
    """
    K = _check_pair(x, y)
    return PAdicApprox._from_residue(x.value + y.value, x.prime, K)


def sub(x, y):
    """
    Difference of two p-adic integers at the minimum precision of the operands

    :return PAdicApprox:
    """
    K = _check_pair(x, y)
    return PAdicApprox._from_residue(x.value - y.value, x.prime, K)


def mul(x, y):
    """
    Product of two p-adic integers at the minimum precision of the operands

    >>> mul(PAdicApprox([2, 1], 3), PAdicApprox([2, 1], 3)).digits
    [1, 2]

    :return PAdicApprox:
    """
    K = _check_pair(x, y)
    return PAdicApprox._from_residue(x.value * y.value, x.prime, K)


def neg(x):
    """
    Additive inverse

    >>> neg(from_natural(1, 3, 4)).digits
    [2, 2, 2, 2]

    :return PAdicApprox:
    """
    return PAdicApprox._from_residue(-x.value, x.prime, x.precision)


def digits_of(m, p, count=None):
    """
    Base-p digits of a natural number, least significant first. Returns count digits if count is given, otherwise
    all digits of m ([0] for m = 0).

    >>> digits_of(20, 3)
    [2, 0, 2]

    :param m: Natural number
    :type m: int
    :param p: Base
    :type p: int
    :param count: Number of digits to return
    :type count: int

    :return list:
    """
    digits = []
    if count is None:
        while True:
            m, d = divmod(m, p)
            digits.append(d)
            if not m:
                return digits
    for _ in range(count):
        m, d = divmod(m, p)
        digits.append(d)
    return digits
