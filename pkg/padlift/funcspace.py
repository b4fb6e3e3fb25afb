# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    FUNCSPACE - Continuous functions as exact digit oracles, modulus of continuity
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

from padlift.scale import *


_logger = logging.getLogger(__name__)

FUNCTION_FAMILIES = ['digit_linear', 'digit_cube', 'digit_power', 'digit_square', 'polynomial', 'constant']


class FunctionError(Exception):
    """
    Handle function oracle Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


def _parse_parameter(a, p, name='a'):
    """
    Normalize a p-adic parameter: integers and decimal strings are exact, PAdicApprox values are known to their
    precision only.
    """
    if isinstance(a, PAdicApprox):
        if a.prime != p:
            raise FunctionError("Parameter %s has p=%d, function has p=%d" % (name, a.p, int(p)))
        return a
    if isinstance(a, str):
        try:
            return int(a.strip())
        except ValueError:
            raise FunctionError("Parameter %s must be a decimal integer string, got '%s'" % (name, a))
    if isinstance(a, bool) or not isinstance(a, int):
        raise FunctionError("Parameter %s must be an integer or p-adic integer, got %s" % (name, type(a).__name__))
    return a


def _parameter_value(a, K, name='a'):
    if isinstance(a, PAdicApprox):
        if K > a.precision:
            raise FunctionError("Requested precision %d exceeds precision %d of parameter %s" %
                                (K, a.precision, name))
        return a.value
    return a


def _parameter_json(a):
    if isinstance(a, PAdicApprox):
        return a.as_dict()
    return str(a)


class FunctionOracle(object):
    """
    A continuous function f from Z_p to Z_p, represented by exact evaluation at natural numbers.

    The function evaluate(m, K) returns f(m) modulo p^K. Implementations must be exact: the residue equals the true
    value f(m) modulo p^K, repeated calls return equal results and results at different precisions agree on their
    common digits.

    Any callable func(m, K) returning an integer congruent to f(m) modulo p^K can be wrapped:

    >>> f = FunctionOracle(5, lambda m, K: m * m + 1, name='square_plus_one')
    >>> f.evaluate(3, 2)
    PAdicApprox(p=5, digits=[0, 2])

    """

    def __init__(self, prime, func=None, name='custom', params=None, scale=None):
        """
        :param prime: Prime number
        :type prime: int, Prime
        :param func: Callable func(m, K) returning f(m) modulo p^K as integer. Subclasses implement _evaluate instead
        :type func: callable
        :param name: Name of function family
        :type name: str
        :param params: Parameters of the function, used in reports
        :type params: dict
        :param scale: Declared scale function Phi with f in F(Phi), if known
        :type scale: ScaleFn, dict, None
        """
        if not isinstance(prime, Prime):
            prime = Prime(prime)
        self.prime = prime
        self.func = func
        self.name = name
        self.params = {} if params is None else params
        self.scale = None if scale is None else scale_from_spec(scale)
        self.spec = None

    def __repr__(self):
        return "<FunctionOracle(%s, p=%d, %s)>" % (self.name, self.p, self.params)

    @property
    def p(self):
        return self.prime.p

    @property
    def spec_key(self):
        """
        Canonical json string of the function spec. Only functions created from a spec have a key, used by the
        persistent coefficient cache.

        :return str, None:
        """
        if self.spec is None:
            return None
        return json.dumps(self.spec, sort_keys=True)

    def _evaluate(self, m, K):
        if self.func is None:
            raise FunctionError("Function oracle %s has no evaluation function" % self.name)
        return self.func(m, K)

    def residue(self, m, K):
        """
        Return f(m) modulo p^K as integer 0 <= r < p^K

        :param m: Natural number
        :type m: int
        :param K: Precision
        :type K: int

        :return int:
        """
        if isinstance(m, bool) or not isinstance(m, int) or m < 0:
            raise FunctionError("Functions are evaluated at natural numbers only, got %s" % m)
        if K < 1:
            raise FunctionError("Precision must be 1 or more, got %s" % K)
        return int(self._evaluate(m, K)) % self.prime.p ** K

    def evaluate(self, m, K):
        """
        Return f(m) modulo p^K as p-adic integer

        :param m: Natural number
        :type m: int
        :param K: Precision
        :type K: int

        :return PAdicApprox:
        """
        return PAdicApprox._from_residue(self.residue(m, K), self.prime, K)

    __call__ = evaluate

    def as_dict(self):
        """
        Get function description as dictionary

        :return dict:
        """
        return {
            'name': self.name,
            'p': self.p,
            'params': {k: _parameter_json(v) for k, v in self.params.items()},
            'scale': None if self.scale is None else self.scale.as_dict(),
        }


def _even_digit_sum(m, p, K, exponent=1):
    """
    Return sum of m_{2j}^exponent * p^j over j < K. Higher terms vanish modulo p^K.
    """
    total = 0
    weight = 1
    m %= p ** (2 * K)
    while m:
        m, d = divmod(m, p * p)
        total += (d % p) ** exponent * weight
        weight *= p
    return total


class DigitPowerSum(FunctionOracle):
    """
    The digit function f(x) = a + sum_j x_{2j}^e p^j, which reads the even digits of x. Its declared scale is
    Phi(n) = 2n+1: inputs agreeing up to digit 2n-1 give outputs agreeing modulo p^n.

    For e > 1 the map x -> x^e must be a bijection of Z/pZ, otherwise no digit correction set exists.

    """

    def __init__(self, p, a, exponent=1, name=None):
        """
        :param p: Prime number
        :type p: int, Prime
        :param a: Constant term, exact integer or p-adic integer known to its precision
        :type a: int, str, PAdicApprox
        :param exponent: Power applied to each even digit
        :type exponent: int
        :param name: Family name, derived from exponent if omitted
        :type name: str
        """
        if not isinstance(p, Prime):
            p = Prime(p)
        if isinstance(exponent, bool) or not isinstance(exponent, int) or exponent < 1:
            raise FunctionError("Exponent must be a positive integer, got %s" % exponent)
        if exponent > 1 and len({pow(x, exponent, p.p) for x in range(p.p)}) != p.p:
            raise FunctionError("Map x -> x^%d is not bijective modulo %d" % (exponent, p.p))
        self.a = _parse_parameter(a, p)
        self.exponent = exponent
        if name is None:
            if exponent == 1:
                name = 'digit_linear'
            elif exponent == 3 and p.p == 5:
                name = 'digit_cube'
            else:
                name = 'digit_power'
        params = {'a': self.a}
        if name == 'digit_power':
            params['exponent'] = exponent
        FunctionOracle.__init__(self, p, name=name, params=params, scale=ScaleFn([1], 2))

    def _evaluate(self, m, K):
        return _parameter_value(self.a, K) + _even_digit_sum(m, self.p, K, self.exponent)


class DigitSquare(FunctionOracle):
    """
    The square digit function f(x) = -a + (sum_j x_{2j} p^j)^2 with declared scale Phi(n) = 2n+1.

    Requires a = 1 modulo p for odd p and a = 1 modulo 8 for p = 2, so f has roots and is uniformly approximable
    on the residue class of a root.

    """

    def __init__(self, p, a):
        """
        :param p: Prime number
        :type p: int, Prime
        :param a: Constant, 1 modulo p (odd p) or 1 modulo 8 (p = 2)
        :type a: int, str, PAdicApprox
        """
        if not isinstance(p, Prime):
            p = Prime(p)
        self.a = _parse_parameter(a, p)
        check_K = 3 if p.p == 2 else 1
        a_low = _parameter_value(self.a, check_K)
        if p.p == 2 and a_low % 8 != 1:
            raise FunctionError("digit_square with p=2 requires a = 1 mod 8, got a = %d mod 8" % (a_low % 8))
        if p.p != 2 and a_low % p.p != 1:
            raise FunctionError("digit_square requires a = 1 mod %d, got a = %d mod %d" % (p.p, a_low % p.p, p.p))
        FunctionOracle.__init__(self, p, name='digit_square', params={'a': self.a}, scale=ScaleFn([1], 2))

    def _evaluate(self, m, K):
        s = _even_digit_sum(m, self.p, K)
        return s * s - _parameter_value(self.a, K)


class Polynomial(FunctionOracle):
    """
    Polynomial Q(X) = c_0 + c_1 X + ... + c_d X^d with p-adic integer coefficients, evaluated with Horner's rule.
    Polynomials are 1-Lipschitz, the declared scale is the identity.

    >>> Polynomial(7, [-2, 0, 1]).residue(3, 2)
    7

    """

    def __init__(self, p, coeffs):
        """
        :param p: Prime number
        :type p: int, Prime
        :param coeffs: Coefficients, lowest degree first
        :type coeffs: list of int, str, PAdicApprox
        """
        if not isinstance(p, Prime):
            p = Prime(p)
        self.coeffs = [_parse_parameter(c, p, 'c%d' % i) for i, c in enumerate(coeffs)]
        if not any(isinstance(c, PAdicApprox) or c for c in self.coeffs[1:]):
            raise FunctionError("Polynomial needs at least one nonconstant coefficient")
        FunctionOracle.__init__(self, p, name='polynomial', params={'coeffs': self.coeffs},
                                scale=identity_scale())

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def _evaluate(self, m, K):
        modulus = self.prime.p ** K
        r = 0
        for i in range(len(self.coeffs) - 1, -1, -1):
            r = (r * m + _parameter_value(self.coeffs[i], K, 'c%d' % i)) % modulus
        return r

    def derivative(self):
        """
        Formal derivative Q'(X). Returns a FunctionOracle which is a Polynomial if Q' is nonconstant.

        :return FunctionOracle:
        """
        dcoeffs = [c * i for i, c in enumerate(self.coeffs)][1:]
        if len(dcoeffs) > 1 and any(isinstance(c, PAdicApprox) or c for c in dcoeffs[1:]):
            return Polynomial(self.prime, dcoeffs)
        return constant(self.prime, dcoeffs[0])


def digit_linear(p, a):
    """
    f(x) = a + sum_j x_{2j} p^j, with declared scale Phi(n) = 2n+1

    >>> digit_linear(3, 1).residue(9, 3)
    4

    :return DigitPowerSum:
    """
    return DigitPowerSum(p, a, 1)


def digit_cube(a, p=5):
    """
    f(x) = a + sum_j x_{2j}^3 5^j over Z_5, with declared scale Phi(n) = 2n+1

    >>> digit_cube(1).residue(4, 2)
    15

    :return DigitPowerSum:
    """
    if int(p) != 5:
        raise FunctionError("digit_cube is defined for p=5 only, use digit_power for other primes")
    return DigitPowerSum(5, a, 3)


def digit_power(p, a, exponent):
    """
    f(x) = a + sum_j x_{2j}^e p^j. The map x -> x^e modulo p must be bijective.

    :return DigitPowerSum:
    """
    return DigitPowerSum(p, a, exponent, name='digit_power')


def digit_square(p, a):
    """
    f(x) = -a + (sum_j x_{2j} p^j)^2, with declared scale Phi(n) = 2n+1

    :return DigitSquare:
    """
    return DigitSquare(p, a)


def polynomial(p, coeffs):
    """
    Polynomial oracle with coefficients lowest degree first

    :return Polynomial:
    """
    return Polynomial(p, coeffs)


class ConstantFunction(FunctionOracle):
    """
    Constant function f(x) = c. All van der Put coefficients B(m) with m >= p^(1+Phi(0)) vanish, so a constant
    fits every scale function.

    """

    def __init__(self, p, c):
        if not isinstance(p, Prime):
            p = Prime(p)
        self.c = _parse_parameter(c, p, 'c')
        FunctionOracle.__init__(self, p, name='constant', params={'c': self.c}, scale=identity_scale())

    def _evaluate(self, m, K):
        return _parameter_value(self.c, K, 'c')


def constant(p, c):
    """
    Constant function f(x) = c

    :return ConstantFunction:
    """
    return ConstantFunction(p, c)


def function_from_spec(spec):
    """
    Create function oracle from json function spec, for instance

    * {"family": "digit_linear", "p": 3, "a": "1"}
    * {"family": "digit_cube", "a": "2"}
    * {"family": "digit_power", "p": 7, "a": "1", "exponent": 5}
    * {"family": "digit_square", "p": 2, "a": "17"}
    * {"family": "polynomial", "p": 7, "coeffs": ["-2", "0", "1"]}
    * {"family": "constant", "p": 3, "c": "5"}

    :param spec: Dictionary or json string
    :type spec: dict, str

    :return FunctionOracle:
    """
    if isinstance(spec, FunctionOracle):
        return spec
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.decoder.JSONDecodeError as e:
            raise FunctionError("Invalid function spec %s: %s" % (spec, e))
    if not isinstance(spec, dict) or 'family' not in spec:
        raise FunctionError("Function spec must be a dictionary with a 'family' key, got %s" % spec)
    family = spec['family']
    if family not in FUNCTION_FAMILIES:
        raise FunctionError("Unknown function family '%s', use one of %s" % (family, FUNCTION_FAMILIES))
    try:
        if family == 'digit_cube':
            f = digit_cube(spec['a'], spec.get('p', 5))
        elif family == 'digit_linear':
            f = digit_linear(spec['p'], spec['a'])
        elif family == 'digit_power':
            f = digit_power(spec['p'], spec['a'], int(spec['exponent']))
        elif family == 'digit_square':
            f = digit_square(spec['p'], spec['a'])
        elif family == 'polynomial':
            f = polynomial(spec['p'], spec['coeffs'])
        else:
            f = constant(spec['p'], spec['c'])
    except KeyError as e:
        raise FunctionError("Function spec for family '%s' misses key %s" % (family, e))
    f.spec = spec
    return f


class ModulusTable(object):
    """
    Window estimates of the modulus of continuity psi(f;n), the least l such that inputs agreeing modulo p^l give
    outputs agreeing modulo p^n.

    Entries are certified on a finite window only: all inputs below p^search_depth. They are upper bounds for psi
    restricted to the window, never labelled as the true psi over Z_p.

    """

    def __init__(self, entries, search_depth=None, function_name=''):
        """
        :param entries: Mapping n -> l for n = 1, 2, ...
        :type entries: dict
        :param search_depth: Exhaustive window exponent, None if entries are known analytically
        :type search_depth: int, None
        :param function_name: Name of the function
        :type function_name: str
        """
        self.entries = {int(n): int(l) for n, l in dict(entries).items()}
        if not self.entries:
            raise FunctionError("Modulus table is empty")
        ns = sorted(self.entries)
        if ns != list(range(1, len(ns) + 1)):
            raise FunctionError("Modulus table must cover n = 1..%d without gaps, got %s" % (len(ns), ns))
        for n in ns[1:]:
            if self.entries[n] < self.entries[n - 1]:
                raise FunctionError("Modulus of continuity must be non-decreasing, psi(%d)=%d < psi(%d)=%d" %
                                    (n, self.entries[n], n - 1, self.entries[n - 1]))
        self.search_depth = search_depth
        self.function_name = function_name

    def __getitem__(self, n):
        return self.entries[n]

    def __len__(self):
        return len(self.entries)

    def __repr__(self):
        return "<ModulusTable(%s, window=%s)>" % (self.entries, self.search_depth)

    @property
    def window_certified(self):
        return self.search_depth is not None

    def as_dict(self):
        return {
            'function': self.function_name,
            'psi': {str(n): l for n, l in sorted(self.entries.items())},
            'window_certified': self.window_certified,
            'search_depth': self.search_depth,
        }


def estimate_psi(f, n, search_depth):
    """
    Window estimate of psi(f;n): the least l < search_depth such that every pair x, y < p^search_depth with
    x = y modulo p^l satisfies f(x) = f(y) modulo p^n.

    Inputs below p^search_depth are grouped by their residue modulo p^l, within a group f must be constant modulo
    p^n. With l = search_depth every group is a single input, so that value is not tested.

    >>> estimate_psi(polynomial(3, [0, 1]), 2, 4)
    2

    :param f: Function oracle
    :type f: FunctionOracle
    :param n: Output precision
    :type n: int
    :param search_depth: Window exponent
    :type search_depth: int

    :return int:
    """
    if n < 1:
        raise FunctionError("psi(f;n) is defined for n >= 1, got %d" % n)
    p = f.p
    size = p ** search_depth
    if size > MAX_SEARCH_SPACE:
        raise FunctionError("Window %d^%d exceeds search space limit %d" % (p, search_depth, MAX_SEARCH_SPACE))
    values = [f.residue(x, n) for x in range(size)]
    for l in range(search_depth):
        step = p ** l
        if all(values[x] == values[x % step] for x in range(step, size)):
            _logger.debug("Window estimate psi(%s;%d) = %d at depth %d" % (f.name, n, l, search_depth))
            return l
    raise FunctionError("Function %s too rough for window %d^%d: no l < %d works for n=%d" %
                        (f.name, p, search_depth, search_depth, n))


def modulus_table(f, n_max, search_depth):
    """
    Window estimates of psi(f;n) for n = 1..n_max

    :return ModulusTable:
    """
    return ModulusTable({n: estimate_psi(f, n, search_depth) for n in range(1, n_max + 1)},
                        search_depth=search_depth, function_name=f.name)


def phi_from_psi(table):
    """
    Build a scale function Phi with f in F(Phi) from the modulus of continuity:
    Phi(0) = max(0, psi(1) - 1) and Phi(n) = max(1 + Phi(n-1), psi(n+1) - 1).

    A table covering n = 1..N+1 determines Phi(0), ..., Phi(N). Beyond the table Phi continues with the slope of
    its last step.

    >>> phi_from_psi(ModulusTable({1: 2, 2: 4, 3: 6, 4: 8}))
    ScaleFn(table=[1], tail_slope=2)

    :param table: Modulus table or mapping n -> psi(f;n)
    :type table: ModulusTable, dict

    :return ScaleFn:
    """
    if not isinstance(table, ModulusTable):
        table = ModulusTable(table)
    values = [max(0, table[1] - 1)]
    for n in range(1, len(table)):
        values.append(max(1 + values[n - 1], table[n + 1] - 1))
    slope = values[-1] - values[-2] if len(values) > 1 else 1
    return ScaleFn(values, slope)
