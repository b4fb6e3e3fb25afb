# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    MAIN - Load configs, initialize logging
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

# Do not remove any of the imports below, used by other files
import os
import sys
import json
import logging
from logging.handlers import RotatingFileHandler
from padlift.config.config import *


# Initialize logging
logger = logging.getLogger('padlift')
logger.setLevel(LOGLEVEL)

if ENABLE_PADLIFT_LOGGING:
    handler = RotatingFileHandler(str(PADLIFT_LOG_FILE), maxBytes=100 * 1024 * 1024, backupCount=2)
    formatter = logging.Formatter('%(asctime)s %(levelname)s %(funcName)s(%(lineno)d) %(message)s',
                                  datefmt='%Y/%m/%d %H:%M:%S')
    handler.setFormatter(formatter)
    handler.setLevel(LOGLEVEL)
    logger.addHandler(handler)

    _logger = logging.getLogger(__name__)
    logger.info('WELCOME TO PADLIFT - HENSEL LIFTING FOR CONTINUOUS P-ADIC FUNCTIONS')
    logger.info('Version: %s' % PADLIFT_VERSION)
    logger.info('Read config from: %s' % PADLIFT_CONFIG_FILE)
    logger.info('Coefficient cache database: %s' % DEFAULT_DATABASE_CACHE)
    logger.info('Logging to: %s' % PADLIFT_LOG_FILE)
    logger.info('Directory for data files: %s' % PADLIFT_DATA_DIR)


def json_value(value):
    """
    Convert a value to something json.dumps can write without losing precision. Integers become decimal strings,
    objects with an as_dict method are converted, containers are converted recursively.

    >>> json_value({'m': 3 ** 50, 'digits': [2, 0, 2]})
    {'m': '717897987691852588770249', 'digits': ['2', '0', '2']}

    :param value: Any result value
    :type value: int, list, tuple, set, dict, object

    :return: Structure of dicts, lists, strings, booleans and None
    """
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return str(value)
    if hasattr(value, 'as_dict'):
        return json_value(value.as_dict())
    if isinstance(value, dict):
        return {str(k): json_value(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [json_value(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [json_value(v) for v in value]
    return str(value)


class WindowReport(object):
    """
    Result of a check which is exhaustive on a finite window only.

    A report is True when the check passed on the whole window. A failing report holds the first counterexample
    in the fixed scan order of the check and a human readable reason. Reports never claim more than the window: a
    PASS is a window certificate, not a proof for all p-adic integers.

    """

    def __init__(self, passed, window, counterexample=None, reason='', details=None):
        """
        :param passed: Did the check pass on the whole window
        :type passed: bool
        :param window: Description of the tested window, for instance {'m_max': 27}
        :type window: dict
        :param counterexample: First failing item, for instance {'m': 9, 'tau': 2, 'valuation': 1}
        :type counterexample: dict, None
        :param reason: Description of the failure
        :type reason: str
        :param details: Extra data produced by the check
        :type details: dict, None
        """
        self.passed = bool(passed)
        self.window = window
        self.counterexample = counterexample
        self.reason = reason
        self.details = {} if details is None else details

    def __bool__(self):
        return self.passed

    def __repr__(self):
        if self.passed:
            return "<WindowReport(PASS, window=%s)>" % self.window
        return "<WindowReport(FAIL, counterexample=%s)>" % self.counterexample

    @property
    def status(self):
        return 'PASS' if self.passed else 'FAIL'

    def as_dict(self):
        """
        Get report as dictionary, large integers are represented as decimal strings

        :return dict:
        """
        return {
            'status': self.status,
            'window': json_value(self.window),
            'counterexample': json_value(self.counterexample),
            'reason': self.reason,
            'details': json_value(self.details),
        }

    def as_json(self):
        """
        Get report as json formatted string

        :return str:
        """
        return json.dumps(self.as_dict(), indent=4)
