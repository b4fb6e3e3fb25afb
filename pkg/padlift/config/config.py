# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    CONFIG - Configuration settings
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

import os
import platform
import configparser
from pathlib import Path
from datetime import datetime

# General defaults
LOGLEVEL = 'WARNING'

# File locations
PADLIFT_CONFIG_FILE = ''
PADLIFT_INSTALL_DIR = Path(__file__).parents[1]
PADLIFT_DATA_DIR = ''
PADLIFT_DATABASE_DIR = ''
DEFAULT_DATABASE_CACHE = None
PADLIFT_LOG_FILE = ''

# Main
ENABLE_PADLIFT_LOGGING = True
ALLOW_DATABASE_THREADS = True

# Arithmetic
MAX_PRIME = 65521

# Brute-force oracle: largest search space p^K_search scanned in one query
MAX_SEARCH_SPACE = 10 ** 8
ORACLE_WORKERS = 1
ORACLE_CHUNK_SIZE = 4096

# Coefficient caching
COEFFICIENT_CACHING_ENABLED = True
COEFFICIENT_DATABASE_CACHING = False

# Command line
DEFAULT_OUTPUT_FORMAT = 'json'
OUTPUT_FORMATS = ['json', 'csv', 'table']

# UNITTESTS
UNITTESTS_FULL_WINDOW_TEST = False


def read_config():
    config = configparser.ConfigParser()

    def config_get(section, var, fallback, is_boolean=False):
        try:
            if is_boolean:
                val = config.getboolean(section, var, fallback=fallback)
            else:
                val = config.get(section, var, fallback=fallback)
            return val
        except Exception:
            return fallback

    global PADLIFT_INSTALL_DIR, PADLIFT_DATABASE_DIR, PADLIFT_DATA_DIR, PADLIFT_CONFIG_FILE
    global ALLOW_DATABASE_THREADS, DEFAULT_DATABASE_CACHE
    global PADLIFT_LOG_FILE, LOGLEVEL, ENABLE_PADLIFT_LOGGING
    global MAX_PRIME, MAX_SEARCH_SPACE, ORACLE_WORKERS, ORACLE_CHUNK_SIZE
    global COEFFICIENT_CACHING_ENABLED, COEFFICIENT_DATABASE_CACHING, DEFAULT_OUTPUT_FORMAT
    global UNITTESTS_FULL_WINDOW_TEST

    # Read settings from configuration file named in the environment or from ~/.padlift/
    config_file_name = os.environ.get('PADLIFT_CONFIG_FILE')
    if not config_file_name:
        PADLIFT_CONFIG_FILE = Path('~/.padlift/config.ini').expanduser()
    else:
        PADLIFT_CONFIG_FILE = Path(config_file_name)
        if not PADLIFT_CONFIG_FILE.is_absolute():
            PADLIFT_CONFIG_FILE = Path(Path.home(), '.padlift', PADLIFT_CONFIG_FILE)
        if not PADLIFT_CONFIG_FILE.exists():
            PADLIFT_CONFIG_FILE = Path(PADLIFT_INSTALL_DIR, 'data', config_file_name)
        if not PADLIFT_CONFIG_FILE.exists():
            raise IOError('PadLift configuration file not found: %s' % str(PADLIFT_CONFIG_FILE))
    data = config.read(str(PADLIFT_CONFIG_FILE))
    PADLIFT_DATA_DIR = Path(config_get('locations', 'data_dir', fallback='~/.padlift')).expanduser()

    # Coefficient cache database
    PADLIFT_DATABASE_DIR = Path(PADLIFT_DATA_DIR, config_get('locations', 'database_dir', 'database'))
    PADLIFT_DATABASE_DIR.mkdir(parents=True, exist_ok=True)
    default_databasefile_cache = DEFAULT_DATABASE_CACHE = \
        config_get('locations', 'default_databasefile_cache', fallback='padlift_cache.sqlite')
    if not (default_databasefile_cache.startswith('postgresql') or default_databasefile_cache.startswith('mysql')):
        DEFAULT_DATABASE_CACHE = str(Path(PADLIFT_DATABASE_DIR, default_databasefile_cache))
    ALLOW_DATABASE_THREADS = config_get('common', 'allow_database_threads', fallback=True, is_boolean=True)
    COEFFICIENT_CACHING_ENABLED = config_get('common', 'coefficient_caching_enabled',
                                             fallback=COEFFICIENT_CACHING_ENABLED, is_boolean=True)
    COEFFICIENT_DATABASE_CACHING = config_get('common', 'coefficient_database_caching',
                                              fallback=COEFFICIENT_DATABASE_CACHING, is_boolean=True)

    # Log settings
    ENABLE_PADLIFT_LOGGING = config_get('logs', 'enable_padlift_logging', fallback=True, is_boolean=True)
    PADLIFT_LOG_FILE = Path(PADLIFT_DATA_DIR, config_get('logs', 'log_file', fallback='padlift.log'))
    PADLIFT_LOG_FILE.parent.mkdir(parents=True, exist_ok=True)
    LOGLEVEL = config_get('logs', 'loglevel', fallback=LOGLEVEL)

    # Arithmetic and oracle settings
    MAX_PRIME = int(config_get('common', 'max_prime', fallback=MAX_PRIME))
    MAX_SEARCH_SPACE = int(config_get('common', 'max_search_space', fallback=MAX_SEARCH_SPACE))
    ORACLE_WORKERS = int(config_get('common', 'oracle_workers', fallback=ORACLE_WORKERS))
    ORACLE_CHUNK_SIZE = int(config_get('common', 'oracle_chunk_size', fallback=ORACLE_CHUNK_SIZE))
    DEFAULT_OUTPUT_FORMAT = config_get('common', 'default_output_format', fallback=DEFAULT_OUTPUT_FORMAT)
    if DEFAULT_OUTPUT_FORMAT not in OUTPUT_FORMATS:
        DEFAULT_OUTPUT_FORMAT = 'json'

    UNITTESTS_FULL_WINDOW_TEST = config_get('common', 'unittests_full_window_test', fallback=False,
                                            is_boolean=True)
    full_window_test = os.environ.get('UNITTESTS_FULL_WINDOW_TEST')
    if full_window_test:
        if full_window_test in [1, True, 'True', 'true', 'TRUE']:
            UNITTESTS_FULL_WINDOW_TEST = True

    if not data:
        return False
    return True


# Copy data and settings to default settings directory if install.log is not found
def initialize_lib():
    global PADLIFT_INSTALL_DIR, PADLIFT_DATA_DIR, PADLIFT_VERSION
    instlogfile = Path(PADLIFT_DATA_DIR, 'install.log')
    if instlogfile.exists():
        return

    with instlogfile.open('w') as f:
        install_message = "PadLift installed, check further logs in padlift.log\n\n" \
                          "If you remove this file all settings will be reset again to the default settings. " \
                          "This might be useful after an update or when problems occur.\n\n" \
                          "Installation parameters. Include these parameters when reporting bugs and issues:\n" \
                          "PadLift version   : %s\n" \
                          "Installation date : %s\n" \
                          "Python            : %s\n" \
                          "Compiler          : %s\n" \
                          "OS Version        : %s\n" \
                          "Platform          : %s\n" % \
                          (PADLIFT_VERSION, datetime.now().isoformat(), platform.python_version(),
                           platform.python_compiler(), platform.version(), platform.platform())
        f.write(install_message)

    # Copy data and settings file
    from shutil import copyfile
    for file in Path(PADLIFT_INSTALL_DIR, 'data').iterdir():
        if file.suffix not in ['.ini', '.json']:
            continue
        copyfile(str(file), str(Path(PADLIFT_DATA_DIR, file.name)))


# Initialize library
read_config()
PADLIFT_VERSION = Path(PADLIFT_INSTALL_DIR, 'config/VERSION').open().read().strip()
initialize_lib()
