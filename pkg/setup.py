# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    PyPi Setup Tool
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

from setuptools import setup
from codecs import open
import os

here = os.path.abspath(os.path.dirname(__file__))
with open(os.path.join(here, 'padlift', 'config', 'VERSION'), encoding='utf-8') as f:
    version = f.read().strip()

# Get the long description from the relevant file
readmetxt = ''
try:
      with open(os.path.join(here, 'README.rst'), encoding='utf-8') as f:
          readmetxt = f.read()
except IOError:
      pass

install_requires = [
      'SQLAlchemy>=1.3.20',
]

setup(
      name='padlift',
      version=version,
      description='Hensel lifting for continuous p-adic functions',
      long_description=readmetxt,
      classifiers=[
            'Development Status :: 3 - Alpha',
            'Intended Audience :: Science/Research',
            'Intended Audience :: Education',
            'License :: OSI Approved :: GNU Affero General Public License v3 or later (AGPLv3+)',
            'Natural Language :: English',
            'Operating System :: OS Independent',
            'Programming Language :: Python :: 3.6',
            'Programming Language :: Python :: 3.7',
            'Programming Language :: Python :: 3.8',
            'Topic :: Scientific/Engineering :: Mathematics',
      ],
      author='PadLift developers',
      license='AGPL3',
      packages=['padlift', 'padlift.config', 'padlift.tools'],
      package_data={'padlift': ['data/*.ini', 'data/*.json', 'config/VERSION']},
      entry_points={
          'console_scripts': ['padlift=padlift.tools.cli:main']
      },
      install_requires=install_requires,
      test_suite='tests',
      include_package_data=True,
      keywords='p-adic hensel lifting van der put mahler number theory',
      zip_safe=False,
)
