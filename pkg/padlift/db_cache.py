# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
#    DB CACHE - SqlAlchemy database definitions for the coefficient cache
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

from sqlalchemy import create_engine
from sqlalchemy import Column, Integer, String, Text
from sqlalchemy.orm import sessionmaker, close_all_sessions
try:
    from sqlalchemy.orm import declarative_base
except ImportError:
    from sqlalchemy.ext.declarative import declarative_base
from urllib.parse import urlparse
from padlift.main import *


_logger = logging.getLogger(__name__)
Base = declarative_base()


class DbCacheError(Exception):
    """
    Handle coefficient cache database Exceptions

    """
    def __init__(self, msg=''):
        self.msg = msg
        _logger.error(msg)

    def __str__(self):
        return self.msg


class DbCache:
    """
    Cache Database object. Initialize database and open session when creating database object.

    Create new database if is doesn't exist yet

    """
    def __init__(self, db_uri=None):
        self.engine = None
        self.session = None
        if db_uri is None:
            db_uri = DEFAULT_DATABASE_CACHE
        elif not db_uri:
            return
        self.o = urlparse(db_uri)

        if not self.o.scheme or len(self.o.scheme) < 2:
            db_uri = 'sqlite:///%s' % db_uri
        if db_uri.startswith("sqlite://") and ALLOW_DATABASE_THREADS:
            db_uri += "&" if "?" in db_uri else "?"
            db_uri += "check_same_thread=False"
        try:
            self.engine = create_engine(db_uri, isolation_level='READ UNCOMMITTED')
            Session = sessionmaker(bind=self.engine)
            Base.metadata.create_all(self.engine)
        except Exception as e:
            raise DbCacheError("Could not open coefficient cache database %s: %s" % (db_uri, e))
        _logger.info("Using coefficient cache database %s" % db_uri)
        self.db_uri = db_uri
        self.session = Session()

    def get_coefficient(self, function_key, scale_key, m):
        """
        Return cached coefficient B(m) as (precision, value) tuple, or None if not in cache

        :param function_key: Canonical json function spec
        :type function_key: str
        :param scale_key: Canonical json scale spec
        :type scale_key: str
        :param m: Coefficient index
        :type m: int

        :return tuple, None:
        """
        if not self.session:
            return None
        row = self.session.query(DbCacheCoefficient).\
            filter_by(function_key=function_key, scale_key=scale_key, m=str(m)).scalar()
        if not row:
            return None
        return row.precision, int(row.value)

    def store_coefficient(self, function_key, scale_key, m, precision, value):
        """
        Store coefficient B(m) modulo p^precision. An existing entry is only replaced by one with higher precision.

        :return bool: True if stored
        """
        if not self.session:
            return False
        row = self.session.query(DbCacheCoefficient).\
            filter_by(function_key=function_key, scale_key=scale_key, m=str(m)).scalar()
        if row:
            if row.precision >= precision:
                return False
            row.precision = precision
            row.value = str(value)
        else:
            self.session.add(DbCacheCoefficient(function_key=function_key, scale_key=scale_key, m=str(m),
                                                precision=precision, value=str(value)))
        self.session.commit()
        return True

    def count(self):
        if not self.session:
            return 0
        return self.session.query(DbCacheCoefficient).count()

    def drop_db(self):
        self.session.commit()
        self.session.close()
        close_all_sessions()
        Base.metadata.drop_all(self.engine)


class DbCacheCoefficient(Base):
    """
    Coefficient Cache Table

    Stores generalized van der Put coefficients B(Phi,f;m) modulo p^precision. Large integers are stored as
    decimal strings.

    """
    __tablename__ = 'cache_coefficients'
    function_key = Column(String(255), primary_key=True, doc="Canonical json function spec")
    scale_key = Column(String(100), primary_key=True, doc="Canonical json scale function spec")
    m = Column(String(255), primary_key=True, doc="Coefficient index as decimal string")
    precision = Column(Integer, doc="Number of known p-adic digits of the coefficient")
    value = Column(Text, doc="Coefficient residue modulo p^precision as decimal string")
