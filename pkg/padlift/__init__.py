# -*- coding: utf-8 -*-
#
#    PadLift - Hensel lifting for continuous p-adic functions
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

import padlift.padic
import padlift.scale
import padlift.funcspace
import padlift.vdp
import padlift.hensel
import padlift.approx
import padlift.oracle
import padlift.tools

__all__ = ["padic", "scale", "funcspace", "vdp", "hensel", "approx", "oracle", "tools"]
