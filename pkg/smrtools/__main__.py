# -*- coding: utf-8 -*-
"""Run the SMRTools command line interface with ``python -m smrtools``."""
import sys

from smrtools.cli import main

sys.exit(main())
