"""Entry point for ``python -m orthocheck``."""

import sys

from .cli import main

sys.exit(main())
