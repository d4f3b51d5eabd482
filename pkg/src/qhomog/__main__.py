import sys

from qhomog.scenarios.cli import main

sys.exit(main())
