import sys

from exact_r2.cli import main

sys.exit(main())
