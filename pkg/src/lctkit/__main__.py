import sys

from lctkit.cli import main

sys.exit(main())
