import sys

from foldedcodes.cli import main

sys.exit(main())
