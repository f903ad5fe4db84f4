import sys

from crossunion.cli import main

sys.exit(main())
